# SPDX-License-Identifier: MIT
# polynomial helpers mod P and Cantor's algorithm for y^2=f(x), genus 2
import random
P = (1 << 61) - 1  # prime, P % 4 == 3
def inv(a): return pow(a % P, P - 2, P)
def trim(a):
    a = [x % P for x in a]
    while a and a[-1] == 0: a.pop()
    return a
def add(a, b):
    n = max(len(a), len(b)); return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])
def neg(a): return trim([-x for x in a])
def sub(a, b): return add(a, neg(b))
def mul(a, b):
    if not a or not b: return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b): r[i + j] = (r[i + j] + x * y) % P
    return trim(r)
def scal(c, a): return trim([c * x for x in a])
def divmod_(a, b):
    a = trim(a); b = trim(b); q = [0] * max(0, len(a) - len(b) + 1); il = inv(b[-1])
    a = a[:]
    while len(a) >= len(b) and a:
        c = a[-1] * il % P; d = len(a) - len(b); q[d] = c
        for i, y in enumerate(b): a[d + i] = (a[d + i] - c * y) % P
        a = trim(a)
    return trim(q), a
def monic(a): return scal(inv(a[-1]), a)
def xgcd(a, b):
    # returns g, u, v with u a + v b = g monic
    r0, r1, s0, s1, t0, t1 = trim(a), trim(b), [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r; s0, s1 = s1, sub(s0, mul(q, s1)); t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0: return [], [], []
    c = inv(r0[-1]); return scal(c, r0), scal(c, s0), scal(c, t0)
def cantor_add(f, D1, D2):
    a1, b1 = D1; a2, b2 = D2
    d0, e1, e2 = xgcd(a1, a2)
    d, c1, c2 = xgcd(d0, add(b1, b2))
    s1, s2, s3 = mul(c1, e1), mul(c1, e2), c2
    a = divmod_(mul(a1, a2), mul(d, d))[0]
    num = add(add(mul(mul(s1, a1), b2), mul(mul(s2, a2), b1)), mul(s3, add(mul(b1, b2), f)))
    b = divmod_(divmod_(num, d)[0], a)[1]
    while len(a) - 1 > 2:
        a = monic(divmod_(sub(f, mul(b, b)), a)[0])
        b = divmod_(neg(b), a)[1]
    return (monic(a), divmod_(b, a)[1])
def cantor_mul(f, n, D):
    R = ([1], []); Q = D
    while n:
        if n & 1: R = cantor_add(f, R, Q)
        Q = cantor_add(f, Q, Q); n >>= 1
    return R
def sqrt(a):
    a %= P; r = pow(a, (P + 1) // 4, P)
    return r if r * r % P == a else None
def rnd(): return random.randrange(P)
def random_instance():
    """random curve mu0..mu4 and a point (x1,y1)+(x2,y2)"""
    m2, m3, m4, x1, x2, y1, y2 = [rnd() for _ in range(7)]
    # f(xi) = yi^2 -> m1 xi + m0 = yi^2 - (xi^5+m4 xi^4+m3 xi^3+m2 xi^2)
    r1 = (y1*y1 - (pow(x1,5,P)+m4*pow(x1,4,P)+m3*pow(x1,3,P)+m2*x1*x1)) % P
    r2 = (y2*y2 - (pow(x2,5,P)+m4*pow(x2,4,P)+m3*pow(x2,3,P)+m2*x2*x2)) % P
    m1 = (r1 - r2) * inv(x1 - x2) % P; m0 = (r1 - m1 * x1) % P
    mu = [m0, m1, m2, m3, m4]
    return mu, (x1, y1), (x2, y2)
def fpoly(mu): return trim(mu + [1])
def mumford_from_points(p1, p2):
    (x1, y1), (x2, y2) = p1, p2
    a = trim([x1 * x2, -(x1 + x2), 1])
    b1 = (y2 - y1) * inv(x2 - x1) % P; b0 = (y1 - b1 * x1) % P
    return (a, trim([b0, b1]))
def random_point_on(mu):
    f = fpoly(mu)
    while True:
        x = rnd(); v = 0
        for c in reversed(f): v = (v * x + c) % P
        y = sqrt(v)
        if y is not None: return (x, y)
def coords(D):
    """(s,t,b1,b0) of a weight-2 Mumford point"""
    a, b = D
    assert len(a) == 3
    b = b + [0] * (2 - len(b))
    return {'s': -a[1] % P, 't': a[0], 'b1': b[1], 'b0': b[0]}
