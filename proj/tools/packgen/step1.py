# SPDX-License-Identifier: MIT
import random, flint
from fp import *
import ring
from ring import s, t, b1, b0, m, deriv, evalp, NAMES
random.seed(1)
def pt_dict(mu, D):
    c = coords(D); d = dict(c)
    for i in range(5): d['m%d' % i] = mu[i]
    return d
samples = []
for _ in range(40):
    mu, p1, p2 = random_instance()
    samples.append((mu, mumford_from_points(p1, p2)))
# commutation
for g in ['s', 't', 'b1', 'b0']:
    x = ring.G[g]
    c = deriv(deriv(x, 1), 2) - deriv(deriv(x, 2), 1)
    print(g, 'commutator zero on J:', all(evalp(c, pt_dict(mu, Dm)) == 0 for mu, Dm in samples[:10]))
# p11: D2 X = D1(-t), X weight 6
cands = [s**3, s*t, b1**2, m[4]*s**2, m[4]*t, m[3]*s, m[4]**2*s]
target = deriv(-t, 1)
rows = []; rhs = []
for mu, Dm in samples:
    d = pt_dict(mu, Dm)
    rows.append([evalp(deriv(c, 2), d) for c in cands]); rhs.append(evalp(target, d))
M = flint.nmod_mat(rows, P); v = flint.nmod_mat([[r] for r in rhs], P)
sol = M.solve(v) if False else None
# least squares not available; use first len(cands) independent rows via rref on augmented
A = flint.nmod_mat([r + [h] for r, h in zip(rows, rhs)], P)
R, rank = A.rref(); print('rank', rank)
sol = [int(R[i, len(cands)]) for i in range(len(cands))]
def rr(x):
    # rational reconstruction
    x %= P
    r0, r1, t0, t1 = P, x, 0, 1
    import math
    B = int(math.isqrt(P // 2))
    while r1 > B:
        q = r0 // r1; r0, r1 = r1, r0 - q * r1; t0, t1 = t1, t0 - q * t1
    return flint.fmpq(r1 * (1 if t1 > 0 else -1), abs(t1))
print([rr(x) for x in sol])
