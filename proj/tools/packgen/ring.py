# SPDX-License-Identifier: MIT
import flint, sympy as sp
from fp import P, inv
NAMES = ('b1', 'b0', 's', 't', 'm4', 'm3', 'm2', 'm1', 'm0')
ctx = flint.fmpq_mpoly_ctx.get(NAMES, 'degrevlex')
G = dict(zip(NAMES, ctx.gens()))
b1, b0, s, t = G['b1'], G['b0'], G['s'], G['t']
m = [G['m0'], G['m1'], G['m2'], G['m3'], G['m4']]
IDX = {n: i for i, n in enumerate(NAMES)}

def from_sympy(e):
    e = sp.expand(e)
    syms = [sp.Symbol(n) for n in NAMES]
    poly = sp.Poly(e, *syms)
    r = ctx.from_dict({}) if False else ctx.gens()[0] * 0
    out = 0 * ctx.gens()[0]
    for mon, c in poly.terms():
        term = flint.fmpq(int(sp.fraction(c)[0]), int(sp.fraction(c)[1]))
        for g, k in zip(ctx.gens(), mon):
            if k: term = term * g ** k
        out = out + term
    return out

# symbolic pieces via sympy
X = sp.Symbol('x'); S = {n: sp.Symbol(n) for n in NAMES}
fx = X**5 + S['m4']*X**4 + S['m3']*X**3 + S['m2']*X**2 + S['m1']*X + S['m0']
ax = X**2 - S['s']*X + S['t']
bx = S['b1']*X + S['b0']
cx = sp.div(sp.expand(bx**2 - fx), ax, X)
assert cx[1] != 0 or True
cq, cr = cx  # b^2 - f = a*cq + cr ; cr is the Mumford relation (r1 x + r0)
REL = sp.Poly(cr, X)
rel1, rel0 = from_sympy(REL.coeff_monomial(X)), from_sympy(REL.coeff_monomial(1))
d2b = sp.Poly(sp.rem(sp.expand(-cq), ax, X), X)
d1b = sp.Poly(sp.rem(sp.expand((S['s'] - X) * cq), ax, X), X)
# derivation tables: D[j][name]
D = {1: {}, 2: {}}
D[2]['s'] = 2 * b1; D[1]['s'] = 2 * b0
D[2]['t'] = -2 * b0; D[1]['t'] = 2 * (b1 * t + b0 * s)
D[2]['b1'] = from_sympy(d2b.coeff_monomial(X)); D[2]['b0'] = from_sympy(d2b.coeff_monomial(1))
D[1]['b1'] = from_sympy(d1b.coeff_monomial(X)); D[1]['b0'] = from_sympy(d1b.coeff_monomial(1))
for j in (1, 2):
    for n in NAMES[4:]: D[j][n] = 0 * s

def deriv(p, j):
    out = 0 * s
    for n in NAMES[:4]:
        dp = p.derivative(IDX[n])
        if dp != 0: out += dp * D[j][n]
    return out

# reduction: b0^2 -> T0, b0*b1 -> T1 using the Mumford relations
# rel0 = r0 with leading b0^2 coefficient 1 ; rel1 leading 2 b0 b1
T0 = b0**2 - rel0
T1 = (b0 * b1 - rel1 / 2)
def reduce(p):
    while True:
        d = p.degrees()  # per variable max degree
        if d[IDX['b0']] >= 2:
            # replace b0^2 by T0 in all terms: split by b0 degree
            p = subst_pow(p)
            continue
        # terms with b0*b1
        changed = False
        out = 0 * s
        terms = list(p.terms())
        hit = [(e, c) for e, c in terms if e[IDX['b0']] >= 1 and e[IDX['b1']] >= 1]
        if not hit: return p
        rest = p
        for e, c in hit:
            e2 = list(e); e2[IDX['b0']] -= 1; e2[IDX['b1']] -= 1
            mono = ctx.from_dict({tuple(e): c})
            rest = rest - mono + ctx.from_dict({tuple(e2): c}) * T1
        p = rest
def subst_pow(p):
    out = 0 * s
    for e, c in p.terms():
        k = e[IDX['b0']]
        if k >= 2:
            e2 = list(e); e2[IDX['b0']] = k % 2
            out += ctx.from_dict({tuple(e2): c}) * T0 ** (k // 2)
        else:
            out += ctx.from_dict({tuple(e): c})
    return out

def evalp(p, pt):
    """evaluate at dict of values mod P"""
    vals = [pt[n] for n in NAMES]
    tot = 0
    for e, c in p.terms():
        v = int(c.p) * inv(int(c.q)) % P
        for x, k in zip(vals, e):
            if k: v = v * pow(x, k, P) % P
        tot += v
    return tot % P
