# SPDX-License-Identifier: MIT
import flint, pickle, sys, io
import ring
from ring import NAMES, deriv, D
from ring import s, t, b1, b0, m
raw = pickle.load(open('phis.pkl', 'rb'))
def topoly(terms): return ring.ctx.from_dict({tuple(e): flint.fmpq(p, q) for e, (p, q) in terms})
PHI = {k: topoly(raw['phi%d' % k]) for k in (2, 3, 4, 5)}
PHI[1] = ring.ctx.from_dict({(0,)*9: 1})
SPEC = ('P12', 'P22', 'P122', 'P222', 'MU0', 'MU1', 'MU2', 'MU3', 'MU4')
sctx = flint.fmpq_mpoly_ctx.get(SPEC, 'degrevlex')
S = dict(zip(SPEC, sctx.gens()))
half = flint.fmpq(1, 2)
# internal name -> expression in pack columns
SUB = {'b1': S['P122'] * half, 'b0': S['P222'] * half, 's': S['P12'], 't': -S['P22'],
       'm4': S['MU4'], 'm3': S['MU3'], 'm2': S['MU2'], 'm1': S['MU1'], 'm0': S['MU0']}
def conv(p): return p.compose(*[SUB[n] for n in NAMES], ctx=sctx)
p11 = b1**2 - s**3 + s*t - m[4]*s**2 - m[3]*s
polys = {}
for k in range(1, 6): polys['phi%d' % k] = conv(PHI[k])
polys['rel_p11'] = conv(p11)
polys['rel_p111'] = conv(deriv(p11, 1))
polys['rel_p112'] = conv(deriv(p11, 2))
for j in (1, 2):
    polys['d%d_P12' % j] = conv(D[j]['s'])
    polys['d%d_P22' % j] = conv(-D[j]['t'])
    polys['d%d_P122' % j] = conv(2 * D[j]['b1'])
    polys['d%d_P222' % j] = conv(2 * D[j]['b0'])
polys['kappa1'] = conv(ring.ctx.from_dict({(0,)*9: 1}))
polys['kappa2'] = conv(s)
polys['kappa3'] = conv(t)
polys['kappa4'] = conv(p11 - m[2])
XN = ('X1', 'X2', 'X3', 'X4', 'MU0', 'MU1', 'MU2', 'MU3', 'MU4')
xctx = flint.fmpq_mpoly_ctx.get(XN, 'degrevlex')
dl = pickle.load(open('delta.pkl', 'rb'))
for i in range(4):
    d = {}
    for (e, mm), (pn, qn) in dl[i].items():
        d[tuple(e) + tuple(mm)] = flint.fmpq(pn, qn)
    polys['delta%d' % (i + 1)] = xctx.from_dict(d)
def fmt_c(c):
    return str(int(c.p)) if c.q == 1 else '%d/%d' % (int(c.p), int(c.q))
def grlex_key(e): return (-sum(e), [-x for x in e])
out = io.StringIO()
w = out.write
w('PACKVERSION 1\n')
w('# Genus-2 formula pack for y^2 = x^5 + MU4 x^4 + MU3 x^3 + MU2 x^2 + MU1 x + MU0.\n')
w('# Columns: P12 = -a1, P22 = -a0, P122 = 2 b1, P222 = 2 b0 for a = x^2 + a1 x + a0, b = b1 x + b0.\n')
w('# d<k>_<var> give the derivation d/du_k of each column (u_1 along dx/2y, u_2 along x dx/2y).\n')
w('# Generated by tools/packgen; do not edit by hand.\n')
order = ['phi1', 'phi2', 'phi3', 'phi4', 'phi5', 'rel_p11', 'rel_p111', 'rel_p112'] + \
    ['d%d_%s' % (j, v) for v in ('P12', 'P22', 'P122', 'P222') for j in (1, 2)] + \
    ['kappa%d' % i for i in range(1, 5)] + ['delta%d' % i for i in range(1, 5)]
for name in order:
    p = polys[name]
    if name.startswith('delta'): w('[POLY %s VARS X1 X2 X3 X4 MU0 MU1 MU2 MU3 MU4]\n' % name)
    else: w('[POLY %s]\n' % name)
    terms = sorted(((tuple(e), c) for e, c in p.terms()), key=lambda x: grlex_key(x[0]))
    for e, c in terms: w(fmt_c(c) + ' ' + ' '.join(map(str, e)) + '\n')
# ---- recurrence trees ----
def A(*xs): return '(ADD ' + ' '.join(xs) + ')'
def Sb(a, b): return '(SUB %s %s)' % (a, b)
def M(*xs): return '(MUL ' + ' '.join(xs) + ')'
def Dv(a, b): return '(DIV %s %s)' % (a, b)
def Pw(a, n): return '(POW %s %d)' % (a, n)
def N(a): return '(NEG %s)' % a
def pair(U, V): return N(A(Sb(M(U[0], V[3]), M(U[3], V[0])), Sb(M(U[1], V[2]), M(U[2], V[1]))))
WV = ['(VAR rel_p11)', '(VAR P22)', '(VAR P12)']
DWV = ['(VAR rel_p111)', '(VAR rel_p112)', '(VAR P222)']
IJ = [(2, 0), (1, 1), (0, 2)]  # second derivative multi-indices for H11, H12, H22
def jets_rel(k):
    f = '(PHI %d)' % k
    def d(r1, r2):
        if r1 + r2 == 0: return f
        if r2 == 0: return '(DPHI %d 1 %d)' % (k, r1)
        if r1 == 0: return '(DPHI %d 2 %d)' % (k, r2)
        return '(DMIX %d %d %d)' % (k, r1, r2)
    return d
def jets_seed(j):
    def d(r1, r2):
        return '(SEED %d)' % j if r1 + r2 == 0 else '(DSEED %d %d %d)' % (j, r1, r2)
    return d
def H(d):
    # H_ab = phi * d_a d_b phi - d_a phi * d_b phi
    return [Sb(M(d(0, 0), d(2, 0)), Pw(d(1, 0), 2)), Sb(M(d(0, 0), d(1, 1)), M(d(1, 0), d(0, 1))), Sb(M(d(0, 0), d(0, 2)), Pw(d(0, 1), 2))]
def DH(d):
    f = d(0, 0)
    return [Sb(M(f, d(3, 0)), M(d(1, 0), d(2, 0))),
            Sb(M(f, d(2, 1)), M(d(2, 0), d(0, 1))),
            Sb(A(M(d(1, 0), d(0, 2)), M(f, d(1, 2))), M('2', d(0, 1), d(1, 1)))]
def What(d, nsq):
    h = H(d); f2 = Pw(d(0, 0), 2)
    return [Sb(M(f2, WV[c]), Dv(h[c], nsq)) for c in range(3)] + [f2]
def DWhat(d, nsq):
    dh = DH(d); f = d(0, 0)
    return [A(M('2', f, d(1, 0), WV[c]), M(Pw(f, 2), DWV[c]), N(Dv(dh[c], nsq))) for c in range(3)] + [M('2', f, d(1, 0))]
M2 = Pw('(PIVOT)', 2); M12 = Pw(A('(PIVOT)', '1'), 2)
kan_even = Dv(N(pair(What(jets_rel(0), M2), DWhat(jets_rel(0), M2))), '(PIVOT)')
kan_odd = pair(What(jets_rel(1), M12), What(jets_rel(0), M2))
defs = []
for j in (2, 3):
    Wj = What(jets_seed(j), str(j * j))
    for c, nm in enumerate('abc'):
        defs.append(('w%d%s' % (j, nm), Dv(Wj[c], Pw('(SEED %d)' % j, 2))))
for c, nm in enumerate('abc'):
    defs.append(('w1%s' % nm, WV[c]))
# rows r_j = [-1, -c_j, b_j]
R = [['-1', N('(REF w%dc)' % j), '(REF w%db)' % j] for j in (1, 2, 3)]
for i in range(3):
    for jj in range(3):
        defs.append(('r%d%d' % (i + 1, jj + 1), R[i][jj]))
def r(i, j): return '(REF r%d%d)' % (i + 1, j + 1)
def cof(i, j):
    rows = [x for x in range(3) if x != i]; cols = [y for y in range(3) if y != j]
    t_ = Sb(M(r(rows[0], cols[0]), r(rows[1], cols[1])), M(r(rows[0], cols[1]), r(rows[1], cols[0])))
    return t_ if (i + j) % 2 == 0 else N(t_)
defs.append(('det', A(*[M(r(0, j), cof(0, j)) for j in range(3)])))
# inverse: Minv[c][j] = cof(j, c) / det
for c in range(3):
    for j in range(3):
        defs.append(('g%d%d' % (c + 1, j + 1), Dv(cof(j, c), M('(REF det)', Pw('(SEED %d)' % (j + 1), 2)))))
for c in range(3):
    defs.append(('h%d' % (c + 1), Dv(A(*[M(cof(j, c), '(REF w%da)' % (j + 1)) for j in range(3)]), '(REF det)')))
def Wwin(k):
    comps = []
    for c in range(3):
        terms = [M('(REF g%d%d)' % (c + 1, j), '(PHI %d)' % (k + j), '(PHI %d)' % (k - j)) for j in (1, 2, 3)]
        comps.append(Sb(A(*terms), M('(REF h%d)' % (c + 1), Pw('(PHI %d)' % k, 2))))
    return comps + [Pw('(PHI %d)' % k, 2)]
uch_odd = pair(Wwin(1), Wwin(0))
uch_even = Dv(pair(Wwin(1), Wwin(-1)), '(SEED 2)')
for nm, e in defs: w('[DEFINE %s]\n%s\n' % (nm, e))
w('[RECURRENCE kanayama_odd TARGET 2 1]\n%s\n' % kan_odd)
w('[RECURRENCE kanayama_even TARGET 2 0]\n%s\n' % kan_even)
w('[RECURRENCE uchida_odd TARGET 2 1]\n%s\n' % uch_odd)
w('[RECURRENCE uchida_even TARGET 2 0]\n%s\n' % uch_even)
open(sys.argv[1], 'w').write(out.getvalue())
