# SPDX-License-Identifier: MIT
import random, flint, itertools, pickle, sys, io
_o = sys.stdout; sys.stdout = io.StringIO()
from kummer_fit import *
sys.stdout = _o
random.seed(11)
KW = [0, 2, 4, 6]
def kappa(mu, c):
    b = (c['b1']**2 - c['s']**3 + c['s']*c['t'] - mu[4]*c['s']**2 - mu[3]*c['s'] - mu[2]) % P
    return [1, c['s'], c['t'], b]
qmon = [e for e in itertools.product(range(5), repeat=4) if sum(e) == 4]
def unknowns(W):
    out = []
    for e in qmon:
        wk = sum(a * b for a, b in zip(e, KW))
        if wk > W or (W - wk) % 2: continue
        if e == (0, 2, 0, 2): continue  # quartic ambiguity gauge
        for m_ in mu_monos(W - wk): out.append((e, m_))
    return out
inst = []
N = 700
for _ in range(N):
    mu, p1, p2 = random_instance()
    D = mumford_from_points(p1, p2); c = coords(D)
    D2 = cantor_add(fpoly(mu), D, D)
    if len(D2[0]) != 3: continue
    c2 = coords(D2)
    ph = evalp(phi2, pt_dict(mu, D))
    inst.append((mu, kappa(mu, c), [x * ph * ph % P for x in kappa(mu, c2)]))
print('instances', len(inst))
res = {}
for i in range(4):
    W = 18 + 2 * i
    U = unknowns(W); print('delta', i + 1, 'unknowns', len(U))
    rows = []
    for mu, k, tgt in inst:
        r = []
        for e, m_ in U:
            v = mumon(mu, m_)
            for x, a in zip(k, e): v = v * pow(x, a, P) % P
            r.append(v)
        rows.append(r + [tgt[i]])
    A = flint.nmod_mat(rows, P)
    R, rank = A.rref(); print('rank', rank)
    # check pivots are identity on the first len(U) columns
    assert rank == len(U), 'underdetermined or inconsistent'
    res[i] = {U[j]: rr(int(R[j, len(U)])) for j in range(len(U))}
    nz = {k: v for k, v in res[i].items() if v != 0}
    print('nonzero terms', len(nz), 'max den', max(v.q for v in nz.values()))
pickle.dump({i: {k: (int(v.p), int(v.q)) for k, v in d.items() if v != 0} for i, d in res.items()}, open('delta.pkl', 'wb'))
