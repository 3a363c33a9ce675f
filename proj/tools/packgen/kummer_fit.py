# SPDX-License-Identifier: MIT
import random, flint, itertools, pickle
from fp import *
import ring
from ring import evalp
from step1 import rr, pt_dict
random.seed(7)
raw = pickle.load(open('phis.pkl', 'rb'))
def topoly(terms): return ring.ctx.from_dict({tuple(e): flint.fmpq(p, q) for e, (p, q) in terms})
phi2 = topoly(raw['phi2'])
MUW = [10, 8, 6, 4, 2]  # weights of mu0..mu4
def mu_monos(w):
    out = []
    for e in itertools.product(*[range(w // x + 1) for x in MUW]):
        if sum(a * b for a, b in zip(e, MUW)) == w: out.append(e)
    return out
def mumon(mu, e):
    v = 1
    for x, k in zip(mu, e): v = v * pow(x, k, P) % P
    return v
def F0(mu, s, t):
    f = mu + [1]
    return (2*f[0] + f[1]*s + 2*f[2]*t + f[3]*t*s + 2*f[4]*t*t + f[5]*t*t*s) % P
def beta0_direct(mu, p1, p2):
    (x1, y1), (x2, y2) = p1, p2
    s, t = (x1 + x2) % P, x1 * x2 % P
    return (F0(mu, s, t) - 2*y1*y2) * inv((x1 - x2)**2) % P
# beta0 ansatz: weight 6 in (s,t,b1,mu)
cands = [('s3', lambda c, mu: c['s']**3), ('st', lambda c, mu: c['s']*c['t']), ('b1sq', lambda c, mu: c['b1']**2)]
for e in mu_monos(6) + mu_monos(4) + mu_monos(2):
    pass
def beta_terms(c, mu):
    s, t, b1 = c['s'], c['t'], c['b1']
    rows = {}
    # all monomials s^i t^j b1^(2k) mu^e with weight 6
    for i in range(4):
        for j in range(2):
            for k in range(2):
                w = 2*i + 4*j + 6*k
                if w > 6: continue
                for e in mu_monos(6 - w):
                    rows[(i, j, k, e)] = pow(s, i, P) * pow(t, j, P) * pow(b1, 2*k, P) * mumon(mu, e) % P
    return rows
samples = []
for _ in range(60):
    mu, p1, p2 = random_instance()
    D = mumford_from_points(p1, p2); c = coords(D)
    samples.append((mu, D, c, beta0_direct(mu, p1, p2)))
keys = list(beta_terms(samples[0][2], samples[0][0]).keys())
A = flint.nmod_mat([[beta_terms(c, mu)[k] for k in keys] + [b] for mu, D, c, b in samples], P)
R, rank = A.rref(); print('beta0 rank', rank, len(keys))
beta_sol = {keys[i]: rr(int(R[i, len(keys)])) for i in range(len(keys))}
print({k: v for k, v in beta_sol.items() if v != 0})
pickle.dump({k: (int(v.p), int(v.q)) for k, v in beta_sol.items() if v != 0}, open('beta0.pkl', 'wb'))
