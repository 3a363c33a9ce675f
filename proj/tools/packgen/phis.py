# SPDX-License-Identifier: MIT
import random, flint, time, pickle
from fp import *
import ring
from ring import s, t, b1, b0, m, deriv, evalp, reduce
p11 = b1**2 - s**3 + s*t - m[4]*s**2 - m[3]*s
w = [p11, -t, s, 1 + 0*s]
def pair(U, V):  # U^T Omega V
    return -(U[0]*V[3] - U[3]*V[0]) - (U[1]*V[2] - U[2]*V[1])
def H(phi):
    d1, d2 = deriv(phi, 1), deriv(phi, 2)
    return [phi*deriv(d1, 1) - d1*d1, phi*deriv(d1, 2) - d1*d2, phi*deriv(d2, 2) - d2*d2]
def Wn(phi, n):
    h = H(phi); p2 = phi*phi
    return [reduce(p2*w[0] - h[0]/n**2), reduce(p2*w[1] - h[1]/n**2), reduce(p2*w[2] - h[2]/n**2), reduce(p2)]
if __name__ == '__main__':
    T = time.time()
    Dw = [deriv(x, 1) for x in w]
    phi2 = reduce(-pair(w, Dw)); print('phi2', phi2, time.time()-T)
    W1 = w; W2 = Wn(phi2, 4**0 * 2)
    phi3 = reduce(pair(W2, W1)); print('phi3 terms', len(phi3), time.time()-T)
    DW2 = [deriv(x, 1) for x in W2]
    phi4 = reduce(-pair(W2, DW2) / 2); print('phi4 terms', len(phi4), time.time()-T)
    W3 = Wn(phi3, 3)
    phi5 = reduce(pair(W3, W2)); print('phi5 terms', len(phi5), time.time()-T)
    pickle.dump({k: [(e, (int(c.p), int(c.q))) for e, c in v.terms()] for k, v in {"phi2": phi2, "phi3": phi3, "phi4": phi4, "phi5": phi5}.items()}, open("phis.pkl", "wb"))
