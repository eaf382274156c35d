"""Reference vectors for the coefficient and elimination tests.

Two independent evaluations at one seeded random point:
  printed  - the coefficient tables exactly as printed (printed_tables.py)
  derived  - the same coefficients re-derived by expanding the bilinear classical
             action and the noise quadratic form over the mode amplitudes
The Gaussian elimination vector integrates out the initial-point variables by a
Schur complement in 50-digit arithmetic.

Run: python3 gen_vectors.py > vectors.json
"""
import json
import random

import mpmath as mp
import sympy as sp

from printed_tables import (D, N, P, M1, M2, lam, r1, r2, n1, n2, nb1, nb2, m1, m2, l,
                            b, bp, s, f, H1, H2)

random.seed(20240611)
mp.mp.dps = 50


def rnd():
    return sp.Rational(random.randint(-999, 999), 1000) or sp.Rational(1, 7)


# Redundancies of the integrals the tables rely on.
IDENT = {b[3]: b[2], b[9]: b[5], b[10]: b[7], b[11]: b[6], b[12]: b[8], b[15]: b[14],
         bp[3]: bp[2], bp[9]: bp[5], bp[10]: bp[8], bp[11]: bp[6], bp[12]: bp[7], bp[15]: bp[14],
         s[11]: s[7], s[12]: s[9], s[13]: s[8], s[14]: s[10]}

point = {M1: sp.Rational(13, 10), M2: sp.Rational(7, 10), lam: rnd(), r1: rnd(), r2: rnd(),
         n1: rnd(), n2: rnd(), nb1: rnd(), nb2: rnd(), m1: rnd(), m2: rnd(), l: rnd()}
for k in range(1, 17):
    point[b[k]] = rnd()
    point[bp[k]] = rnd()
    point[f[k]] = rnd()
for k in range(1, 15):
    point[s[k]] = rnd()
for k, v in IDENT.items():
    point[k] = point[v]

# ---- derived tables
Xf1, Xf2, Xi1, Xi2, yf1, yf2, yi1, yi2 = sp.symbols('Xf1 Xf2 Xi1 Xi2 yf1 yf2 yi1 yi2')
basis = ['S1', 'C1', 'S2', 'C2']


def amplitudes(F1, F2, I1, I2, w1, w2):
    return (w1 * (F1 - r2 * F2) - m1 * (I1 - r2 * I2), l * (I1 - r2 * I2),
            w2 * (F2 - r1 * F1) - m2 * (I2 - r1 * I1), l * (I2 - r1 * I1))


XP = amplitudes(Xf1, Xf2, Xi1, Xi2, n1, n2)
YP = amplitudes(yf1, yf2, yi1, yi2, nb1, nb2)
B1 = {('S1', 'S1'): b[1], ('S1', 'C1'): b[2], ('C1', 'S1'): b[3], ('C1', 'C1'): b[4], ('S1', 'S2'): b[5],
      ('S1', 'C2'): b[6], ('C1', 'S2'): b[7], ('C1', 'C2'): b[8], ('S2', 'S1'): b[9], ('S2', 'C1'): b[10],
      ('C2', 'S1'): b[11], ('C2', 'C1'): b[12], ('S2', 'S2'): b[13], ('S2', 'C2'): b[14], ('C2', 'S2'): b[15],
      ('C2', 'C2'): b[16]}
B2 = {('S1', 'S1'): bp[13], ('S1', 'C1'): bp[14], ('C1', 'S1'): bp[15], ('C1', 'C1'): bp[16], ('S1', 'S2'): bp[5],
      ('S1', 'C2'): bp[6], ('C1', 'S2'): bp[8], ('C1', 'C2'): bp[7], ('S2', 'S1'): bp[9], ('S2', 'C1'): bp[10],
      ('C2', 'S1'): bp[11], ('C2', 'C1'): bp[12], ('S2', 'S2'): bp[1], ('S2', 'C2'): bp[2], ('C2', 'S2'): bp[3],
      ('C2', 'C2'): bp[4]}
act = sp.expand(sum(XP[i] * YP[j] * (H1 * B1[(basis[i], basis[j])] + H2 * B2[(basis[i], basis[j])])
                    for i in range(4) for j in range(4)))

SIG = {('S1', 'S1'): s[2], ('S1', 'C1'): s[5], ('C1', 'S1'): s[5], ('C1', 'C1'): s[1], ('S2', 'S2'): s[4],
       ('S2', 'C2'): s[6], ('C2', 'S2'): s[6], ('C2', 'C2'): s[3], ('S1', 'S2'): s[10], ('S2', 'S1'): s[10],
       ('S1', 'C2'): s[9], ('C2', 'S1'): s[9], ('C1', 'S2'): s[8], ('S2', 'C1'): s[8], ('C1', 'C2'): s[7],
       ('C2', 'C1'): s[7]}


def per_oscillator(A, k):
    P1, Q1, P2, Q2 = A
    return [P1, Q1, r2 * P2, r2 * Q2] if k == 1 else [r1 * P1, r1 * Q1, P2, Q2]


X1, X2 = per_oscillator(XP, 1), per_oscillator(XP, 2)
Y1, Y2 = per_oscillator(YP, 1), per_oscillator(YP, 2)
pi_act = sp.expand(lam / 2 * sum((X1[i] * Y2[j] + X2[i] * Y1[j]) * SIG[(basis[i], basis[j])]
                                 for i in range(4) for j in range(4)))

FI = {('S1', 'S1'): 1, ('S2', 'S2'): 2, ('S1', 'S2'): 3, ('S2', 'S1'): 4, ('C1', 'C1'): 5, ('C2', 'C2'): 6,
      ('C1', 'C2'): 7, ('C2', 'C1'): 8, ('S1', 'C1'): 9, ('C1', 'S1'): 10, ('S1', 'C2'): 11, ('C1', 'S2'): 12,
      ('S2', 'C2'): 13, ('C2', 'S2'): 14, ('S2', 'C1'): 15, ('C2', 'S1'): 16}

DKEYS = {'D1': (Xf1, yf1), 'Dp1': (Xf2, yf2), 'D2': (Xi1, yf1), 'Dp2': (Xi2, yf2), 'D3': (Xf1, yi1),
         'Dp3': (Xf2, yi2), 'D4': (Xi1, yi1), 'Dp4': (Xi2, yi2), 'D5s': (Xf2, yf1), 'D6s': (Xf1, yf2),
         'D7s': (Xi1, yf2), 'D8s': (Xi2, yf1), 'D9s': (Xf1, yi2), 'D10s': (Xf2, yi1), 'D11s': (Xi1, yi2),
         'D12s': (Xi2, yi1)}
PKEYS = {1: (Xf1, yf1), 2: (Xf1, yf2), 3: (Xf2, yf1), 4: (Xf2, yf2), 5: (Xf1, yi1), 6: (Xf1, yi2),
         7: (Xf2, yi1), 8: (Xf2, yi2), 9: (Xi1, yf1), 10: (Xi1, yf2), 11: (Xi2, yf1), 12: (Xi2, yf2),
         13: (Xi1, yi1), 14: (Xi1, yi2), 15: (Xi2, yi1), 16: (Xi2, yi2)}
NKEYS = {'A1': (yf1, yf1), 'A2': (yf2, yf2), 'B1': (yf1, yi1), 'B2': (yf2, yi2), 'C1': (yi1, yi1),
         'C2': (yi2, yi2), 'E1': (yi1, yi2), 'E2': (yf2, yi1), 'E3': (yf1, yi2), 'E4': (yf1, yf2)}


def coef(expr, a, c):
    return expr.coeff(a, 2) if a == c else expr.coeff(a, 1).coeff(c, 1)


def num(e):
    return float(sp.N(sp.sympify(e).subs(point), 30))


out = {'point': {str(k): float(v) for k, v in point.items()}}
out['printed'] = {
    'D': {k: num(v) for k, v in D.items()},
    'Pi': {str(k): num(v) for k, v in P.items()},
    'N1': {k: num(v[0]) for k, v in N.items()},
    'N2': {k: num(v[1]) for k, v in N.items()},
}
quad1 = sp.expand(sum(Y1[i] * Y1[j] * f[FI[(basis[i], basis[j])]] for i in range(4) for j in range(4)))
quad2 = sp.expand(sum(Y2[i] * Y2[j] * f[FI[(basis[i], basis[j])]] for i in range(4) for j in range(4)))
out['derived'] = {
    'D': {k: num(coef(act, a, c)) for k, (a, c) in DKEYS.items()},
    'Pi': {str(k): num(coef(pi_act, a, c)) for k, (a, c) in PKEYS.items()},
    'N1': {k: num(coef(quad1, a, c)) for k, (a, c) in NKEYS.items()},
    'N2': {k: num(coef(quad2, a, c)) for k, (a, c) in NKEYS.items()},
}

# ---- elimination of the initial-point variables
# exponent = i sum S_ac X_a xi_c - N(xi) - aX (Xi^2) - aY (xi_i^2), variables
# outer (Xf1, Xf2, yf1, yf2), inner (Xi1, Xi2, yi1, yi2); exponent = -v^T A v.
rng = random.Random(7)
S = [[mp.mpf(rng.uniform(-1.5, 1.5)) for _ in range(4)] for _ in range(4)]
noise = {k: mp.mpf(rng.uniform(0.05, 0.6)) for k in ['A1', 'A2', 'B1', 'B2', 'C1', 'C2']}
noise.update({k: mp.mpf(rng.uniform(-0.2, 0.2)) for k in ['E1', 'E2', 'E3', 'E4']})
a = {k: mp.mpf(rng.uniform(0.2, 2.0)) for k in ['a1X', 'a1Y', 'a2X', 'a2Y']}
idx = {'Xf1': 0, 'Xf2': 1, 'yf1': 2, 'yf2': 3, 'Xi1': 4, 'Xi2': 5, 'yi1': 6, 'yi2': 7}
xrow = ['Xf1', 'Xf2', 'Xi1', 'Xi2']
ycol = ['yf1', 'yf2', 'yi1', 'yi2']
A = mp.matrix(8, 8)


def add(u, v, val):
    i, j = idx[u], idx[v]
    if i == j:
        A[i, i] += val
    else:
        A[i, j] += val / 2
        A[j, i] += val / 2


for r in range(4):
    for c in range(4):
        add(xrow[r], ycol[c], -1j * S[r][c])
for k, (u, v) in {'A1': ('yf1', 'yf1'), 'A2': ('yf2', 'yf2'), 'B1': ('yf1', 'yi1'), 'B2': ('yf2', 'yi2'),
                  'C1': ('yi1', 'yi1'), 'C2': ('yi2', 'yi2'), 'E1': ('yi1', 'yi2'), 'E2': ('yf2', 'yi1'),
                  'E3': ('yf1', 'yi2'), 'E4': ('yf1', 'yf2')}.items():
    add(u, v, noise[k])
add('Xi1', 'Xi1', a['a1X'])
add('Xi2', 'Xi2', a['a2X'])
add('yi1', 'yi1', a['a1Y'])
add('yi2', 'yi2', a['a2Y'])
Aoo = A[0:4, 0:4]
Aoi = A[0:4, 4:8]
Aii = A[4:8, 4:8]
Sch = Aoo - Aoi * mp.inverse(Aii) * Aoi.T


def cplx(z):
    z = mp.mpc(z)
    return [float(z.real), float(z.imag)]


g = {'g1': Sch[0, 0], 'g2': Sch[1, 1], 'g12': 2 * Sch[0, 1], 'gp1': Sch[2, 2], 'gp2': Sch[3, 3],
     'gp12': 2 * Sch[2, 3], 'gpp11': 2 * Sch[0, 2], 'gpp21': 2 * Sch[1, 2], 'gpp12': 2 * Sch[0, 3],
     'gpp22': 2 * Sch[1, 3]}
out['elimination'] = {
    'S': [[float(x) for x in row] for row in S],
    'noise': {k: float(v) for k, v in noise.items()},
    'weights': {k: float(v) for k, v in a.items()},
    'g': {k: cplx(v) for k, v in g.items()},
}

print(json.dumps(out, indent=1, sort_keys=True))
