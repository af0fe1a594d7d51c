#!/usr/bin/env python3
"""Independent exact oracle for the frozen example values used in the C++ tests.

Uses only fractions.Fraction and plain affine formulas (no homogeneous
canonicalisation, no charts), so it shares no code path with the library.
Run: python3 tests/oracle/derive_examples.py
"""
from fractions import Fraction as Fr


def line_through(p, q):
    # a*x + b*y = c
    a = q[1] - p[1]
    b = p[0] - q[0]
    return (a, b, a * p[0] + b * p[1])


def intersect(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    return ((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def vratio(u, v):
    # u = t v
    if v[0] != 0:
        t = u[0] / v[0]
    else:
        t = u[1] / v[1]
    assert u[0] == t * v[0] and u[1] == t * v[1]
    return t


def ratio(o, a, b):
    return vratio(sub(a, o), sub(b, o))


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def rect(o, a, b):
    return dot(sub(a, o), sub(b, o))


def cross_ratio(a, b, c, d):
    return ((c - a) / (c - b)) / ((d - a) / (d - b))


def circle_point(t):
    t = Fr(t)
    return ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


print("== cross ratios")
print(cross_ratio(Fr(0), Fr(1), Fr(2), Fr(3)))
print(cross_ratio(Fr(0), Fr(2), Fr(3), Fr(3, 2)))

print("== rectangle identity x->4/x")
B, H, C, G, D, F = Fr(1), Fr(4), Fr(8), Fr(1, 2), Fr(-1), Fr(-4)
print((F - G) * (D - G) / ((F - C) * (D - C)), (B - G) * (H - G) / ((B - C) * (H - C)))
F2 = Fr(-5)
print((F2 - G) * (D - G) / ((F2 - C) * (D - C)), (B - G) * (H - G) / ((B - C) * (H - C)))

print("== menelaus triangle (0,0),(4,0),(0,4), transversal y = x - 1")
N1, N2, N3 = (Fr(1), Fr(0)), (Fr(5, 2), Fr(3, 2)), (Fr(0), Fr(-1))
a, b, c = (Fr(0), Fr(4)), (Fr(0), Fr(0)), (Fr(4), Fr(0))
r1, r2, r3 = ratio(N1, b, c), ratio(N2, c, a), ratio(N3, a, b)
print(r1, r2, r3, r1 * r2 * r3)
print("decompose N1:", ratio(N3, b, a), ratio(N2, a, c), ratio(N3, b, a) * ratio(N2, a, c))

print("== quadrangle square B=(1,1) C=(-1,1) D=(1,-1) E=(-1,-1), y = x/3 + 1/5")
Bq, Cq, Dq, Eq = (Fr(1), Fr(1)), (Fr(-1), Fr(1)), (Fr(1), Fr(-1)), (Fr(-1), Fr(-1))
Delta = line_through((Fr(0), Fr(1, 5)), (Fr(3), Fr(6, 5)))
I = intersect(line_through(Bq, Cq), Delta)
K = intersect(line_through(Eq, Dq), Delta)
P = intersect(line_through(Bq, Eq), Delta)
Q = intersect(line_through(Cq, Dq), Delta)
G_ = intersect(line_through(Bq, Dq), Delta)
H_ = intersect(line_through(Cq, Eq), Delta)
Fq = intersect(line_through(Bq, Eq), line_through(Dq, Cq))
print("I K P Q G H =", I, K, P, Q, G_, H_, "F =", Fq)
xs = {n: p[0] for n, p in zip("IKPQGH", (I, K, P, Q, G_, H_))}
print("x-coords:", xs)
# involution on x coordinate: solve a(x+y) + b - c x y = 0 for pairs (I,K),(P,Q)
def swap_row(x, y):
    return (x + y, Fr(1), -x * y)
r_1, r_2 = swap_row(xs["I"], xs["K"]), swap_row(xs["P"], xs["Q"])
# null space of 2x3 by cross product
n = (r_1[1] * r_2[2] - r_1[2] * r_2[1], r_1[2] * r_2[0] - r_1[0] * r_2[2], r_1[0] * r_2[1] - r_1[1] * r_2[0])
am, bm, cm = n
print("involution x -> (a x + b)/(c x - a) with a,b,c =", am, bm, cm)
g = xs["G"]
print("image of G:", (am * g + bm) / (cm * g - am), "H:", xs["H"])
print("QI.QK/(PI.PK) =", ratio(I, Q, P) * ratio(K, Q, P), " QG.QH/(PG.PH) =", ratio(G_, Q, P) * ratio(H_, Q, P))

print("== power of a point, unit circle, p=(5/4,0), chord through (3/5,4/5)")
p = (Fr(5, 4), Fr(0))
A1 = (Fr(3, 5), Fr(4, 5))
u = sub(A1, p)
# p + s u on circle: |p|^2 - 1 + 2 s p.u + s^2 u.u = 0 ; s1 = 1 is known
s2 = (dot(p, p) - 1) / dot(u, u) / 1
A2 = (p[0] + s2 * u[0], p[1] + s2 * u[1])
print("second point", A2, "on circle:", dot(A2, A2) == 1)
print("products:", rect(p, A1, A2), rect(p, (Fr(1), Fr(0)), (Fr(-1), Fr(0))))

print("== pencil example: (1,0),(0,1),(-1,0),(0,-1), Delta y = 4/5")
# quadrangle involution on y=4/5 parametrised by x
Bp, Cp, Dp, Ep = (Fr(1), Fr(0)), (Fr(0), Fr(1)), (Fr(-1), Fr(0)), (Fr(0), Fr(-1))
Dl = line_through((Fr(0), Fr(4, 5)), (Fr(1), Fr(4, 5)))
pts = {}
for name, (u1, u2) in {"I": (Bp, Cp), "K": (Ep, Dp), "P": (Bp, Ep), "Q": (Cp, Dp), "G": (Bp, Dp), "H": (Cp, Ep)}.items():
    pts[name] = intersect(line_through(u1, u2), Dl)
print(pts)
xs = {k: (v[0] if v else None) for k, v in pts.items()}
rows = [swap_row(xs["I"], xs["K"]), swap_row(xs["P"], xs["Q"])]
r_1, r_2 = rows
n = (r_1[1] * r_2[2] - r_1[2] * r_2[1], r_1[2] * r_2[0] - r_1[0] * r_2[2], r_1[0] * r_2[1] - r_1[1] * r_2[0])
am, bm, cm = n
L = Fr(3, 5)
print("involution a,b,c:", am, bm, cm, " partner(3/5) =", (am * L + bm) / (cm * L - am))

print("== pencil example, generic chord through (3/5,4/5) and (-4/5,3/5)")
L1, L2 = (Fr(3, 5), Fr(4, 5)), (Fr(-4, 5), Fr(3, 5))
Dl = line_through(L1, L2)
pts = {}
for name, (u1, u2) in {"I": (Bp, Cp), "K": (Ep, Dp), "P": (Bp, Ep), "Q": (Cp, Dp), "G": (Bp, Dp), "H": (Cp, Ep)}.items():
    pts[name] = intersect(line_through(u1, u2), Dl)
print(pts)
xs = {k: v[0] for k, v in pts.items()}
r_1, r_2 = swap_row(xs["I"], xs["K"]), swap_row(xs["P"], xs["Q"])
am, bm, cm = (r_1[1] * r_2[2] - r_1[2] * r_2[1], r_1[2] * r_2[0] - r_1[0] * r_2[2], r_1[0] * r_2[1] - r_1[1] * r_2[0])
print("x-partner(3/5) =", (am * L1[0] + bm) / (cm * L1[0] - am), " x-partner(G) =", (am * xs["G"] + bm) / (cm * xs["G"] - am))

print("== beaugrand unit circle K,N,O,V at t = 0, 1/2, 2, -1/3")
Kb, Nb, Ob, Vb = (circle_point(t) for t in (0, Fr(1, 2), 2, Fr(-1, 3)))
print("K N O V:", Kb, Nb, Ob, Vb)
for tf, tg in ((3, Fr(-2)), (Fr(1, 3), Fr(-3)), (Fr(3, 2), Fr(-1, 2)), (Fr(1), Fr(-1, 2))):
    Fb, Gb = circle_point(tf), circle_point(tg)
    Db = line_through(Fb, Gb)
    Cb = intersect(line_through(Kb, Ob), Db)
    Ab = intersect(line_through(Nb, Vb), Db)
    Pb = intersect(line_through(Kb, Ob), line_through(Nb, Vb))
    Bb = intersect(line_through(Kb, Nb), Db)
    Eb = intersect(line_through(Vb, Ob), Db)
    inside = dot(Cb, Cb) < 1
    print(" F,G params", tf, tg, "C =", Cb, "inside:", inside)
    if not inside:
        continue
    # chord through C parallel to NV: products via Vieta
    w = sub(Vb, Nb)
    CQCR = (dot(Cb, Cb) - 1) / dot(w, w) * dot(w, w)
    lhs1 = rect(Pb, Nb, Vb) / CQCR
    rhs1 = rect(Pb, Kb, Ob) / rect(Cb, Kb, Ob)
    print("  Apollonius 1:", lhs1, rhs1)
    ap2l = rect(Ab, Nb, Vb) / rect(Ab, Fb, Gb)
    ap2r = CQCR / rect(Cb, Fb, Gb)
    print("  Apollonius 2:", ap2l, ap2r)
    m1 = (ratio(Bb, Ab, Cb), ratio(Nb, Ab, Pb) * ratio(Kb, Pb, Cb))
    m2 = (ratio(Eb, Ab, Cb), ratio(Vb, Ab, Pb) * ratio(Ob, Pb, Cb))
    print("  Menelaus:", m1, m2)
    fin = (rect(Ab, Fb, Gb) / rect(Cb, Fb, Gb), rect(Ab, Bb, Eb) / rect(Cb, Bb, Eb))
    print("  final:", fin)
    an1 = (rect(Bb, Fb, Gb) / rect(Eb, Fb, Gb), rect(Bb, Ab, Cb) / rect(Eb, Ab, Cb))
    an2 = (rect(Fb, Ab, Cb) / rect(Gb, Ab, Cb), rect(Fb, Bb, Eb) / rect(Gb, Bb, Eb))
    print("  analogies:", an1, an2)
    break

print("== pascal unit circle t = 0..5 as P,K,V,O,N,Q")
Pp, Kp, Vp, Op, Np, Qp = (circle_point(t) for t in range(6))
M = intersect(line_through(Pp, Kp), line_through(Vp, Op))
S = intersect(line_through(Np, Kp), line_through(Vp, Qp))
X = intersect(line_through(Np, Op), line_through(Pp, Qp))
det = (S[0] - M[0]) * (X[1] - M[1]) - (S[1] - M[1]) * (X[0] - M[0])
print("M S X =", M, S, X, "det =", det)
alpha = intersect(line_through(Np, Op), line_through(Pp, Kp))
beta = intersect(line_through(Np, Op), line_through(Qp, Vp))
A = intersect(line_through(Pp, Kp), line_through(Qp, Vp))
def cr_pts(a, b, c, d):
    return ratio(a, c, b) / ratio(a, d, b) * 1  # placeholder, recomputed below
# cross ratio [a,b;c,d] = ((c-a)/(c-b)) / ((d-a)/(d-b)) along a line
def cr(a, b, c, d):
    return vratio(sub(c, a), sub(c, b)) / vratio(sub(d, a), sub(d, b))
print("[A,alpha,M,P] =", cr(A, alpha, M, Pp), " [A,beta,S,Q] =", cr(A, beta, S, Qp))
print("Menelaus 1:", ratio(M, A, alpha), ratio(Vp, A, beta) * ratio(Op, beta, alpha))
print("Menelaus 2:", ratio(S, A, beta), ratio(Kp, A, alpha) * ratio(Np, alpha, beta))
print("Euclid:", rect(alpha, Kp, Pp), rect(alpha, Np, Op), rect(beta, Np, Op), rect(beta, Vp, Qp), rect(A, Pp, Kp), rect(A, Qp, Vp))
print("subst 1:", ratio(Pp, alpha, A) * ratio(Kp, alpha, A), rect(alpha, Np, Op) / rect(A, Qp, Vp))
print("subst 2:", ratio(Qp, beta, A) * ratio(Vp, beta, A), rect(beta, Np, Op) / rect(A, Pp, Kp))
def d2(p, q):
    return dot(sub(p, q), sub(p, q))
lhs = d2(A, M) / d2(alpha, M) * d2(alpha, Pp) / d2(A, Pp)
rhs = d2(Kp, A) / d2(Qp, A) * d2(Op, beta) * d2(Np, alpha) / (d2(Kp, alpha) * d2(Vp, beta))
print("magnitude 1 (squared):", lhs, rhs)
lhs = d2(A, S) / d2(beta, S) * d2(beta, Qp) / d2(A, Qp)
rhs = d2(Vp, A) / d2(Pp, A) * d2(Op, beta) * d2(Np, alpha) / (d2(Kp, alpha) * d2(Vp, beta))
print("magnitude 2 (squared):", lhs, rhs)

print("== quad_sqrt(8)")
import math
n = 8
k = 1
for f in range(2, 10):
    while n % (f * f) == 0:
        n //= f * f
        k *= f
print(k, "sqrt", n)
