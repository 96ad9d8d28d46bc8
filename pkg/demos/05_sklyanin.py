"""
Three-dimensional Sklyanin algebras and their Hesse curves
==========================================================

S(a, b, c) has generators x, y, z and three quadratic relations.  Its
point scheme is the Hesse cubic E, and the automorphism sigma of E is
translation by the point (a : b : c).
"""

from qsym.sklyanin import (HesseCurve, check_theorem_sklyanin, element_text, hesse_add,
                           point_order, sigma_order, sklyanin_central_deg3, sklyanin_hilbert)

# Hilbert function through degree 5 matches the commutative polynomial ring
print("dims of S(1, 2, 3):", sklyanin_hilbert(1, 2, 3, 5))
print("free algebra      :", sklyanin_hilbert(1, 2, 3, 5, relations=False))

# a central element of degree 3
T = sklyanin_central_deg3(1, 2, 3)
print("central degree 3 space has dimension", len(T))
print("T =", element_text(T[0], 3))

# the curve over F_5 (7 divides the discriminant of (1, 2, 3)): enumerate points and add two of them
E = HesseCurve(1, 2, 3, field=5)
pts = E.points()
print(f"\n#E(F_5) = {len(pts)}, O = {E.O}")
P, Q = pts[1], pts[2]
print(f"{P} + {Q} = {hesse_add(E, P, Q)}")
print("order of the translation point mod 5:", point_order(E, E.translation_point, len(pts)))

# over Q: sigma has finite order only for special (a, b, c)
for t in ((1, 2, 3), (1, 1, -1), (0, 1, 1)):
    try:
        print(t, "sigma order:", sigma_order(HesseCurve(*t)))
    except ValueError as exc:
        print(t, "rejected:", exc)

v = check_theorem_sklyanin(1, 2, 3, 3)
print("\nverdict for S(1, 2, 3), d = 3:", v.verdict, "-", v.explanation)
