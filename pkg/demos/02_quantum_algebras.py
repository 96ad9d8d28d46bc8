"""
Arithmetic in quantum polynomial algebras and tori
==================================================

Elements are finite sums of monomials x^a with exact cyclotomic (or
Laurent, when q has free symbols) coefficients.
"""

from qsym.qalg import (commutator, format_element, parse_element, quantum_plane,
                       sign_torus, sweedler_action_data, NoCentralOddElement)

# the quantum plane at a primitive cube root of unity: x y = zeta3 y x
A = quantum_plane(3)
x, y = A.gens()
print("y x          =", format_element(y * x))
print("x y - y x    =", format_element(commutator(x, y)))

# x^3 and y^3 are central; x alone is not
print("[x^3, y]     =", format_element(commutator(x**3, y)))

# strings parse into elements and print back the same way
f = parse_element(A, "x^2*y + 2*y")
print("f^2          =", format_element(f * f))

# the sign torus with three generators has a central odd monomial
T = sign_torus(3)
z = sweedler_action_data(T)
print("central odd element on the n = 3 torus:", format_element(z))

# with two generators there is none
try:
    sweedler_action_data(sign_torus(2))
except NoCentralOddElement as exc:
    print("n = 2 torus:", exc)
