"""
Finite-dimensional Hopf algebras acting on quantum algebras
===========================================================

The Sweedler algebra has basis 1, g, u, gu with g^2 = 1, u^2 = 0,
g u = -u g.  It is the smallest Hopf algebra that is not semisimple.
"""

from qsym.hopfcore import (apply, cyclic_group_algebra, dump_hopf, group_sign_action,
                           inner_faithful, is_semisimple, s3_group_algebra, sweedler,
                           sweedler_generator_action, sweedler_graded_action,
                           verify_hopf_axioms, verify_module_algebra)
from qsym.qalg import format_element, quantum_plane, sign_torus

H = sweedler()
print(dump_hopf(H))
print("axiom violations:", verify_hopf_axioms(H))

# an integral Lambda with eps(Lambda) = 0 rules out semisimplicity
semi, lam = is_semisimple(H)
print("Sweedler semisimple:", semi, " eps(Lambda) =", H.eps(lam))
print("k[Z/4] semisimple:  ", is_semisimple(cyclic_group_algebra(4))[0])
print("k[S3] semisimple:   ", is_semisimple(s3_group_algebra())[0])

# Sweedler acting on the quantum plane at a cube root of unity
A = quantum_plane(3)
act = sweedler_generator_action(A)
x, y = A.gens()
for label in ("g", "u"):
    h = H.labels.index(label)
    for name, a in (("x", x), ("y", y), ("x y", x * y)):
        print(f"{label}.({name}) =", format_element(apply(act, h, a)))
print("module-algebra violations up to degree 6:", verify_module_algebra(act, 6))
print("inner faithful:", bool(inner_faithful(act, 6)))

# the graded action on the three-variable sign torus
T = sign_torus(3)
tact = sweedler_graded_action(T)
print("torus violations up to degree 4:", verify_module_algebra(tact, 4))

# a group acting by a sign on every generator is not inner faithful when
# the sign is trivial
trivial = group_sign_action(cyclic_group_algebra(2), A, [1, 1])
print("trivial Z/2 action inner faithful:", bool(inner_faithful(trivial, 3)))
