"""
Component group, radical and PI degree of a bicharacter
=======================================================

A skew-symmetric bicharacter q on Z^n is stored by its upper-triangle
entries.  Each entry is a root of unity times a monomial in free symbols.
"""

from qsym.latgroup import (Bicharacter, MultElement, component_group_order,
                           is_nondegenerate, radical)
from qsym.qalg import pi_degree, quantum_plane

# q_12 = -1 on two generators: x y = -y x
minus = Bicharacter.from_upper(2, {(0, 1): MultElement.root(2)})
print("ell(q = -1)        =", component_group_order(minus))

# a free parameter q never produces torsion, so the component group is trivial
free = Bicharacter.from_upper(2, {(0, 1): MultElement.generator(0)}, free_names=("q",))
print("ell(q free)        =", component_group_order(free))

# three variables with mixed orders 2, 3, 4: ell is their lcm
mixed = Bicharacter.from_upper(3, {(0, 1): MultElement.root(2),
                                   (0, 2): MultElement.root(3),
                                   (1, 2): MultElement.root(4)})
print("ell(orders 2,3,4)  =", component_group_order(mixed))

# a primitive 5th root is degenerate on Z^2: the radical is 5 Z^2
z5 = Bicharacter.from_upper(2, {(0, 1): MultElement.root(5)})
print("zeta5 nondegenerate:", is_nondegenerate(z5), " radical basis:", radical(z5))

# PI degree of the quantum plane at a primitive N-th root is N
for N in (2, 3, 6, 12):
    value, bound = pi_degree(quantum_plane(N))
    print(f"PI degree at N = {N:2d}: {value}   (N^n = {bound})")
