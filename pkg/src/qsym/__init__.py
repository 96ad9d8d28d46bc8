"""Exact computations for finite quantum symmetries.

Modules: exactnum (Q, Q(zeta_N), finite fields), latgroup (lattices,
bicharacters), qalg (quantum polynomial algebras and tori), hopfcore
(finite-dimensional Hopf algebras and their actions), redmodp (reduction
mod primes), sklyanin (Hesse cubics and Sklyanin algebras), cli.
"""
__version__ = "0.1.0"
