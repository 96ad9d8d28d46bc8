"""
Orders of parameters modulo primes
==================================

For a tuple g of nonzero algebraic numbers, count the primes p at which
the order of g mod p is coprime to r.
"""

from qsym.exactnum import Cyclotomic
from qsym.redmodp import coprime_to_factorial, prime_search, tuple_order_mod

# the order of 2 mod p for a few small primes
for p in (3, 5, 7, 11, 13, 17):
    print(f"ord_{p}(2) = {tuple_order_mod([2], p).order}")

# primes up to 10^4 where 2 has odd order: the running fraction settles near 7/24
res = prime_search([2], 2, 10**4)
est = res.estimate
print(f"\ng = 2, r = 2: {est.good_count} of {est.primes_total} primes, fraction {est.fraction:.4f}"
      f" (7/24 = {7 / 24:.4f})")

# -1 always has order 2, so no prime is good for r = 2
print("g = -1, r = 2: good primes =", prime_search([-1], 2, 10**4).estimate.good_count)

# a cube root of unity keeps order 3 at every prime other than 3; the prime
# splits completely (residue degree 1) exactly when p = 1 mod 3
z3 = Cyclotomic.zeta(3)
for p in (5, 7, 11, 13):
    rep = tuple_order_mod([z3], p)
    print(f"p = {p:2d}: order {rep.order}, residue degree {rep.residue_degree}")

# the hypothesis gcd(ell, d!) = 1 for a few values
print("\ngcd(5, 4!) = 1:", coprime_to_factorial(5, 4), "  gcd(6, 4!) = 1:", coprime_to_factorial(6, 4))
