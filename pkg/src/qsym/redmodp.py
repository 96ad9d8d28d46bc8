"""Reduction of multiplicative parameters modulo primes.

A tuple g of elements of Q(zeta_N)^x is reduced at a prime p through one
of the irreducible factors of Phi_N mod p (a "character" choice): that is
the residue field of one prime of Q(zeta_N) above p.  The order of g mod
that prime is the lcm of the entry orders.

Density here is natural density among primes up to a bound, used as a
proxy for Dirichlet density.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterator, Sequence

from .exactnum import (
    BadPrime,
    Cyclotomic,
    cyclo_reduce_mod_p,
    cyclotomic_factors_mod_p,
    factorint,
    mult_order,
    primes_up_to,
)
from .latgroup import MultElement


class UninstantiatedFreeGenerator(ValueError):
    pass


@dataclass
class ReductionReport:
    prime: int
    character: int
    residue_degree: int
    orders: list[int]
    order: int
    r: int = 1
    coprime_to_r: bool = True

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class DensityEstimate:
    bound: int
    primes_total: int
    primes_examined: int
    good_count: int
    good_all_count: int
    fraction: float
    fraction_all: float

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class SearchResult:
    estimate: DensityEstimate
    good: list[tuple[int, int]] = field(default_factory=list)
    reports: list[ReductionReport] = field(default_factory=list)


def instantiate(x, free_values: Sequence | None = None) -> Cyclotomic:
    """Concrete value of an int, Fraction, Cyclotomic, or MultElement."""
    if isinstance(x, Cyclotomic):
        return x.embed(2) if x == -1 else x
    if isinstance(x, (int, Fraction)):
        # -1 is the root of unity zeta_2, so p = 2 divides its conductor
        return Cyclotomic.zeta(2) if x == -1 else Cyclotomic.rational(x)
    if isinstance(x, MultElement):
        out = Cyclotomic.zeta(x.conductor, x.exponent) if x.conductor > 1 else Cyclotomic.rational(1)
        for k, e in enumerate(x.free):
            if not e:
                continue
            if not free_values or k >= len(free_values) or free_values[k] is None:
                raise UninstantiatedFreeGenerator(f"free generator {k + 1} has no concrete value")
            v = free_values[k]
            v = v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v)
            out = out * v**e
        return out
    raise TypeError(f"cannot reduce {x!r}")


def _prepare(g: Sequence, free_values) -> tuple[list[Cyclotomic], int]:
    vals = [instantiate(x, free_values) for x in g]
    n = reduce(math.lcm, (v.conductor for v in vals), 1)
    return [v.embed(n) for v in vals], n


def character_count(g: Sequence, p: int, free_values: Sequence | None = None) -> int:
    """Number of primes of Q(zeta_N) above p (irreducible factors of Phi_N mod p)."""
    _, n = _prepare(g, free_values)
    return len(cyclotomic_factors_mod_p(n, p))


def tuple_order_mod(g: Sequence, p: int, character: int = 0, free_values: Sequence | None = None,
                    r: int = 1) -> ReductionReport:
    """Order of g modulo the ``character``-th prime above p."""
    vals, n = _prepare(g, free_values)
    orders = []
    degree = 1
    for v in vals:
        red = cyclo_reduce_mod_p(v, p, character)
        degree = red.degree
        if red.is_zero():
            raise BadPrime(f"{v} vanishes modulo {p}")
        orders.append(mult_order(red))
    if not vals:
        degree = len(cyclotomic_factors_mod_p(n, p)[character]) - 1
    order = reduce(math.lcm, orders, 1)
    return ReductionReport(p, character, degree, orders, order, r, math.gcd(order, r) == 1)


def iter_reductions(g: Sequence, r: int, primes: Sequence[int],
                    free_values: Sequence | None = None) -> Iterator[ReductionReport]:
    """Reports for every good (prime, character) pair; bad primes are skipped."""
    for p in primes:
        try:
            k = character_count(g, p, free_values)
            reports = [tuple_order_mod(g, p, c, free_values, r) for c in range(k)]
        except BadPrime:
            continue
        yield from reports


def _chunk(args) -> list[ReductionReport]:
    g, r, primes, free_values = args
    return list(iter_reductions(g, r, primes, free_values))


def prime_search(g: Sequence, r: int, bound: int, free_values: Sequence | None = None,
                 workers: int | None = None) -> SearchResult:
    """Primes p <= bound at which the order of g is coprime to r.

    A prime counts as good when some character gives an order coprime to r
    (``good_count``); ``good_all_count`` requires every character to.
    """
    if r < 1:
        raise ValueError("r must be positive")
    primes = primes_up_to(bound)
    if workers and workers > 1 and len(primes) > workers:
        size = -(-len(primes) // workers)
        chunks = [(list(g), r, primes[i:i + size], free_values) for i in range(0, len(primes), size)]
        with ProcessPoolExecutor(workers) as pool:
            reports = [rep for part in pool.map(_chunk, chunks) for rep in part]
    else:
        reports = list(iter_reductions(g, r, primes, free_values))
    reports.sort(key=lambda rep: (rep.prime, rep.character))

    by_prime: dict[int, list[ReductionReport]] = {}
    for rep in reports:
        by_prime.setdefault(rep.prime, []).append(rep)
    good = sorted((p, rep.character) for p, reps in by_prime.items() for rep in reps if rep.coprime_to_r)
    good_primes = {p for p, _ in good}
    good_all = [p for p, reps in by_prime.items() if all(rep.coprime_to_r for rep in reps)]
    total = len(primes)
    est = DensityEstimate(
        bound=bound,
        primes_total=total,
        primes_examined=len(by_prime),
        good_count=len(good_primes),
        good_all_count=len(good_all),
        fraction=len(good_primes) / total if total else 0.0,
        fraction_all=len(good_all) / total if total else 0.0,
    )
    return SearchResult(est, good, reports)


def coprime_to_factorial(ell: int, d: int) -> bool:
    """gcd(ell, d!) == 1, i.e. every prime factor of ell exceeds d."""
    if ell < 1 or d < 1:
        raise ValueError("ell and d must be positive")
    return all(q > d for q in factorint(ell))
