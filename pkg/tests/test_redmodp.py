from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qsym.exactnum import BadPrime, Cyclotomic, cyclo_reduce_mod_p, factorint, primes_up_to
from qsym.latgroup import MultElement
from qsym.redmodp import (
    UninstantiatedFreeGenerator,
    coprime_to_factorial,
    prime_search,
    tuple_order_mod,
)


def test_order_examples():
    assert tuple_order_mod([2], 7).order == 3
    for p in primes_up_to(60)[1:]:
        assert tuple_order_mod([-1], p).order == 2
    rep = tuple_order_mod([2, 3], 7)
    assert rep.orders == [3, 6] and rep.order == 6


def test_bad_primes():
    with pytest.raises(BadPrime):
        tuple_order_mod([2], 2)
    with pytest.raises(BadPrime):
        tuple_order_mod([Fraction(1, 3)], 3)
    with pytest.raises(BadPrime):
        tuple_order_mod([Cyclotomic.zeta(5)], 5)


def test_free_generators_need_values():
    t = MultElement.generator(0)
    with pytest.raises(UninstantiatedFreeGenerator):
        tuple_order_mod([t], 7)
    assert tuple_order_mod([t * MultElement.root(2)], 7, free_values=[3]).order == 3  # -3 = 4 mod 7


@given(st.lists(st.integers(2, 50), min_size=1, max_size=3), st.sampled_from(primes_up_to(300)[3:]))
def test_order_is_exact(g, p):
    if any(x % p == 0 for x in g):
        return
    rep = tuple_order_mod(g, p)
    assert all(pow(x, rep.order, p) == 1 for x in g)
    for q in factorint(rep.order):
        assert not all(pow(x, rep.order // q, p) == 1 for x in g)


@given(st.integers(1, 24), st.integers(0, 23), st.sampled_from(primes_up_to(200)))
def test_torsion_order_preserved(n, a, p):
    if n % p == 0:
        return
    z = MultElement.root(n, a)
    reps = [tuple_order_mod([z], p, c) for c in range(len(_chars(z, p)))]
    assert all(r.order == z.conductor for r in reps)


def _chars(z, p):
    from qsym.exactnum import cyclotomic_factors_mod_p
    return cyclotomic_factors_mod_p(max(z.conductor, 1), p)


def test_prime_search_two():
    res = prime_search([2], 2, 100)
    good = {p for p, _ in res.good}
    assert 7 in good and 23 in good
    assert tuple_order_mod([2], 23).order == 11
    assert res.estimate.fraction > 0
    for rep in res.reports:
        assert pow(2, rep.order, rep.prime) == 1


def test_prime_search_minus_one():
    assert prime_search([-1], 2, 100).estimate.good_count == 0


def test_prime_search_zeta3():
    res = prime_search([Cyclotomic.zeta(3)], 2, 200)
    good = sorted({p for p, _ in res.good})
    assert good == [p for p in primes_up_to(200) if p != 3]
    assert all(rep.order == 3 for rep in res.reports)
    split = sorted({rep.prime for rep in res.reports if rep.residue_degree == 1})
    assert split == [p for p in primes_up_to(200) if p % 3 == 1]


@pytest.mark.parametrize("g", [[2], [3, 5], [Cyclotomic.zeta(5) * 2]])
def test_r_one_marks_everything_good(g):
    est = prime_search(g, 1, 300).estimate
    assert est.good_count == est.primes_examined == est.good_all_count


def test_parallel_matches_serial():
    a = prime_search([2, Cyclotomic.zeta(4)], 3, 2000)
    b = prime_search([2, Cyclotomic.zeta(4)], 3, 2000, workers=3)
    assert a.estimate == b.estimate and a.good == b.good
    assert [r.as_dict() for r in a.reports] == [r.as_dict() for r in b.reports]


def test_universal_count_is_stricter():
    # zeta5 * 2 splits into several characters mod p = 1 mod 5
    est = prime_search([Cyclotomic.zeta(5) * 2], 2, 500).estimate
    assert est.good_all_count <= est.good_count


def test_coprime_to_factorial():
    assert coprime_to_factorial(5, 4)
    assert not coprime_to_factorial(2, 2)
    assert coprime_to_factorial(1, 10**6)
    assert not coprime_to_factorial(35, 5)
    assert coprime_to_factorial(49, 6)


@given(st.integers(1, 5000), st.integers(1, 12))
def test_coprime_to_factorial_matches_gcd(ell, d):
    import math
    assert coprime_to_factorial(ell, d) == (math.gcd(ell, math.factorial(d)) == 1)


def test_reduction_uses_character_choice():
    x = Cyclotomic.zeta(5)
    vals = {cyclo_reduce_mod_p(x, 11, c) for c in range(4)}
    assert len(vals) == 4
