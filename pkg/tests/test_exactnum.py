from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qsym.exactnum import (
    BadPrime,
    Cyclotomic,
    FiniteFieldElem,
    IndexOutOfRange,
    ZeroElement,
    cyclo_reduce,
    cyclo_reduce_mod_p,
    cyclotomic_factors_mod_p,
    cyclotomic_poly,
    factorint,
    gfp_is_irreducible,
    int_mult_order,
    is_prime,
    mult_order,
    primes_up_to,
    qpoly_divmod,
    qpoly_mul,
    totient,
)


def brute_order(x):
    k, y = 1, x
    while y != 1:
        y = y * x
        k += 1
    return k


# cyclotomic reduction

def test_zeta4_squared_is_minus_one():
    assert cyclo_reduce(4, [0, 0, 1]) == Cyclotomic.rational(-1)


def test_zeta3_plus_zeta3_squared():
    assert cyclo_reduce(3, [0, 1, 1]) == Cyclotomic.rational(-1)


def test_t4_mod_phi6_differs_by_multiple():
    r = cyclo_reduce(6, [0, 0, 0, 0, 1])
    assert len(r.coeffs) == 2
    diff = [Fraction(0)] * 5
    diff[4] = Fraction(1)
    for i, c in enumerate(r.coeffs):
        diff[i] -= c
    _, rem = qpoly_divmod(diff, list(cyclotomic_poly(6)))
    assert not any(rem)


@pytest.mark.parametrize("n", range(1, 40))
def test_cyclotomic_poly_degree_and_product(n):
    assert len(cyclotomic_poly(n)) - 1 == totient(n)
    prod = [1]
    for d in range(1, n + 1):
        if n % d == 0:
            prod = qpoly_mul(prod, list(cyclotomic_poly(d)))
    assert prod == [-1] + [0] * (n - 1) + [1]


@given(st.integers(1, 30), st.lists(st.integers(-5, 5), min_size=1, max_size=40))
def test_cyclo_reduce_idempotent(n, poly):
    r = cyclo_reduce(n, poly)
    assert cyclo_reduce(n, r.coeffs) == r
    assert len(r.coeffs) == totient(n)


elems = st.builds(
    lambda n, cs: Cyclotomic(n, [Fraction(c) for c in cs]),
    st.sampled_from([1, 3, 4, 5, 8, 12]),
    st.lists(st.integers(-4, 4), min_size=1, max_size=6),
)


@given(elems, elems, elems)
def test_cyclotomic_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == Cyclotomic.rational(1)


def test_zeta_powers_and_mixed_conductors():
    z = Cyclotomic.zeta(12)
    assert z**12 == 1 and z**6 == -1
    assert Cyclotomic.zeta(3) * Cyclotomic.zeta(4) == Cyclotomic.zeta(12, 7)
    assert Cyclotomic.zeta(4) ** -1 == Cyclotomic.zeta(4, 3)


# finite fields

def test_mult_order_examples():
    assert mult_order(FiniteFieldElem.prime_field(7, 2)) == 3
    assert mult_order(FiniteFieldElem.prime_field(7, 3)) == 6
    t = FiniteFieldElem(3, (1, 0, 1), (0, 1))
    assert mult_order(t) == 4 == brute_order(t)


def test_mult_order_zero():
    with pytest.raises(ZeroElement):
        mult_order(FiniteFieldElem.prime_field(5, 0))


def test_reduce_examples():
    x = cyclo_reduce_mod_p(Cyclotomic.zeta(3), 7, 0)
    assert x.degree == 1 and mult_order(x) == 3
    y = cyclo_reduce_mod_p(Cyclotomic.zeta(4), 3)
    assert y.field_order == 9 and mult_order(y) == 4
    with pytest.raises(BadPrime):
        cyclo_reduce_mod_p(Cyclotomic.zeta(3), 3)
    with pytest.raises(BadPrime):
        cyclo_reduce_mod_p(Cyclotomic.rational(Fraction(1, 5)), 5)
    with pytest.raises(IndexOutOfRange):
        cyclo_reduce_mod_p(Cyclotomic.zeta(3), 7, 2)


@given(st.integers(1, 30), st.sampled_from(primes_up_to(60)))
def test_reduced_zeta_has_order_n(n, p):
    if n % p == 0:
        return
    factors = cyclotomic_factors_mod_p(n, p)
    for i, f in enumerate(factors):
        assert gfp_is_irreducible(p, f)
        assert mult_order(cyclo_reduce_mod_p(Cyclotomic.zeta(n), p, i)) == n


def test_factor_order_is_reproducible():
    f = cyclotomic_factors_mod_p(5, 11)
    assert f == tuple(sorted(f)) and len(f) == 4


@given(elems, elems, st.sampled_from([13, 37, 61, 73]))
def test_reduction_is_a_ring_map(a, b, p):
    n = 1
    for x in (a, b):
        n = n * x.conductor // __import__("math").gcd(n, x.conductor)
    if n % p == 0:
        return
    a, b = a.embed(n), b.embed(n)
    r = lambda x: cyclo_reduce_mod_p(x, p)  # noqa: E731
    assert r(a + b) == r(a) + r(b)
    assert r(a * b) == r(a) * r(b)


ff = st.builds(lambda cs: FiniteFieldElem(5, (2, 0, 1), cs), st.lists(st.integers(0, 4), min_size=2, max_size=2))


@given(ff, ff, ff)
def test_finite_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert 24 % mult_order(a) == 0


# integers

@given(st.integers(2, 10**12))
def test_factorint_reconstructs(n):
    f = factorint(n)
    prod = 1
    for q, e in f.items():
        assert is_prime(q)
        prod *= q**e
    assert prod == n


def test_factorint_large_semiprime():
    p, q = 1000003, 2147483647
    assert factorint(p * q) == {p: 1, q: 1}


@given(st.sampled_from(primes_up_to(200)), st.integers(1, 10**6))
def test_int_mult_order(p, x):
    if x % p == 0:
        return
    k = int_mult_order(x, p)
    assert pow(x, k, p) == 1
    assert all(pow(x, k // q, p) != 1 for q in factorint(k)) if k > 1 else True
