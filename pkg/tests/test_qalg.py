import itertools
import random

import pytest
from hypothesis import given, strategies as st

from qsym.exactnum import Cyclotomic, rank
from qsym.latgroup import Bicharacter, MultElement
from qsym.qalg import (
    MixedParents,
    NoCentralOddElement,
    NotTorsion,
    ParseError,
    QAlgebra,
    format_element,
    is_central_monomial,
    parse_element,
    pi_degree,
    quantum_plane,
    sign_torus,
    sweedler_action_data,
)

Q = MultElement.generator(0)


def free_plane():
    return QAlgebra(Bicharacter.from_upper(2, {(0, 1): Q}, ("q",)), names=("x", "y"))


def test_yx_normal_order():
    A = free_plane()
    x, y = A.gens()
    assert y * x == x * y * A.coerce_scalar(Q.inverse())
    assert format_element(y * x) == "(q^-1)*x*y"


def test_square_of_sum():
    A = free_plane()
    x, y = A.gens()
    expected = x * x + x * y * (A.domain.one + A.coerce_scalar(Q.inverse())) + y * y
    assert (x + y) ** 2 == expected
    assert format_element((x + y) ** 2) == "x^2 + (1 + q^-1)*x*y + y^2"


def test_torus_units():
    A = sign_torus(3)
    for u in [(1, -2, 3), (0, 1, -1)]:
        m = A.monomial(u)
        inv = m**-1
        assert m * inv == A.one() and inv * m == A.one()


def random_element(A, rng, max_deg=2, terms=3):
    out = A.zero()
    n = A.n
    for _ in range(terms):
        if A.variant == "torus":
            u = tuple(rng.randint(-max_deg, max_deg) for _ in range(n))
        else:
            u = tuple(rng.randint(0, max_deg) for _ in range(n))
        out = out + A.monomial(u, rng.randint(-3, 3))
    return out


@pytest.mark.parametrize("A", [
    quantum_plane(3), quantum_plane(5, 2), sign_torus(3),
    QAlgebra(Bicharacter.from_upper(3, {(0, 1): MultElement.root(4), (1, 2): MultElement.root(6)})),
])
def test_associativity_random_triples(A):
    rng = random.Random(3)
    for _ in range(20):
        a, b, c = (random_element(A, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_monomial_scalars_commute_rule(u, v):
    A = sign_torus(3)
    s_uv = A.monomial_scalar(u, v)
    s_vu = A.monomial_scalar(v, u)
    pair = A.coerce_scalar(A.q.pairing(u, v))
    # x^u x^v = q(u, v) x^v x^u
    assert s_uv == pair * s_vu


def test_central_monomial_examples():
    assert is_central_monomial(quantum_plane(3), (3, 0))
    assert is_central_monomial(sign_torus(3), (1, -1, 1))
    A = QAlgebra(Bicharacter.from_upper(2, {(0, 1): MultElement.root(2)}))
    assert not is_central_monomial(A, (1, 0))


def test_sweedler_data_examples():
    A = quantum_plane(3)
    assert sweedler_action_data(A) == A.monomial((3, 0))
    T = sign_torus(3)
    assert sweedler_action_data(T) == T.monomial((1, -1, 1))
    with pytest.raises(NoCentralOddElement):
        sweedler_action_data(sign_torus(2))


@pytest.mark.parametrize("A", [quantum_plane(3), quantum_plane(5), quantum_plane(7, 3), sign_torus(3), sign_torus(5)])
def test_z_is_central_and_odd(A):
    z = sweedler_action_data(A)
    (u,), = [tuple(z.terms)]
    assert sum(u) % 2 == 1
    for x in A.gens():
        assert z * x == x * z


def plane_representation_dimension(N):
    """dim of the algebra generated by X = diag(q^i), Y = shift in M_N(Q(zeta_N))."""
    q = Cyclotomic.zeta(N)
    zero, one = Cyclotomic.rational(0, N), Cyclotomic.rational(1, N)

    def X(a):
        return [[q ** (a * i) if i == j else zero for j in range(N)] for i in range(N)]

    def Y(b):
        return [[one if i == (j + b) % N else zero for j in range(N)] for i in range(N)]

    def mul(a, b):
        return [[sum((a[i][k] * b[k][j] for k in range(N) if a[i][k] != 0 and b[k][j] != 0), zero)
                 for j in range(N)] for i in range(N)]

    assert mul(X(1), Y(1)) == [[q * c for c in row] for row in mul(Y(1), X(1))]
    # X^a Y^b for fixed b is supported on {(j + b, j)}; blocks for different b are disjoint
    total = 0
    for b in range(N):
        rows = []
        for a in range(N):
            m = mul(X(a), Y(b))
            assert all(m[i][j] == 0 for i in range(N) for j in range(N) if i != (j + b) % N)
            rows.append([m[(j + b) % N][j] for j in range(N)])
        total += rank(rows)
    return total


@pytest.mark.parametrize("N", range(2, 13))
def test_pi_degree_quantum_plane(N):
    assert pi_degree(quantum_plane(N))[0] == N
    assert plane_representation_dimension(N) == N * N


def brute_radical_size(q, N):
    n = q.n
    count = 0
    for a in itertools.product(range(N), repeat=n):
        if all(v.is_one() for v in q.character(a)):
            count += 1
    return count


def test_pi_degree_square_identity():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(1, 3)
        upper = {(i, j): MultElement.root(rng.choice([1, 2, 3, 4, 6, 8]), rng.randint(0, 7))
                 for i in range(n) for j in range(i + 1, n)}
        q = Bicharacter.from_upper(n, upper)
        N = q.conductor
        if N > 8:
            continue
        pi, bound = pi_degree(q)
        assert bound == N**n and bound % pi == 0
        assert pi * pi * brute_radical_size(q, N) == N**n


def test_pi_degree_errors_and_trivial():
    assert pi_degree(QAlgebra(Bicharacter.from_upper(2, {})))[0] == 1
    with pytest.raises(NotTorsion):
        pi_degree(free_plane())


def test_parse_and_format_round_trip():
    T = sign_torus(3)
    e = parse_element(T, "3*x1^2*x2^-1 + (1/2)*x3")
    assert e.terms[(2, -1, 0)] == T.domain.from_rational(3)
    assert parse_element(T, format_element(e)) == e
    A = quantum_plane(3)
    with pytest.raises(ParseError):
        parse_element(A, "x^-1")
    with pytest.raises(ParseError):
        parse_element(A, "w")
    x, y = A.gens()
    assert parse_element(A, "y*x") == y * x


def test_mixed_parents():
    with pytest.raises(MixedParents):
        quantum_plane(3).gen(0) * quantum_plane(3).gen(0)
