import random
from fractions import Fraction

import pytest

from qsym.hopfcore import (
    FinDimHopf,
    GeneratorAction,
    HopfFormatError,
    SweedlerGradedAction,
    UndefinedOnInverse,
    apply,
    cyclic_group_algebra,
    dump_hopf,
    group_sign_action,
    inner_faithful,
    is_semisimple,
    parse_hopf,
    preset,
    s3_group_algebra,
    sweedler,
    sweedler_generator_action,
    sweedler_graded_action,
    verify_hopf_axioms,
    verify_module_algebra,
)
from qsym.qalg import quantum_plane, sign_torus, sweedler_action_data


def corrupt_antipode(H):
    S = [row[:] for row in H.antipode]
    S[2] = [0, 0, 1, 0]  # S(u) := u
    return FinDimHopf(H.labels, H.mult, H.unit, H.comult, H.counit, S, H.field)


# Hopf algebras

@pytest.mark.parametrize("H", [sweedler(), cyclic_group_algebra(2), cyclic_group_algebra(5), s3_group_algebra(),
                               sweedler(5), cyclic_group_algebra(3, 3)])
def test_axioms_pass(H):
    assert verify_hopf_axioms(H) == []


def test_sweedler_relations():
    H = sweedler()
    g, u = H.basis("g"), H.basis("u")
    assert H.mul(g, g) == H.unit
    assert not any(H.mul(u, u))
    assert not any(a + b for a, b in zip(H.mul(g, u), H.mul(u, g)))
    assert H.S(u) == [-x for x in H.basis("gu")]


def test_corrupted_antipode_detected():
    bad = verify_hopf_axioms(corrupt_antipode(sweedler()))
    assert bad and {v.axiom for v in bad} == {"antipode"}
    assert ("u",) in [v.witness for v in bad]


def test_semisimplicity():
    semi, lam = is_semisimple(sweedler())
    assert not semi
    H = sweedler()
    assert H.eps(lam) == 0
    # proportional to (1 + g) u = u + gu
    assert lam[0] == lam[1] == 0 and lam[2] == lam[3] != 0
    for n in (2, 3, 5, 6):
        semi, lam = is_semisimple(cyclic_group_algebra(n))
        assert semi and len(set(lam)) == 1
        assert cyclic_group_algebra(n).eps(lam) == n * lam[0]
    assert is_semisimple(s3_group_algebra())[0]


@pytest.mark.parametrize("n,p", [(2, 2), (3, 3), (3, 5), (4, 2), (5, 7), (6, 5)])
def test_group_algebra_semisimple_iff_p_coprime(n, p):
    assert is_semisimple(cyclic_group_algebra(n, p))[0] == (n % p != 0)


def test_s3_mod_p():
    assert not is_semisimple(s3_group_algebra(3))[0]
    assert not is_semisimple(s3_group_algebra(2))[0]
    assert is_semisimple(s3_group_algebra(5))[0]


@pytest.mark.parametrize("H", [sweedler(), s3_group_algebra(), cyclic_group_algebra(5, 5)])
def test_format_round_trip(H):
    H2 = parse_hopf(dump_hopf(H))
    assert H2.labels == H.labels and H2.mult == H.mult and H2.comult == H.comult
    assert H2.antipode == H.antipode and H2.field == H.field


def test_format_errors():
    with pytest.raises(HopfFormatError):
        parse_hopf("dimension 2\nbasis a\n")
    with pytest.raises(HopfFormatError):
        preset("group:D4")


# actions

def test_apply_examples():
    A = quantum_plane(3)
    act = sweedler_generator_action(A)
    x, y = A.gens()
    assert apply(act, "u", y) == x**3 * y
    assert apply(act, "u", x * y).is_zero()
    assert apply(act, "g", x * x * y) == -(x * x * y)
    graded = sweedler_graded_action(A)
    for h in range(4):
        for u in [(1, 0), (0, 1), (2, 1), (1, 2), (3, 0)]:
            assert apply(act, h, A.monomial(u)) == apply(graded, h, A.monomial(u))


@pytest.mark.parametrize("order", [3, 5])
def test_example_quantum_plane_action(order):
    act = sweedler_generator_action(quantum_plane(order))
    assert verify_module_algebra(act, 6) == []
    res = inner_faithful(act, 6)
    assert res.inner_faithful and res.status == "exact"


def test_example_torus_action():
    act = sweedler_graded_action(sign_torus(3))
    assert verify_module_algebra(act, 4) == []
    assert inner_faithful(act, 4).inner_faithful


def test_generator_images_undefined_on_inverses():
    T = sign_torus(3)
    H = cyclic_group_algebra(2)
    act = group_sign_action(H, T, [1, -1])
    with pytest.raises(UndefinedOnInverse):
        act.act_monomial(1, (-1, 0, 0))


def test_corrupted_action_relation_witness():
    A = quantum_plane(3)
    base = sweedler_generator_action(A)
    images = dict(base.images)
    images[(2, 0)] = A.gen(0)  # u . x := x
    bad = verify_module_algebra(GeneratorAction(base.hopf, A, images), 2)
    rel = [v for v in bad if v.axiom == "relation"]
    assert rel and rel[0].witness == ("u", (1, 2))


def test_g_only_action_not_inner_faithful():
    A = quantum_plane(3)
    act = SweedlerGradedAction(A, None)
    assert verify_module_algebra(act, 4) == []
    res = inner_faithful(act, 4)
    assert not res.inner_faithful
    # the ideal is span(u, gu)
    span = [[Fraction(x) for x in v] for v in res.ideal]
    assert len(span) == 2 and all(v[0] == v[1] == 0 for v in span)


def test_group_quotient_not_inner_faithful():
    H = cyclic_group_algebra(4)
    act = group_sign_action(H, quantum_plane(3), [1, -1, 1, -1])
    assert verify_module_algebra(act, 3) == []
    res = inner_faithful(act, 3)
    assert not res.inner_faithful and len(res.ideal) == 2
    # each ideal vector lies in span(g^2 - 1, g^3 - g)
    for v in res.ideal:
        assert v[0] + v[2] == 0 and v[1] + v[3] == 0


@pytest.mark.parametrize("A", [quantum_plane(3), quantum_plane(5), quantum_plane(7, 2)])
def test_inner_faithfulness_for_every_z(A):
    z = sweedler_action_data(A)
    assert inner_faithful(sweedler_graded_action(A, z), 3).inner_faithful
    assert not inner_faithful(SweedlerGradedAction(A, None), 3).inner_faithful


def test_leibniz_on_random_elements():
    A = quantum_plane(3)
    act = sweedler_generator_action(A)
    H = act.hopf
    rng = random.Random(2)
    for _ in range(15):
        a = sum((A.monomial((rng.randint(0, 2), rng.randint(0, 2)), rng.randint(-2, 2)) for _ in range(2)), A.zero())
        b = sum((A.monomial((rng.randint(0, 2), rng.randint(0, 2)), rng.randint(-2, 2)) for _ in range(2)), A.zero())
        for m in range(H.dim):
            rhs = A.zero()
            for i in range(H.dim):
                for j in range(H.dim):
                    c = H.comult[m][i][j]
                    if c:
                        rhs = rhs + apply(act, i, a) * apply(act, j, b) * c
            assert apply(act, m, a * b) == rhs


def test_actions_need_char_zero():
    with pytest.raises(ValueError):
        group_sign_action(cyclic_group_algebra(2, 3), quantum_plane(3), [1, -1])
