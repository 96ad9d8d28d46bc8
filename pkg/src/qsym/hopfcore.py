"""Finite-dimensional Hopf algebras given by structure constants, and their
actions on quantum polynomial algebras and tori.

Conventions on a basis e_0..e_{d-1}:

* ``mult[i][j][k]``   coefficient of e_k in e_i e_j
* ``unit[k]``         coefficient of e_k in 1
* ``comult[i][j][k]`` coefficient of e_j (x) e_k in Delta(e_i)
* ``counit[i]``       epsilon(e_i)
* ``antipode[i][j]``  coefficient of e_j in S(e_i)

Scalars are Fractions (characteristic 0) or prime-field elements when the
algebra is built with ``field=p``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exactnum import FiniteFieldElem, is_prime, nullspace
from .qalg import (
    QAlgebra,
    QTorusElement,
    monomials_up_to,
    parity,
    sweedler_action_data,
)


class UndefinedOnInverse(ValueError):
    """Generator images do not determine the action on x_j^-1."""


class HopfFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom}: {', '.join(map(str, self.witness))}"


# ---------------------------------------------------------------------------
# Hopf algebras
# ---------------------------------------------------------------------------

class FinDimHopf:
    def __init__(self, labels, mult, unit, comult, counit, antipode, field: int | None = None):
        self.labels = tuple(labels)
        self.dim = d = len(self.labels)
        self.field = field
        if field is not None and not is_prime(field):
            raise ValueError(f"{field} is not prime")
        s = self.scalar
        self.mult = [[[s(mult[i][j][k]) for k in range(d)] for j in range(d)] for i in range(d)]
        self.unit = [s(x) for x in unit]
        self.comult = [[[s(comult[i][j][k]) for k in range(d)] for j in range(d)] for i in range(d)]
        self.counit = [s(x) for x in counit]
        self.antipode = [[s(antipode[i][j]) for j in range(d)] for i in range(d)]

    def __repr__(self):
        f = "Q" if self.field is None else f"F_{self.field}"
        return f"FinDimHopf(dim={self.dim}, basis={list(self.labels)}, field={f})"

    # scalars
    def scalar(self, x):
        if self.field is None:
            return Fraction(x)
        if isinstance(x, FiniteFieldElem):
            return x
        x = Fraction(x)
        return FiniteFieldElem.prime_field(self.field, x.numerator) / x.denominator

    @property
    def zero(self):
        return self.scalar(0)

    @property
    def one(self):
        return self.scalar(1)

    # vectors
    def basis(self, i: int | str) -> list:
        if isinstance(i, str):
            i = self.labels.index(i)
        return [self.one if k == i else self.zero for k in range(self.dim)]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def mul(self, a: Sequence, b: Sequence) -> list:
        d = self.dim
        out = [self.zero] * d
        for i in range(d):
            if a[i] == 0:
                continue
            for j in range(d):
                if b[j] == 0:
                    continue
                c = a[i] * b[j]
                row = self.mult[i][j]
                for k in range(d):
                    if row[k] != 0:
                        out[k] += c * row[k]
        return out

    def delta(self, a: Sequence) -> list[list]:
        d = self.dim
        out = [[self.zero] * d for _ in range(d)]
        for i in range(d):
            if a[i] == 0:
                continue
            for j in range(d):
                for k in range(d):
                    if self.comult[i][j][k] != 0:
                        out[j][k] += a[i] * self.comult[i][j][k]
        return out

    def eps(self, a: Sequence):
        return sum((x * y for x, y in zip(a, self.counit)), self.zero)

    def S(self, a: Sequence) -> list:
        d = self.dim
        return [sum((a[i] * self.antipode[i][j] for i in range(d)), self.zero) for j in range(d)]

    def format(self, v: Sequence) -> str:
        terms = []
        for c, lab in zip(v, self.labels):
            if c == 0:
                continue
            terms.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c}*{lab}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def verify_hopf_axioms(H: FinDimHopf) -> list[Violation]:
    """All Hopf algebra axioms checked on basis elements; empty list means pass."""
    d, bad = H.dim, []
    e = [H.basis(i) for i in range(d)]
    L = H.labels
    one = H.unit

    for i, j, k in itertools.product(range(d), repeat=3):
        if H.mul(H.mul(e[i], e[j]), e[k]) != H.mul(e[i], H.mul(e[j], e[k])):
            bad.append(Violation("associativity", (L[i], L[j], L[k])))
    for i in range(d):
        if H.mul(one, e[i]) != e[i] or H.mul(e[i], one) != e[i]:
            bad.append(Violation("unit", (L[i],)))

    for i in range(d):
        t = H.delta(e[i])
        # (Delta (x) id) Delta and (id (x) Delta) Delta as 3-tensors
        left = [[[H.zero] * d for _ in range(d)] for _ in range(d)]
        right = [[[H.zero] * d for _ in range(d)] for _ in range(d)]
        for a, b in itertools.product(range(d), repeat=2):
            c = t[a][b]
            if c == 0:
                continue
            da, db = H.comult[a], H.comult[b]
            for x, y in itertools.product(range(d), repeat=2):
                if da[x][y] != 0:
                    left[x][y][b] += c * da[x][y]
                if db[x][y] != 0:
                    right[a][x][y] += c * db[x][y]
        if left != right:
            bad.append(Violation("coassociativity", (L[i],)))
        eps_left = [sum((H.counit[a] * t[a][b] for a in range(d)), H.zero) for b in range(d)]
        eps_right = [sum((t[a][b] * H.counit[b] for b in range(d)), H.zero) for a in range(d)]
        if eps_left != e[i] or eps_right != e[i]:
            bad.append(Violation("counit", (L[i],)))

    for i, j in itertools.product(range(d), repeat=2):
        prod = H.mul(e[i], e[j])
        di, dj = H.delta(e[i]), H.delta(e[j])
        rhs = [[H.zero] * d for _ in range(d)]
        for a, b, c, f in itertools.product(range(d), repeat=4):
            coef = di[a][b] * dj[c][f]
            if coef == 0:
                continue
            ac, bf = H.mult[a][c], H.mult[b][f]
            for x in range(d):
                if ac[x] == 0:
                    continue
                for y in range(d):
                    if bf[y] != 0:
                        rhs[x][y] += coef * ac[x] * bf[y]
        if H.delta(prod) != rhs:
            bad.append(Violation("comultiplication is multiplicative", (L[i], L[j])))
        if H.eps(prod) != H.eps(e[i]) * H.eps(e[j]):
            bad.append(Violation("counit is multiplicative", (L[i], L[j])))
    unit_delta = [[one[a] * one[b] for b in range(d)] for a in range(d)]
    if H.delta(one) != unit_delta or H.eps(one) != H.one:
        bad.append(Violation("unit is group-like", ("1",)))

    for i in range(d):
        t = H.delta(e[i])
        target = [H.eps(e[i]) * u for u in one]
        left = [H.zero] * d
        right = [H.zero] * d
        for a, b in itertools.product(range(d), repeat=2):
            if t[a][b] == 0:
                continue
            left = [x + t[a][b] * y for x, y in zip(left, H.mul(H.S(e[a]), e[b]))]
            right = [x + t[a][b] * y for x, y in zip(right, H.mul(e[a], H.S(e[b])))]
        if left != target or right != target:
            bad.append(Violation("antipode", (L[i],)))
    return bad


def is_semisimple(H: FinDimHopf) -> tuple[bool, list]:
    """Larson-Sweedler: H is semisimple iff eps(Lambda) != 0 for a left integral Lambda.

    Returns (verdict, Lambda).
    """
    d = H.dim
    rows = []
    for i in range(d):
        # coefficient matrix of Lambda -> e_i Lambda - eps(e_i) Lambda
        for k in range(d):
            rows.append([H.mult[i][j][k] - (H.counit[i] if j == k else H.zero) for j in range(d)])
    space = nullspace(rows, d, H.zero, H.one)
    if len(space) != 1:
        raise AssertionError(f"space of left integrals has dimension {len(space)}, expected 1")
    lam = space[0]
    return H.eps(lam) != 0, lam


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------

def sweedler(field: int | None = None) -> FinDimHopf:
    """4-dimensional Sweedler algebra on the basis 1, g, u, gu (g^a u^b -> a + 2b)."""
    d = 4
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a, b, c, e in itertools.product(range(2), repeat=4):
        if b + e < 2:
            # u g = -g u
            mult[a + 2 * b][c + 2 * e][(a + c) % 2 + 2 * (b + e)] = (-1) ** (b * c)
    comult = [[[0] * d for _ in range(d)] for _ in range(d)]
    comult[0][0][0] = 1                     # 1 -> 1(x)1
    comult[1][1][1] = 1                     # g -> g(x)g
    comult[2][2][0] = comult[2][1][2] = 1   # u -> u(x)1 + g(x)u
    comult[3][3][1] = comult[3][0][3] = 1   # gu -> gu(x)g + 1(x)gu
    counit = [1, 1, 0, 0]
    antipode = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]  # S(u) = -gu, S(gu) = u
    return FinDimHopf(("1", "g", "u", "gu"), mult, [1, 0, 0, 0], comult, counit, antipode, field)


def group_algebra(elements: Sequence, op: Callable, labels: Sequence[str] | None = None,
                  field: int | None = None) -> FinDimHopf:
    """k[G]: group-like basis, S(g) = g^-1."""
    elements = list(elements)
    d = len(elements)
    pos = {g: i for i, g in enumerate(elements)}
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for i, j in itertools.product(range(d), repeat=2):
        mult[i][j][pos[op(elements[i], elements[j])]] = 1
    ident = next(g for g in elements if all(op(g, h) == h for h in elements))
    unit = [int(g == ident) for g in elements]
    comult = [[[int(i == j == k) for k in range(d)] for j in range(d)] for i in range(d)]
    antipode = [[0] * d for _ in range(d)]
    for i, g in enumerate(elements):
        inv = next(h for h in elements if op(g, h) == ident)
        antipode[i][pos[inv]] = 1
    labels = labels or [str(g) for g in elements]
    return FinDimHopf(labels, mult, unit, comult, [1] * d, antipode, field)


def cyclic_group_algebra(n: int, field: int | None = None) -> FinDimHopf:
    labels = ["1"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    return group_algebra(range(n), lambda a, b: (a + b) % n, labels, field)


def s3_group_algebra(field: int | None = None) -> FinDimHopf:
    perms = sorted(itertools.permutations(range(3)))
    compose = lambda s, t: tuple(s[t[i]] for i in range(3))  # noqa: E731
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return group_algebra(perms, compose, labels, field)


def preset(name: str, field: int | None = None) -> FinDimHopf:
    """``sweedler``, ``group:Z/n`` or ``group:S3``."""
    if name == "sweedler":
        return sweedler(field)
    if name.startswith("group:Z/"):
        return cyclic_group_algebra(int(name[len("group:Z/"):]), field)
    if name == "group:S3":
        return s3_group_algebra(field)
    raise HopfFormatError(f"unknown Hopf preset {name!r}")


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_hopf(text: str) -> FinDimHopf:
    """Read the sparse structure-constant format.

    One directive per line, ``#`` starts a comment::

        dimension 4
        basis 1 g u gu
        field Q                 # or a prime p
        unit 0 1                # i value
        mult 1 2 3 1            # i j k value : e_i e_j has value * e_k
        comult 2 1 2 1          # i j k value : Delta(e_i) has value * e_j (x) e_k
        counit 1 1              # i value
        antipode 2 3 -1         # i j value   : S(e_i) has value * e_j

    Integer tokens are basis indices; other tokens are looked up among the
    basis labels.  Values are rationals such as ``-1`` or ``1/2``.
    """
    dim = labels = fld = None
    entries: dict[str, list] = {k: [] for k in ("unit", "mult", "comult", "counit", "antipode")}
    arity = {"unit": 1, "mult": 3, "comult": 3, "counit": 1, "antipode": 2}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        try:
            if key == "dimension":
                dim = int(rest[0])
            elif key == "basis":
                labels = rest
            elif key == "field":
                fld = None if rest[0] in ("Q", "0") else int(rest[0])
            elif key in entries:
                if len(rest) != arity[key] + 1:
                    raise HopfFormatError(f"line {lineno}: {key} needs {arity[key]} indices and a value")
                entries[key].append((rest[:-1], Fraction(rest[-1])))
            else:
                raise HopfFormatError(f"line {lineno}: unknown keyword {key!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, HopfFormatError):
                raise
            raise HopfFormatError(f"line {lineno}: {exc}") from exc
    if dim is None:
        raise HopfFormatError("missing 'dimension'")
    labels = labels or [f"e{i}" for i in range(dim)]
    if len(labels) != dim:
        raise HopfFormatError("basis label count does not match dimension")

    def idx(tok):
        # integer tokens are indices; anything else is a basis label
        try:
            i = int(tok)
        except ValueError:
            if tok not in labels:
                raise HopfFormatError(f"unknown basis label {tok!r}") from None
            return labels.index(tok)
        if not 0 <= i < dim:
            raise HopfFormatError(f"index {i} out of range")
        return i

    d = dim
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    comult = [[[0] * d for _ in range(d)] for _ in range(d)]
    unit, counit = [0] * d, [0] * d
    antipode = [[0] * d for _ in range(d)]
    for ix, v in entries["unit"]:
        unit[idx(ix[0])] = v
    for ix, v in entries["counit"]:
        counit[idx(ix[0])] = v
    for ix, v in entries["mult"]:
        mult[idx(ix[0])][idx(ix[1])][idx(ix[2])] = v
    for ix, v in entries["comult"]:
        comult[idx(ix[0])][idx(ix[1])][idx(ix[2])] = v
    for ix, v in entries["antipode"]:
        antipode[idx(ix[0])][idx(ix[1])] = v
    return FinDimHopf(labels, mult, unit, comult, counit, antipode, fld)


def dump_hopf(H: FinDimHopf) -> str:
    d = H.dim
    lines = [f"dimension {d}", "basis " + " ".join(H.labels), f"field {H.field or 'Q'}"]

    def val(x):
        return str(x.value[0]) if isinstance(x, FiniteFieldElem) else str(x)

    lines += [f"unit {i} {val(c)}" for i, c in enumerate(H.unit) if c != 0]
    lines += [f"mult {i} {j} {k} {val(H.mult[i][j][k])}"
              for i, j, k in itertools.product(range(d), repeat=3) if H.mult[i][j][k] != 0]
    lines += [f"comult {i} {j} {k} {val(H.comult[i][j][k])}"
              for i, j, k in itertools.product(range(d), repeat=3) if H.comult[i][j][k] != 0]
    lines += [f"counit {i} {val(c)}" for i, c in enumerate(H.counit) if c != 0]
    lines += [f"antipode {i} {j} {val(H.antipode[i][j])}"
              for i, j in itertools.product(range(d), repeat=2) if H.antipode[i][j] != 0]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

class HopfAction:
    """Base class: subclasses define ``act_monomial(m, exps)`` for basis index m."""

    hopf: FinDimHopf
    target: QAlgebra

    def act_monomial(self, m: int, exps: tuple[int, ...]) -> QTorusElement:
        raise NotImplementedError

    def _vector(self, h) -> list:
        if isinstance(h, (int, str)):
            return self.hopf.basis(h)
        return list(h)

    def apply(self, h, a: QTorusElement) -> QTorusElement:
        """h . a for a basis index, label or coefficient vector h."""
        vec = self._vector(h)
        out = self.target.zero()
        for m, c in enumerate(vec):
            if c == 0:
                continue
            for u, cu in a.terms.items():
                img = self.act_monomial(m, u) * cu
                out = out + (img if c == 1 else img * c)
        return out


class GeneratorAction(HopfAction):
    """Action determined by images h_m . x_j and the Leibniz rule.

    ``images[(m, j)]`` is the image of generator j under basis element m
    (both 0-based).  Monomials are expanded as the ordered word
    x_1^u_1 ... x_n^u_n.
    """

    def __init__(self, hopf: FinDimHopf, target: QAlgebra, images: dict):
        if hopf.field is not None:
            raise ValueError("actions need a characteristic-0 Hopf algebra")
        self.hopf = hopf
        self.target = target
        self.images = {}
        for m in range(hopf.dim):
            for j in range(target.n):
                if (m, j) not in images:
                    raise ValueError(f"missing image of x{j + 1} under {hopf.labels[m]}")
                self.images[(m, j)] = images[(m, j)]
        self._cache: dict = {}

    def act_word(self, m: int, word: tuple[int, ...]) -> QTorusElement:
        key = (m, word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        H, A = self.hopf, self.target
        if not word:
            out = A.one() * H.counit[m]
        else:
            out = A.zero()
            head, rest = word[0], word[1:]
            for a, b in itertools.product(range(H.dim), repeat=2):
                c = H.comult[m][a][b]
                if c != 0:
                    out = out + self.images[(a, head)] * self.act_word(b, rest) * c
        self._cache[key] = out
        return out

    def act_monomial(self, m, exps):
        if any(e < 0 for e in exps):
            raise UndefinedOnInverse("generator images do not determine the action on inverses")
        word = tuple(j for j, e in enumerate(exps) for _ in range(e))
        return self.act_word(m, word)


class SweedlerGradedAction(HopfAction):
    """g . a = (-1)^deg(a) a;  u . a = z a for odd a and 0 for even a.

    Defined monomial by monomial, so it is total on the quantum torus.
    ``z=None`` makes u act by zero (the action then factors through Z/2).
    """

    def __init__(self, target: QAlgebra, z: QTorusElement | None, hopf: FinDimHopf | None = None):
        self.hopf = hopf or sweedler()
        if self.hopf.labels != ("1", "g", "u", "gu"):
            raise ValueError("graded-rule backend expects the Sweedler basis 1, g, u, gu")
        self.target = target
        self.z = z
        self._words = {0: (), 1: ("g",), 2: ("u",), 3: ("g", "u")}
        self._cache: dict = {}

    def _op(self, name: str, x: QTorusElement) -> QTorusElement:
        A = self.target
        out = A.zero()
        for u, c in x.terms.items():
            mono = A.monomial(u, c)
            if name == "g":
                out = out + (mono if parity(u) == 0 else -mono)
            elif parity(u) == 1 and self.z is not None:
                out = out + self.z * mono
        return out

    def act_monomial(self, m, exps):
        key = (m, tuple(exps))
        hit = self._cache.get(key)
        if hit is None:
            hit = self.target.monomial(exps)
            for name in reversed(self._words[m]):
                hit = self._op(name, hit)
            self._cache[key] = hit
        return hit


def apply(action: HopfAction, h, a: QTorusElement) -> QTorusElement:
    return action.apply(h, a)


def sweedler_generator_action(target: QAlgebra, z: QTorusElement | None = None) -> GeneratorAction:
    """Generator-image form of the graded Sweedler action (polynomial targets)."""
    if z is None:
        z = sweedler_action_data(target)
    H = sweedler()
    images = {}
    for j, x in enumerate(target.gens()):
        images[(0, j)] = x
        images[(1, j)] = -x
        images[(2, j)] = z * x
        images[(3, j)] = z * x  # g . (z x) with z x even
    return GeneratorAction(H, target, images)


def sweedler_graded_action(target: QAlgebra, z: QTorusElement | None = None) -> SweedlerGradedAction:
    return SweedlerGradedAction(target, z if z is not None else sweedler_action_data(target))


def group_sign_action(hopf: FinDimHopf, target: QAlgebra, signs: Sequence[int]) -> GeneratorAction:
    """Group-like basis element m acts on every generator by ``signs[m]``."""
    images = {(m, j): x * signs[m] for m in range(hopf.dim) for j, x in enumerate(target.gens())}
    return GeneratorAction(hopf, target, images)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def verify_module_algebra(action: HopfAction, max_degree: int = 2) -> list[Violation]:
    """Check the action is a well-defined module algebra up to ``max_degree``.

    Empty list means pass.  Checks relation preservation on generator pairs,
    h . 1 = eps(h) 1, the Leibniz rule on monomial pairs with total degree
    <= max_degree, and (hk) . a = h . (k . a) on monomials.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    H, A = action.hopf, action.target
    d, n = H.dim, A.n
    L = H.labels
    bad: list[Violation] = []

    for m in range(d):
        for i in range(n):
            for j in range(i + 1, n):
                q = A.coerce_scalar(A.q[i, j])
                if isinstance(action, GeneratorAction):
                    lhs = action.act_word(m, (i, j)) - action.act_word(m, (j, i)) * q
                else:
                    xi, xj = A.gen(i), A.gen(j)
                    lhs = action.apply(m, xi * xj - xj * xi * q)
                if not lhs.is_zero():
                    bad.append(Violation("relation", (L[m], (i + 1, j + 1))))

    one = A.one()
    for m in range(d):
        if action.apply(m, one) != one * H.counit[m]:
            bad.append(Violation("unit", (L[m],)))

    monos = monomials_up_to(A, max_degree)
    deg = lambda u: sum(abs(e) for e in u)  # noqa: E731
    for u in monos:
        a = A.monomial(u)
        for v in monos:
            if deg(u) + deg(v) > max_degree:
                continue
            b = A.monomial(v)
            ab = a * b
            for m in range(d):
                rhs = A.zero()
                for x, y in itertools.product(range(d), repeat=2):
                    c = H.comult[m][x][y]
                    if c != 0:
                        rhs = rhs + action.apply(x, a) * action.apply(y, b) * c
                if action.apply(m, ab) != rhs:
                    bad.append(Violation("leibniz", (L[m], u, v)))

    for u in monomials_up_to(A, max_degree - 1):
        a = A.monomial(u)
        for i, j in itertools.product(range(d), repeat=2):
            lhs = action.apply(H.mul(H.basis(i), H.basis(j)), a)
            if lhs != action.apply(i, action.apply(j, a)):
                bad.append(Violation("module", (L[i], L[j], u)))
    return bad


@dataclass
class InnerFaithfulness:
    inner_faithful: bool
    ideal: list = field(default_factory=list)      # basis of the largest Hopf ideal in Ann_D
    status: str = "exact"                          # or "truncated"
    annihilator_dims: list = field(default_factory=list)

    def __bool__(self):
        return self.inner_faithful


def _coords(action: HopfAction, m: int, u: tuple[int, ...]) -> dict:
    dom = action.target.domain
    x = action.act_monomial(m, u)
    return {(w, k): c for w, coeff in x.terms.items() for k, c in dom.coords(coeff).items()}


def _restrict(basis: list[list], constraints: Callable[[list], list]) -> list[list]:
    """Subspace {sum y_i basis_i : constraints linear in the element vanish}."""
    if not basis:
        return []
    per_vec = [constraints(b) for b in basis]
    n_eq = len(per_vec[0])
    rows = [[per_vec[i][e] for i in range(len(basis))] for e in range(n_eq)]
    sol = nullspace(rows, len(basis)) if rows else [[Fraction(int(i == j)) for j in range(len(basis))]
                                                      for i in range(len(basis))]
    d = len(basis[0])
    return [[sum((y[i] * basis[i][k] for i in range(len(basis))), Fraction(0)) for k in range(d)] for y in sol]


def largest_hopf_ideal(H: FinDimHopf, space: list[list]) -> list[list]:
    """Largest subspace I of ``space`` with I an ideal, a coideal, eps(I)=0, S(I) in I."""
    d = H.dim
    e = [H.basis(i) for i in range(d)]
    V = [list(v) for v in space]
    while True:
        before = len(V)
        V = _restrict(V, lambda h: [H.eps(h)])
        if not V:
            return []
        W = nullspace(V, d)  # functionals vanishing exactly on V

        def ideal(h):
            out = []
            for a, b in itertools.product(range(d), repeat=2):
                x = H.mul(H.mul(e[a], h), e[b])
                out += [sum((w[k] * x[k] for k in range(d)), Fraction(0)) for w in W]
            return out

        def coideal(h):
            t = H.delta(h)
            return [sum((t[j][k] * w1[j] * w2[k] for j in range(d) for k in range(d)), Fraction(0))
                    for w1 in W for w2 in W]

        def antipode(h):
            s = H.S(h)
            return [sum((w[k] * s[k] for k in range(d)), Fraction(0)) for w in W]

        for cond in (ideal, coideal, antipode):
            if not W:
                break
            V = _restrict(V, cond)
            if not V:
                return []
        if len(V) == before:
            return V


def inner_faithful(action: HopfAction, max_degree: int = 4) -> InnerFaithfulness:
    """Whether no nonzero Hopf ideal of H annihilates all monomials of degree <= max_degree."""
    H, A = action.hopf, action.target
    d = H.dim
    rows: dict = {}
    dims, ann, seen = [], [], set()
    for k in range(max_degree + 1):
        for u in monomials_up_to(A, k):
            if u in seen:
                continue
            seen.add(u)
            for m in range(d):
                for key, c in _coords(action, m, u).items():
                    rows.setdefault((u, key), [Fraction(0)] * d)[m] += Fraction(c)
        ann = nullspace(list(rows.values()), d)
        dims.append(len(ann))
    window = dims[-(d + 1):]
    stable = len(dims) >= d + 1 and len(set(window)) == 1
    ideal = largest_hopf_ideal(H, ann)
    return InnerFaithfulness(not ideal, ideal, "exact" if stable else "truncated", dims)
