"""Quantum polynomial algebras k_q[x_1..x_n] and quantum tori.

Elements are kept in normal form: coefficients on the left, monomials
ordered x_1 < x_2 < ... < x_n.  With ``x_i x_j = q_ij x_j x_i`` the
monomial product is::

    x^u * x^v = prod_{i>j} q_ij^(u_i v_j) * x^(u+v)

Scalars q_ij are realized in a coefficient domain.  Free generators of
the bicharacter become Laurent variables over a cyclotomic field, so
``q`` stays symbolic: ``(x+y)^2 = x^2 + (1 + q^-1) xy + y^2``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exactnum import Cyclotomic, cyclo_reduce_mod_p
from .latgroup import (
    Bicharacter,
    MultElement,
    in_radical,
    radical,
    torsion_order_mod,
)


class MixedParents(ValueError):
    pass


class NotTorsion(ValueError):
    pass


class NoCentralOddElement(ValueError):
    pass


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficient domains
# ---------------------------------------------------------------------------

class Laurent:
    """Laurent polynomial in free generators t_1..t_r with Q(zeta_N) coefficients."""

    __slots__ = ("conductor", "terms", "names")

    def __init__(self, conductor: int, terms: dict, names: Sequence[str] = ()):
        self.conductor = conductor
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}
        self.names = tuple(names)

    def _wrap(self, terms):
        return Laurent(self.conductor, terms, self.names)

    def _lift(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            c = other if isinstance(other, Cyclotomic) else Cyclotomic.rational(other, self.conductor)
            return self._wrap({(): c.embed(self.conductor)} if c else {})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._wrap({k: v * other for k, v in self.terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in o.terms.items():
                r = max(len(k1), len(k2))
                k = _strip(tuple(a + b for a, b in zip(_pad(k1, r), _pad(k2, r))))
                out[k] = out[k] + v1 * v2 if k in out else v1 * v2
        return self._wrap(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coords(self) -> dict:
        return {(k, i): c for k, v in self.terms.items() for i, c in enumerate(v.coeffs) if c}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            mono = "*".join(
                (self.names[i] if i < len(self.names) else f"t{i + 1}") + (f"^{e}" if e != 1 else "")
                for i, e in enumerate(k)
                if e
            )
            c = self.terms[k]
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _pad(k, r):
    return k + (0,) * (r - len(k))


def _strip(k):
    while k and k[-1] == 0:
        k = k[:-1]
    return k


class RationalDomain:
    """Q; only q_ij = +-1 are representable."""

    name = "rational"
    zero, one = Fraction(0), Fraction(1)

    def scalar(self, m: MultElement):
        if m.free or m.conductor > 2:
            raise ValueError(f"{m} is not rational")
        return Fraction(-1) if m.conductor == 2 else Fraction(1)

    def from_rational(self, c):
        return Fraction(c)

    def coords(self, c) -> dict:
        return {0: c} if c else {}


class CyclotomicDomain:
    name = "cyclotomic"

    def __init__(self, conductor: int):
        self.conductor = conductor
        self.zero = Cyclotomic.rational(0, conductor)
        self.one = Cyclotomic.rational(1, conductor)

    def scalar(self, m: MultElement):
        if m.free:
            raise ValueError("free generators need a Laurent domain")
        return Cyclotomic.zeta(self.conductor, m.torsion_exponent(self.conductor))

    def from_rational(self, c):
        return Cyclotomic.rational(c, self.conductor)

    def coords(self, c) -> dict:
        return {i: x for i, x in enumerate(c.embed(self.conductor).coeffs) if x}


class LaurentDomain:
    name = "laurent"

    def __init__(self, conductor: int, names: Sequence[str] = ()):
        self.conductor = conductor
        self.names = tuple(names)
        self.zero = Laurent(conductor, {}, names)
        self.one = Laurent(conductor, {(): Cyclotomic.rational(1, conductor)}, names)

    def scalar(self, m: MultElement):
        z = Cyclotomic.zeta(self.conductor, m.torsion_exponent(self.conductor))
        return Laurent(self.conductor, {m.free: z}, self.names)

    def from_rational(self, c):
        return self.one * Fraction(c)

    def coords(self, c) -> dict:
        return c.coords()


class FiniteFieldDomain:
    """F_p[t]/(f) where f is the ``root_index``-th factor of Phi_N mod p.

    Free generators must be instantiated by ``free_values`` (ints mod p).
    """

    name = "finite"

    def __init__(self, p: int, conductor: int, root_index: int = 0, free_values: Sequence[int] = ()):
        self.p = p
        self.conductor = conductor
        self.zeta = cyclo_reduce_mod_p(Cyclotomic.zeta(conductor), p, root_index)
        self.zero = self.zeta * 0
        self.one = self.zero + 1
        self.free_values = [self.one * v for v in free_values]

    def scalar(self, m: MultElement):
        out = self.zeta ** m.torsion_exponent(self.conductor)
        for k, e in enumerate(m.free):
            if e:
                if k >= len(self.free_values):
                    raise ValueError(f"free generator {k + 1} has no value mod {self.p}")
                out = out * self.free_values[k] ** e
        return out

    def from_rational(self, c):
        return self.one * Fraction(c)

    def coords(self, c) -> dict:
        return {i: x for i, x in enumerate(c.value) if x}


def default_domain(q: Bicharacter):
    if q.free_rank:
        return LaurentDomain(q.conductor, q.free_names)
    if q.conductor <= 2:
        return RationalDomain()
    return CyclotomicDomain(q.conductor)


# ---------------------------------------------------------------------------
# algebras and elements
# ---------------------------------------------------------------------------

class QAlgebra:
    """k_q[x_1..x_n] (``variant="poly"``) or the quantum torus (``variant="torus"``)."""

    def __init__(self, q: Bicharacter, domain=None, variant: str = "poly", names: Sequence[str] | None = None):
        if variant not in ("poly", "torus"):
            raise ValueError("variant must be 'poly' or 'torus'")
        self.q = q
        self.n = q.n
        self.domain = domain or default_domain(q)
        self.variant = variant
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(self.n))
        self._mod = q.conductor
        r = q.free_rank
        self._tors = [[q[i, j].torsion_exponent(self._mod) for j in range(self.n)] for i in range(self.n)]
        self._free = [[q[i, j].free_exponents(r) for j in range(self.n)] for i in range(self.n)]
        self._r = r
        self._scalar_cache: dict = {}
        # validate representability up front
        for row in q.entries:
            for m in row:
                self.domain.scalar(m)

    def __repr__(self):
        kind = "k_q[x]" if self.variant == "poly" else "k_q[x^+-1]"
        return f"QAlgebra({kind}, n={self.n}, domain={self.domain.name})"

    # constructors
    def zero(self) -> "QTorusElement":
        return QTorusElement(self, {})

    def one(self) -> "QTorusElement":
        return self.monomial((0,) * self.n)

    def gen(self, i: int) -> "QTorusElement":
        return self.monomial(tuple(int(k == i) for k in range(self.n)))

    def gens(self) -> list["QTorusElement"]:
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, exps: Sequence[int], coeff=None) -> "QTorusElement":
        exps = tuple(exps)
        self._check_exps(exps)
        c = self.domain.one if coeff is None else self.coerce_scalar(coeff)
        return QTorusElement(self, {exps: c})

    def coerce_scalar(self, c):
        if isinstance(c, (int, Fraction)):
            return self.domain.from_rational(c)
        if isinstance(c, MultElement):
            return self.domain.scalar(c)
        return c

    def _check_exps(self, exps):
        if len(exps) != self.n:
            raise ValueError(f"exponent vector {exps} has wrong length")
        if self.variant == "poly" and any(e < 0 for e in exps):
            raise ValueError(f"negative exponent {exps} in polynomial algebra")

    def monomial_scalar(self, u: Sequence[int], v: Sequence[int]):
        """Coefficient c with x^u x^v = c x^(u+v)."""
        t = 0
        f = [0] * self._r
        n = self.n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(i):
                e = u[i] * v[j]
                if e:
                    t += e * self._tors[i][j]
                    for k in range(self._r):
                        f[k] += e * self._free[i][j][k]
        key = (t % self._mod, tuple(f))
        c = self._scalar_cache.get(key)
        if c is None:
            c = self.domain.scalar(MultElement(self._mod, key[0], key[1]))
            self._scalar_cache[key] = c
        return c

    def parse(self, text: str) -> "QTorusElement":
        return parse_element(self, text)


class QTorusElement:
    """Finitely supported map exponent vector -> nonzero coefficient."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: QAlgebra, terms: dict):
        self.parent = parent
        self.terms = {k: v for k, v in terms.items() if v}

    def _same(self, other) -> "QTorusElement":
        if isinstance(other, QTorusElement):
            if other.parent is not self.parent:
                raise MixedParents("elements of different algebras")
            return other
        return QTorusElement(self.parent, {(0,) * self.parent.n: self.parent.coerce_scalar(other)})

    def __add__(self, other):
        o = self._same(other)
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return QTorusElement(self.parent, out)

    __radd__ = __add__

    def __neg__(self):
        return QTorusElement(self.parent, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        if not isinstance(other, QTorusElement):
            c = self.parent.coerce_scalar(other)
            return QTorusElement(self.parent, {k: v * c for k, v in self.terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        c = self.parent.coerce_scalar(other)
        return QTorusElement(self.parent, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1 or self.parent.variant != "torus":
                raise ValueError("only monomials of a torus are invertible")
            (u, c), = self.terms.items()
            neg = tuple(-e for e in u)
            # x^u x^-u = s, so (c x^u)^-1 = (c s)^-1 x^-u
            s = c * self.parent.monomial_scalar(u, neg)
            return QTorusElement(self.parent, {neg: _scalar_inverse(s)}) ** (-k)
        out = self.parent.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._same(other)
        except MixedParents:
            return False
        return not (self - o).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(abs(e) for e in k) for k in self.terms), default=-1)

    def monomials(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return iter(self.terms.items())

    def __str__(self):
        return format_element(self)

    __repr__ = __str__


def _scalar_inverse(s):
    if isinstance(s, Laurent):
        if len(s.terms) != 1:
            raise ValueError("non-monomial Laurent scalar is not invertible")
        (k, v), = s.terms.items()
        return Laurent(s.conductor, {tuple(-e for e in k): v.inverse()}, s.names)
    if isinstance(s, Fraction):
        return 1 / s
    return s.inverse()


def multiply(a: QTorusElement, b: QTorusElement) -> QTorusElement:
    """Product in normal form."""
    if a.parent is not b.parent:
        raise MixedParents("elements of different algebras")
    A = a.parent
    out: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = tuple(x + y for x, y in zip(u, v))
            c = cu * cv * A.monomial_scalar(u, v)
            out[w] = out[w] + c if w in out else c
    return QTorusElement(A, out)


def commutator(a: QTorusElement, b: QTorusElement) -> QTorusElement:
    return a * b - b * a


# ---------------------------------------------------------------------------
# centrality, PI degree, odd central elements
# ---------------------------------------------------------------------------

def parity(exps: Sequence[int]) -> int:
    """Z/2 total-degree grading of a monomial."""
    return sum(exps) % 2


def is_central_monomial(A: QAlgebra, m: Sequence[int]) -> bool:
    """x^m is central iff m lies in the radical of q."""
    A._check_exps(tuple(m))
    return in_radical(A.q, m)


def pi_degree(A: QAlgebra | Bicharacter) -> tuple[int, int]:
    """(PI degree, bound N^n) for a torsion bicharacter of lcm order N.

    The PI degree is sqrt(N^n / |rad_N|), rad_N the radical of q on (Z/N)^n.
    """
    q = A.q if isinstance(A, QAlgebra) else A
    if not q.is_torsion:
        raise NotTorsion("PI degree needs every q_ij to be a root of unity")
    n, N = q.n, q.conductor
    rad = torsion_order_mod(q, N)
    bound = N**n
    sq, rem = divmod(bound, rad)
    root = math.isqrt(sq)
    if rem or root * root != sq:
        raise ArithmeticError(f"N^n / |rad| = {bound}/{rad} is not a perfect square")
    assert bound % root == 0
    return root, bound


def _vectors_of_norm(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All v in Z^n with sum |v_i| = k."""
    if n == 1:
        yield (k,)
        if k:
            yield (-k,)
        return
    for first in range(-k, k + 1):
        for rest in _vectors_of_norm(n - 1, k - abs(first)):
            yield (first,) + rest


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All v in Z_{>=0}^n with sum v_i = k."""
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(n - 1, k - first):
            yield (first,) + rest


def sweedler_action_data(A: QAlgebra, max_degree: int | None = None) -> QTorusElement:
    """Minimal central monomial z of odd total degree.

    Minimal means smallest L1 norm, ties broken by the lexicographically
    largest exponent vector (so x_1 is preferred over x_2, and positive
    exponents over negative ones).  For the polynomial variant with a
    free part the search stops at ``max_degree`` (default 24).
    """
    q = A.q
    n = A.n
    if A.variant == "torus":
        basis = radical(q)
        if not any(parity(b) for b in basis):
            raise NoCentralOddElement("the radical of q has no vector of odd total degree")
        candidates = lambda k: sorted(_vectors_of_norm(n, k), reverse=True)  # noqa: E731
        limit = max_degree or 10**6
    else:
        if q.is_torsion:
            # radical contains N Z^n, so representatives live in [0, 2N)^n
            limit = n * (2 * q.conductor - 1)
            if max_degree:
                limit = min(limit, max_degree)
        else:
            limit = max_degree or 24
        candidates = lambda k: _compositions(n, k) if k % 2 else ()  # noqa: E731
    for k in range(1, limit + 1, 1):
        for v in candidates(k):
            if in_radical(q, v):
                return A.monomial(v)
    raise NoCentralOddElement(f"no central monomial of odd degree up to degree {limit}")


# ---------------------------------------------------------------------------
# text syntax: 3*x1^2*x2^-1 + (1/2)*x3
# ---------------------------------------------------------------------------

_TERM_SPLIT = re.compile(r"([+-])")
_FACTOR = re.compile(r"^\s*(?:\((?P<frac>[^()]*)\)|(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>-?\d+))?)\s*$")


def _split_top(text: str) -> list[tuple[int, str]]:
    terms, depth, buf, sign = [], 0, "", 1
    prev = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and prev not in ("^", "") and buf.strip():
            terms.append((sign, buf))
            buf, sign = "", (1 if ch == "+" else -1)
        elif depth == 0 and ch in "+-" and not buf.strip():
            sign *= 1 if ch == "+" else -1
        else:
            buf += ch
        if not ch.isspace():
            prev = ch
    if buf.strip():
        terms.append((sign, buf))
    return terms


def parse_element(A: QAlgebra, text: str) -> QTorusElement:
    """Parse a sum of products of rational numbers and generator powers.

    Factors multiply in the written order, so ``x2*x1`` is normal-ordered
    with the appropriate q-scalar.
    """
    lookup = {name: i for i, name in enumerate(A.names)}
    if text.strip() in ("", "0"):
        return A.zero()
    total = A.zero()
    for sign, term in _split_top(text):
        prod = A.one() * sign
        for factor in term.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ParseError(f"cannot parse factor {factor!r}")
            if m["frac"] is not None or m["num"] is not None:
                raw = (m["frac"] or m["num"]).replace(" ", "")
                try:
                    prod = prod * Fraction(raw)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ParseError(f"bad coefficient {raw!r}") from exc
            else:
                if m["var"] not in lookup:
                    raise ParseError(f"unknown generator {m['var']!r}")
                e = int(m["exp"]) if m["exp"] else 1
                if e < 0 and A.variant != "torus":
                    raise ParseError("negative exponents are allowed only in the torus variant")
                exps = [0] * A.n
                exps[lookup[m["var"]]] = e
                prod = prod * A.monomial(exps)
        total = total + prod
    return total


def format_monomial(A: QAlgebra, exps: Sequence[int]) -> str:
    parts = [name + (f"^{e}" if e != 1 else "") for name, e in zip(A.names, exps) if e]
    return "*".join(parts)


def format_element(x: QTorusElement) -> str:
    if not x.terms:
        return "0"
    A = x.parent
    key = lambda u: (sum(abs(e) for e in u), tuple(-e for e in u))  # noqa: E731
    parts = []
    for u in sorted(x.terms, key=key):
        c = x.terms[u]
        mono = format_monomial(A, u)
        cs = str(c)
        if not mono:
            parts.append(cs if " " not in cs else f"({cs})")
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        elif re.fullmatch(r"-?\d+", cs):
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(f"({cs})*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


@lru_cache(maxsize=None)
def _all_monomials(n: int, max_degree: int, torus: bool) -> tuple[tuple[int, ...], ...]:
    gen = _vectors_of_norm if torus else _compositions
    return tuple(v for k in range(max_degree + 1) for v in gen(n, k))


def monomials_up_to(A: QAlgebra, max_degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of total (L1) degree <= max_degree."""
    return _all_monomials(A.n, max_degree, A.variant == "torus")


def quantum_plane(order: int, exponent: int = 1) -> QAlgebra:
    """k_q[x, y] with q = zeta_order^exponent."""
    q = Bicharacter.from_upper(2, {(0, 1): MultElement.root(order, exponent)})
    return QAlgebra(q, names=("x", "y"))


def sign_torus(n: int, torsion: MultElement | None = None) -> QAlgebra:
    """Quantum torus with q_ij = q^sign(j-i), q a free generator (times optional torsion)."""
    base = MultElement.generator(0) * (torsion or MultElement())
    m = [[(j > i) - (j < i) for j in range(n)] for i in range(n)]
    return QAlgebra(Bicharacter.from_exponents(m, base, ("q",)), variant="torus")


__all__ = [
    "Laurent",
    "RationalDomain",
    "CyclotomicDomain",
    "LaurentDomain",
    "FiniteFieldDomain",
    "QAlgebra",
    "QTorusElement",
    "multiply",
    "commutator",
    "parity",
    "is_central_monomial",
    "pi_degree",
    "sweedler_action_data",
    "parse_element",
    "monomials_up_to",
    "quantum_plane",
    "sign_torus",
    "MixedParents",
    "NotTorsion",
    "NoCentralOddElement",
    "ParseError",
]
