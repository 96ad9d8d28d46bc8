"""Hesse cubics, the translation point (a:b:c), and Sklyanin algebras S(a,b,c).

The curve is (a^3+b^3+c^3) xyz = abc (x^3+y^3+z^3) in P^2, with group
identity O = (1:-1:0), an inflection point on every Hesse cubic.

The algebra S(a,b,c) is k<x,y,z> modulo

    a yz + b zy + c x^2,   a zx + b xz + c y^2,   a xy + b yx + c z^2.

Graded pieces are handled by exact sparse elimination over Q.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Sequence

from .exactnum import factorint, is_prime


class DegenerateCurve(ValueError):
    pass


class PointNotOnCurve(ValueError):
    pass


# --------------------------------------------------------------------------
# base fields: Q (Fraction) or F_p (ints mod p)


class _Field:
    def __init__(self, p: int | None = None):
        if p is not None and not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, v):
        if self.p is None:
            return Fraction(v)
        v = Fraction(v)
        if v.denominator % self.p == 0:
            raise DegenerateCurve(f"denominator of {v} vanishes mod {self.p}")
        return v.numerator * pow(v.denominator, -1, self.p) % self.p

    def inv(self, v):
        if self.p is None:
            return 1 / Fraction(v)
        return pow(v, -1, self.p)

    def norm(self, v):
        return Fraction(v) if self.p is None else v % self.p

    def __eq__(self, other):
        return isinstance(other, _Field) and self.p == other.p

    def __hash__(self):
        return hash(self.p)


@dataclass(frozen=True)
class HessePoint:
    x: object
    y: object
    z: object

    @property
    def coords(self) -> tuple:
        return (self.x, self.y, self.z)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"


def _normalize(v: Sequence, k: _Field) -> HessePoint:
    v = [k.norm(c) for c in v]
    for c in v:
        if c != 0:
            inv = k.inv(c)
            return HessePoint(*(k.norm(t * inv) for t in v))
    raise PointNotOnCurve("zero vector is not a projective point")


def discriminant(a, b, c):
    """(3abc)^3 - (a^3+b^3+c^3)^3; the cubic is smooth iff this and abc are nonzero."""
    return (3 * a * b * c) ** 3 - (a**3 + b**3 + c**3) ** 3


class HesseCurve:
    def __init__(self, a, b, c, field: int | None = None):
        k = _Field(field)
        if field == 3:
            raise DegenerateCurve("Hesse form is not used in characteristic 3")
        self.k = k
        self.a, self.b, self.c = k(a), k(b), k(c)
        self.mu = k.norm(self.a**3 + self.b**3 + self.c**3)
        self.lam = k.norm(self.a * self.b * self.c)
        if self.lam == 0 or k.norm(discriminant(self.a, self.b, self.c)) == 0:
            raise DegenerateCurve(f"({a},{b},{c}) gives a singular Hesse cubic")
        self.O = _normalize((1, -1, 0), k)
        self.translation_point = self.point((self.a, self.b, self.c))

    @property
    def field(self) -> int | None:
        return self.k.p

    def F(self, v) -> object:
        x, y, z = v
        return self.k.norm(self.mu * x * y * z - self.lam * (x**3 + y**3 + z**3))

    def grad(self, v) -> tuple:
        x, y, z = v
        m, l = self.mu, self.lam
        return (m * y * z - 3 * l * x * x, m * x * z - 3 * l * y * y, m * x * y - 3 * l * z * z)

    def contains(self, v) -> bool:
        v = v.coords if isinstance(v, HessePoint) else v
        return self.F(v) == 0

    def point(self, v) -> HessePoint:
        v = v.coords if isinstance(v, HessePoint) else tuple(self.k(c) for c in v)
        if not self.contains(v):
            raise PointNotOnCurve(f"{tuple(v)} is not on the curve")
        return _normalize(v, self.k)

    def points(self) -> list[HessePoint]:
        """All F_p-points (finite fields only)."""
        p = self.k.p
        if p is None:
            raise ValueError("enumeration needs a finite field")
        cands = [(1, y, z) for y in range(p) for z in range(p)]
        cands += [(0, 1, z) for z in range(p)] + [(0, 0, 1)]
        return [HessePoint(*v) for v in cands if self.F(v) == 0]

    def __repr__(self):
        return f"HesseCurve({self.a}, {self.b}, {self.c}, field={self.k.p})"


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _third(E: HesseCurve, P: HessePoint, Q: HessePoint) -> HessePoint:
    """Third intersection of the line PQ (tangent if P = Q) with E.

    On the line sP + tQ the cubic restricts to st(s*A + t*B) with
    A = grad F(P).Q and B = grad F(Q).P, so the third root is (B, -A).
    """
    k = E.k
    p, q = P.coords, Q.coords
    if P != Q:
        A, B = k.norm(_dot(E.grad(p), q)), k.norm(_dot(E.grad(q), p))
        return _normalize([B * s - A * t for s, t in zip(p, q)], k)
    g = E.grad(p)
    # a second point on the tangent line at P
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        q2 = tuple(k.norm(c) for c in _cross(g, e))
        if any(q2) and any(k.norm(q2[i] * p[j] - q2[j] * p[i]) for i in range(3) for j in range(3)):
            break
    C, D = k.norm(_dot(E.grad(q2), p)), E.F(q2)
    return _normalize([D * s - C * t for s, t in zip(p, q2)], k)


def hesse_add(E: HesseCurve, P: HessePoint, Q: HessePoint) -> HessePoint:
    for pt in (P, Q):
        if not E.contains(pt):
            raise PointNotOnCurve(f"{pt} is not on the curve")
    return _third(E, E.O, _third(E, P, Q))


def hesse_neg(E: HesseCurve, P: HessePoint) -> HessePoint:
    return _third(E, P, E.O)


def hesse_mul(E: HesseCurve, k: int, P: HessePoint) -> HessePoint:
    if k < 0:
        return hesse_mul(E, -k, hesse_neg(E, P))
    out, base = E.O, P
    while k:
        if k & 1:
            out = hesse_add(E, out, base)
        base = hesse_add(E, base, base)
        k >>= 1
    return out


def point_order(E: HesseCurve, P: HessePoint, bound: int) -> int | None:
    """Order of P by repeated addition, or None if it exceeds bound."""
    cur = P
    for n in range(1, bound + 1):
        if cur == E.O:
            return n
        cur = hesse_add(E, cur, P)
    return None


def _integral_params(a, b, c) -> tuple[int, int, int]:
    fr = [Fraction(a), Fraction(b), Fraction(c)]
    den = reduce(math.lcm, (f.denominator for f in fr), 1)
    ints = [int(f * den) for f in fr]
    g = reduce(math.gcd, ints)
    return tuple(v // g for v in ints)


def good_primes(a, b, c, count: int = 2) -> list[int]:
    """Smallest primes > 3 of good reduction for the integral-scaled parameters."""
    ai, bi, ci = _integral_params(a, b, c)
    bad = ai * bi * ci * discriminant(ai, bi, ci)
    out, p = [], 5
    while len(out) < count:
        if is_prime(p) and bad % p:
            out.append(p)
        p += 2
    return out


INFINITE = "infinite (certified)"
EXCEEDS = "exceeds bound"


def sigma_order(E: HesseCurve, bound: int = 200) -> int | str:
    """Order of the translation point (a:b:c).

    Over F_p this is plain repeated addition.  Over Q the orders mod two
    primes of good reduction (p > 3, where torsion injects) bound any
    torsion order by their gcd g; if g*(a:b:c) != O the point has
    infinite order.
    """
    P = E.translation_point
    if E.field is not None:
        n = point_order(E, P, bound)
        return EXCEEDS if n is None else n
    g = 0
    for p in good_primes(E.a, E.b, E.c):
        Ep = HesseCurve(*_integral_params(E.a, E.b, E.c), field=p)
        g = math.gcd(g, point_order(Ep, Ep.translation_point, p * p + p + 1))
    if hesse_mul(E, g, P) != E.O:
        return INFINITE
    n = min(d for d in _divisors(g) if hesse_mul(E, d, P) == E.O)
    return n if n <= bound else EXCEEDS


def _divisors(n: int) -> list[int]:
    ds = [1]
    for q, e in factorint(n).items():
        ds = [d * q**i for d in ds for i in range(e + 1)]
    return sorted(ds)


# --------------------------------------------------------------------------
# Sklyanin algebra

LETTERS = "xyz"


def _word_index(word: Sequence[int]) -> int:
    out = 0
    for w in word:
        out = 3 * out + w
    return out


def _word(index: int, degree: int) -> tuple[int, ...]:
    out = []
    for _ in range(degree):
        index, r = divmod(index, 3)
        out.append(r)
    return tuple(reversed(out))


def word_text(word: Sequence[int]) -> str:
    return "".join(LETTERS[w] for w in word) or "1"


class _Echelon:
    """Incremental sparse row echelon form over Q, pivots on the smallest column."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def reduce(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        v = dict(v)
        while v:
            done = True
            for col in sorted(v):
                row = self.pivots.get(col)
                if row is None:
                    continue
                f = v[col]
                for c, x in row.items():
                    y = v.get(c, 0) - f * x
                    if y:
                        v[c] = y
                    else:
                        v.pop(c, None)
                done = False
                break
            if done:
                return v
        return v

    def add(self, v: dict[int, Fraction]) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        col = min(v)
        inv = 1 / v[col]
        self.pivots[col] = {c: x * inv for c, x in v.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class SklyaninAlgebra:
    a: Fraction
    b: Fraction
    c: Fraction
    relations_on: bool = True
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        self.a, self.b, self.c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if self.relations_on:
            HesseCurve(self.a, self.b, self.c)

    def relations(self) -> list[dict[tuple[int, int], Fraction]]:
        if not self.relations_on:
            return []
        a, b, c = self.a, self.b, self.c
        X, Y, Z = 0, 1, 2
        return [
            {(Y, Z): a, (Z, Y): b, (X, X): c},
            {(Z, X): a, (X, Z): b, (Y, Y): c},
            {(X, Y): a, (Y, X): b, (Z, Z): c},
        ]

    def ideal(self, m: int) -> _Echelon:
        """Echelon basis of the degree-m part of the relation ideal."""
        with self._lock:
            if m in self._cache:
                return self._cache[m]
            ech = _Echelon()
            if m >= 2:
                rels = self.relations()
                for left in range(m - 1):
                    right = m - 2 - left
                    for w1 in product(range(3), repeat=left):
                        for w2 in product(range(3), repeat=right):
                            for r in rels:
                                ech.add({_word_index(w1 + k + w2): v for k, v in r.items()})
            self._cache[m] = ech
            return ech

    def dim(self, m: int) -> int:
        return 3**m - self.ideal(m).rank

    def normal_words(self, m: int) -> list[int]:
        piv = self.ideal(m).pivots
        return [i for i in range(3**m) if i not in piv]

    def reduce(self, vec: dict[int, Fraction], m: int) -> dict[int, Fraction]:
        """Normal form of a degree-m element modulo the ideal."""
        return self.ideal(m).reduce({k: Fraction(v) for k, v in vec.items() if v})

    def commutator_with(self, vec: dict[int, Fraction], m: int, letter: int) -> dict[int, Fraction]:
        """[T, letter] = T*letter - letter*T as a degree m+1 vector of words."""
        out: dict[int, Fraction] = {}
        shift = 3**m
        for w, v in vec.items():
            for k, s in ((3 * w + letter, v), (letter * shift + w, -v)):
                out[k] = out.get(k, 0) + s
        return {k: v for k, v in out.items() if v}


def sklyanin_hilbert(a, b, c, D: int, relations: bool = True) -> tuple[int, ...]:
    S = SklyaninAlgebra(a, b, c, relations)
    return tuple(S.dim(m) for m in range(D + 1))


def sklyanin_central_deg3(a, b, c) -> list[dict[int, Fraction]]:
    """Basis of degree-3 elements central modulo the degree-4 ideal.

    Elements are returned in normal form: dicts over normal degree-3 words,
    so the basis is a basis of the solution space inside the quotient.
    """
    S = SklyaninAlgebra(a, b, c)
    words = S.normal_words(3)
    cols: list[list[Fraction]] = []
    keys: dict[int, int] = {}
    for w in words:
        col: dict[int, Fraction] = {}
        for letter in range(3):
            red = S.reduce(S.commutator_with({w: Fraction(1)}, 3, letter), 4)
            for k, v in red.items():
                col[letter * 81 + k] = v
        cols.append(col)
        for k in col:
            keys.setdefault(k, len(keys))
    rows = [[Fraction(0)] * len(words) for _ in keys]
    for j, col in enumerate(cols):
        for k, v in col.items():
            rows[keys[k]][j] = v
    from .exactnum import nullspace
    basis = nullspace(rows, len(words)) if rows else [
        [Fraction(int(i == j)) for i in range(len(words))] for j in range(len(words))]
    out = []
    for vec in basis:
        T = {w: v for w, v in zip(words, vec) if v}
        if not is_central_deg3(S, T):
            raise AssertionError("degree-3 central solution failed re-verification")
        out.append(T)
    return out


def is_central_deg3(S: SklyaninAlgebra, T: dict[int, Fraction]) -> bool:
    return all(not S.reduce(S.commutator_with(T, 3, letter), 4) for letter in range(3))


def element_text(vec: dict[int, Fraction], m: int) -> str:
    parts = []
    for k in sorted(vec):
        v = vec[k]
        coef = str(v) if v.denominator == 1 else f"({v})"
        parts.append(f"{coef}*{word_text(_word(k, m))}")
    return " + ".join(parts) if parts else "0"


# --------------------------------------------------------------------------
# hypothesis check


@dataclass
class SklyaninVerdict:
    a: str
    b: str
    c: str
    d: int
    sigma_order: int | str
    verdict: str
    pi_degree: int | None
    explanation: str

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def verdict_from_order(order: int | str, d: int) -> tuple[str, str]:
    if order == INFINITE:
        return "APPLIES", "translation has infinite order"
    if order == EXCEEDS:
        return "INCONCLUSIVE", "translation order not determined within the search bound"
    bad = [q for q in factorint(order) if q <= d]
    if not bad:
        return "APPLIES", f"order {order} has no prime factor <= {d}"
    return "INCONCLUSIVE", f"order {order} shares the prime factor(s) {bad} with {d}!"


def check_theorem_sklyanin(a, b, c, d: int, bound: int = 200) -> SklyaninVerdict:
    if d < 1:
        raise ValueError("d must be positive")
    E = HesseCurve(a, b, c)
    order = sigma_order(E, bound)
    verdict, why = verdict_from_order(order, d)
    pi = order if isinstance(order, int) else None
    return SklyaninVerdict(str(E.a), str(E.b), str(E.c), d, order, verdict, pi, why)
