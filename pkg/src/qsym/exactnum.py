"""Exact coefficient arithmetic.

Three coefficient domains live here:

* rationals (``fractions.Fraction`` is used as-is),
* cyclotomic fields Q(zeta_N), stored in the power basis modulo Phi_N,
* finite fields F_p[t]/(f) with f monic irreducible.

Dense polynomials are coefficient lists, lowest degree first.  Polynomials
over F_p hold plain ints in ``range(p)``.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class ZeroElement(ArithmeticError):
    """Multiplicative order requested for zero."""


class BadPrime(ValueError):
    """The prime divides the conductor or a coefficient denominator."""


class IndexOutOfRange(IndexError):
    """Requested irreducible factor does not exist."""


# ---------------------------------------------------------------------------
# integer number theory
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic-strong beyond."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer.

    Trial division up to 10**6, then Pollard rho on what remains.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    while p <= _TRIAL_LIMIT and p * p <= n:
        for q in (p, p + 2):
            while n % q == 0:
                factors[q] = factors.get(q, 0) + 1
                n //= q
        p += 6
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return dict(sorted(factors.items()))


def totient(n: int) -> int:
    result = n
    for p in factorint(n):
        result -= result // p
    return result


def order_from_group_order(is_one, power, group_order: int) -> int:
    """Least m with x**m == 1 given that x**group_order == 1.

    ``power(k)`` returns x**k and ``is_one`` tests for the identity.
    """
    m = group_order
    for q in factorint(group_order):
        while m % q == 0 and is_one(power(m // q)):
            m //= q
    return m


def int_mult_order(x: int, p: int) -> int:
    """Multiplicative order of x modulo the prime p."""
    x %= p
    if x == 0:
        raise ZeroElement(f"0 has no multiplicative order mod {p}")
    return order_from_group_order(lambda v: v == 1, lambda k: pow(x, k, p), p - 1)


# ---------------------------------------------------------------------------
# polynomials over Q
# ---------------------------------------------------------------------------

def _trim(poly: list) -> list:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def qpoly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def qpoly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim([Fraction(c) for c in num])
    quo = [Fraction(0)] * max(len(rem) - len(den) + 1, 0)
    lead = den[-1]
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, c in enumerate(den):
            rem[shift + i] -= factor * c
        rem.pop()
        _trim(rem)
    return _trim(quo), rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, via (t^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = qpoly_divmod(num, cyclotomic_poly(d))
            assert not rem
    return tuple(int(c) for c in num)


def cyclo_reduce(conductor: int, raw_poly: Iterable) -> "Cyclotomic":
    """Reduce a rational polynomial modulo Phi_N, giving an element of Q(zeta_N)."""
    if conductor < 1:
        raise ValueError("conductor must be positive")
    phi = cyclotomic_poly(conductor)
    _, rem = qpoly_divmod(list(raw_poly), phi)
    deg = len(phi) - 1
    return Cyclotomic(conductor, rem + [Fraction(0)] * (deg - len(rem)), _reduced=True)


def _qpoly_inverse_mod(a: list, mod: Sequence) -> list:
    """Inverse of a modulo mod over Q (mod irreducible)."""
    r0, r1 = [Fraction(c) for c in mod], list(a)
    s0, s1 = [], [Fraction(1)]
    while _trim(r1):
        q, r = qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, qpoly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    inv_lead = 1 / r0[0]
    return [c * inv_lead for c in s0]


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


# ---------------------------------------------------------------------------
# cyclotomic fields
# ---------------------------------------------------------------------------

def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Cyclotomic:
    """Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).

    Mixed arithmetic between conductors M and N happens in Q(zeta_lcm(M, N)).
    Ints and Fractions coerce to conductor 1.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable = (), *, _reduced: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = [_as_fraction(c) for c in coeffs]
        if not _reduced:
            coeffs = list(cyclo_reduce(conductor, coeffs).coeffs)
        self.conductor = conductor
        self.coeffs = tuple(coeffs)
        self._hash = None

    # constructors
    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "Cyclotomic":
        power %= conductor
        return cyclo_reduce(conductor, [0] * power + [1])

    @classmethod
    def rational(cls, value, conductor: int = 1) -> "Cyclotomic":
        deg = len(cyclotomic_poly(conductor)) - 1
        return cls(conductor, [_as_fraction(value)] + [Fraction(0)] * (deg - 1), _reduced=True)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def embed(self, conductor: int) -> "Cyclotomic":
        """Image under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M); requires M | N."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"cannot embed Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        step = conductor // self.conductor
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return cyclo_reduce(conductor, raw)

    def _coerce(self, other) -> tuple["Cyclotomic", "Cyclotomic"] | None:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other, self.conductor)
        elif not isinstance(other, Cyclotomic):
            return None
        n = math.lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coeffs], _reduced=True)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)], _reduced=True)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coeffs], _reduced=True)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if len(a.coeffs) == 1:  # Q itself (N = 1 or 2)
            return Cyclotomic(a.conductor, [a.coeffs[0] * b.coeffs[0]], _reduced=True)
        return cyclo_reduce(a.conductor, qpoly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv = _qpoly_inverse_mod(_trim(list(self.coeffs)), cyclotomic_poly(self.conductor))
        return cyclo_reduce(self.conductor, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0] * pair[1].inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other, self.conductor) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def minimal(self) -> "Cyclotomic":
        """Same element written over the smallest conductor dividing this one that contains it."""
        n = self.conductor
        for d in sorted(k for k in range(1, n + 1) if n % k == 0):
            if d == n:
                break
            # Q(zeta_d) sits inside Q(zeta_n); test membership by solving in the embedded basis.
            cand = _solve_subfield(self, d)
            if cand is not None:
                return cand
        return self

    def rational_value(self) -> Fraction | None:
        """The element as a Fraction if it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        small = self.minimal()
        if small.conductor in (1, 2):
            return small.coeffs[0]
        return None

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        return pair[0].coeffs == pair[1].coeffs

    def __hash__(self):
        if self._hash is None:
            m = self.minimal()
            self._hash = hash(m.coeffs[0]) if m.conductor <= 2 else hash((m.conductor, m.coeffs))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_paren(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _paren(c: Fraction) -> str:
    return f"({c})" if c.denominator != 1 else str(c)


def _solve_subfield(x: Cyclotomic, d: int) -> Cyclotomic | None:
    """Return x as an element of Q(zeta_d) if it lies there, else None."""
    deg = len(cyclotomic_poly(d)) - 1
    basis = [Cyclotomic.zeta(d, i).embed(x.conductor).coeffs for i in range(deg)]
    sol = solve_linear([list(col) for col in zip(*basis)], list(x.coeffs))
    if sol is None:
        return None
    return Cyclotomic(d, sol, _reduced=True)


# ---------------------------------------------------------------------------
# generic exact linear algebra over a field (Fractions, Cyclotomic, FiniteFieldElem)
# ---------------------------------------------------------------------------

def row_echelon(rows: list[list], *, reduced: bool = True) -> tuple[list[list], list[int]]:
    """Gauss-Jordan elimination; returns (nonzero rows, pivot columns).  Copies input."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    if not rows:
        return [], []
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        targets = range(len(rows)) if reduced else range(r + 1, len(rows))
        for i in targets:
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows: list[list]) -> int:
    return len(row_echelon(rows, reduced=False)[1])


def nullspace(rows: list[list], ncols: int, zero=Fraction(0), one=Fraction(1)) -> list[list]:
    """Basis of {v : rows . v = 0}."""
    echelon, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for row, pc in zip(echelon, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve_linear(matrix: list[list], rhs: list) -> list | None:
    """One solution of matrix . x = rhs, or None when inconsistent."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    echelon, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(echelon, pivots):
        x[pc] = row[-1]
    return x


# ---------------------------------------------------------------------------
# polynomials over F_p
# ---------------------------------------------------------------------------

def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def gfp_add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gfp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def gfp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim([c % p for c in out])


def gfp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = _ptrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _ptrim([c % p for c in a])
    quo = [0] * max(len(rem) - len(b) + 1, 0)
    inv = pow(b[-1], -1, p)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        f = rem[-1] * inv % p
        quo[shift] = f
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - f * c) % p
        _ptrim(rem)
    return _ptrim(quo), rem


def gfp_mod(a, b, p):
    return gfp_divmod(a, b, p)[1]


def gfp_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gfp_gcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, gfp_mod(a, b, p)
    return gfp_monic(a, p)


def gfp_powmod(base, e: int, mod, p: int) -> list[int]:
    result = [1]
    base = gfp_mod(base, mod, p)
    while e:
        if e & 1:
            result = gfp_mod(gfp_mul(result, base, p), mod, p)
        base = gfp_mod(gfp_mul(base, base, p), mod, p)
        e >>= 1
    return result


@lru_cache(maxsize=None)
def gfp_is_irreducible(p: int, f: tuple[int, ...]) -> bool:
    """Rabin's test for a monic f over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    f = list(f)
    x = [0, 1]
    if gfp_mod(gfp_sub(gfp_powmod(x, p**n, f, p), x, p), f, p):
        return False
    for q in factorint(n):
        h = gfp_sub(gfp_powmod(x, p ** (n // q), f, p), x, p)
        if gfp_gcd(f, h, p) != [1]:
            return False
    return True


def _ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of a squarefree monic f."""
    out = []
    x = [0, 1]
    h = x
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = gfp_powmod(h, p, f, p)
        g = gfp_gcd(f, gfp_sub(h, x, p), p)
        if g != [1]:
            out.append((g, i))
            f = gfp_divmod(f, g, p)[0]
            h = gfp_mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus equal-degree splitting into degree-d factors."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _ptrim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, acc = a, a
            for _ in range(d - 1):
                t = gfp_mod(gfp_mul(t, t, p), f, p)
                acc = gfp_add(acc, t, p)
            b = acc
        else:
            b = gfp_sub(gfp_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gfp_gcd(f, b, p)
        if 1 < len(g) < len(f):
            return _edf(g, d, p, rng) + _edf(gfp_divmod(f, g, p)[0], d, p, rng)


def gfp_factor_squarefree(f: Sequence[int], p: int) -> list[tuple[int, ...]]:
    """Monic irreducible factors of a squarefree polynomial, sorted lexicographically."""
    f = gfp_monic(_ptrim([c % p for c in f]), p)
    rng = random.Random(p * 1_000_003 + len(f))
    factors = []
    for g, d in _ddf(f, p):
        factors.extend(_edf(g, d, p, rng))
    return sorted(tuple(g) for g in factors)


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

class FiniteFieldElem:
    """Element of F_p[t]/(f) for a monic irreducible f.

    ``modulus`` and ``value`` are coefficient tuples, lowest degree first.
    ``value`` always has exactly ``deg f`` entries.
    """

    __slots__ = ("p", "modulus", "value")

    def __init__(self, p: int, modulus: Sequence[int], value: Sequence[int] | int = 0):
        modulus = tuple(c % p for c in modulus)
        if not modulus or modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not gfp_is_irreducible(p, modulus):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        if isinstance(value, int):
            value = [value]
        rem = gfp_mod(list(value), list(modulus), p)
        deg = len(modulus) - 1
        self.p = p
        self.modulus = modulus
        self.value = tuple(rem + [0] * (deg - len(rem)))

    @classmethod
    def prime_field(cls, p: int, value: int) -> "FiniteFieldElem":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(p, (0, 1), value % p)

    def _new(self, coeffs) -> "FiniteFieldElem":
        out = object.__new__(FiniteFieldElem)
        deg = len(self.modulus) - 1
        rem = gfp_mod(coeffs, list(self.modulus), self.p)
        out.p, out.modulus = self.p, self.modulus
        out.value = tuple(rem + [0] * (deg - len(rem)))
        return out

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def field_order(self) -> int:
        return self.p**self.degree

    def _lift(self, other) -> "FiniteFieldElem | None":
        if isinstance(other, FiniteFieldElem):
            if (other.p, other.modulus) != (self.p, self.modulus):
                raise ValueError("elements of different finite fields")
            return other
        if isinstance(other, int):
            return self._new([other % self.p])
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise BadPrime(f"{self.p} divides the denominator of {other}")
            return self._new([other.numerator * pow(other.denominator, -1, self.p) % self.p])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(gfp_add(self.value, o.value, self.p))

    __radd__ = __add__

    def __neg__(self):
        return self._new([(-c) % self.p for c in self.value])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(gfp_sub(self.value, o.value, self.p))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(gfp_mul(_ptrim(list(self.value)), _ptrim(list(o.value)), self.p))

    __rmul__ = __mul__

    def inverse(self) -> "FiniteFieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # a^(q-2) = a^-1 in F_q
        return self ** (self.field_order - 2)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(gfp_powmod(_ptrim(list(self.value)), k, list(self.modulus), self.p))

    def is_zero(self) -> bool:
        return not any(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (ValueError, BadPrime):
            return False
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.p, self.modulus, self.value))

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})({self.value[0]})"
        return f"GF({self.p}^{self.degree})({list(self.value)} mod {list(self.modulus)})"


def mult_order(e: FiniteFieldElem) -> int:
    """Least m >= 1 with e**m == 1."""
    if e.is_zero():
        raise ZeroElement("zero has no multiplicative order")
    return order_from_group_order(lambda v: v == 1, lambda k: e**k, e.field_order - 1)


@lru_cache(maxsize=None)
def cyclotomic_factors_mod_p(conductor: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Irreducible factors of Phi_N over F_p in lexicographic order of coefficient tuples."""
    if conductor % p == 0:
        raise BadPrime(f"{p} divides the conductor {conductor}")
    return tuple(gfp_factor_squarefree(list(cyclotomic_poly(conductor)), p))


def reduce_rational_mod_p(c: Fraction, p: int) -> int:
    c = _as_fraction(c)
    if c.denominator % p == 0:
        raise BadPrime(f"{p} divides the denominator of {c}")
    return c.numerator * pow(c.denominator, -1, p) % p


def cyclo_reduce_mod_p(x: Cyclotomic | int | Fraction, p: int, root_index: int = 0) -> FiniteFieldElem:
    """Image of x under Q(zeta_N) -> F_p[t]/(factor), zeta_N -> t.

    ``factor`` is the ``root_index``-th irreducible factor of Phi_N mod p.
    """
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.rational(x)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    factors = cyclotomic_factors_mod_p(x.conductor, p)
    if not 0 <= root_index < len(factors):
        raise IndexOutOfRange(
            f"Phi_{x.conductor} has {len(factors)} irreducible factors mod {p}; index {root_index}"
        )
    coeffs = [reduce_rational_mod_p(c, p) for c in x.coeffs]
    return FiniteFieldElem(p, factors[root_index], coeffs)
