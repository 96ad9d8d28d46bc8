"""Integer lattices and skew-symmetric bicharacters.

A bicharacter entry is a :class:`MultElement`: a root of unity times a
monomial in *free generators*.  The free generators are declared
multiplicatively independent by the caller and are never checked; for
inputs built only from roots of unity nothing needs declaring.

Matrices are lists of lists of Python ints.  Lattice bases are lists of
row vectors.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

IntMatrix = list[list[int]]


class InvalidBicharacter(ValueError):
    """q_ii != 1 or q_ij * q_ji != 1."""


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------

def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: IntMatrix, ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def det(a: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(a: IntMatrix, ncols: int | None = None, verify: bool = True):
    """Smith normal form ``U A V = D``.

    U and V are unimodular and D is diagonal with d_1 | d_2 | ... and
    nonnegative entries.  ``ncols`` is needed only when A has no rows.
    """
    m = len(a)
    n = len(a[0]) if a else (ncols or 0)
    d = [list(row) for row in a]
    u, v = identity(m), identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in itertools.chain(d, v):
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        for mat in (d, u):
            mat[dst] = [x + k * y for x, y in zip(mat[dst], mat[src])]

    def add_col(dst, src, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            piv = d[t][t]
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // piv))
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // piv))
            if any(d[i][t] for i in range(t + 1, m)) or any(d[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % piv), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    if verify:
        _check_snf(a, u, d, v, n)
    return u, d, v


def _check_snf(a, u, d, v, n):
    assert matmul(matmul(u, a), v) == d if a else True
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), n))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(n) if i != j)
    for x, y in zip(diag, diag[1:]):
        assert (y == 0) if x == 0 else (y % x == 0)


def elementary_divisors(a: IntMatrix, ncols: int | None = None) -> list[int]:
    _, d, _ = smith_normal_form(a, ncols, verify=False)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def hermite_rows(vectors: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``; zero rows dropped."""
    rows = [list(v) for v in vectors if any(v)]
    basis: IntMatrix = []
    col = 0
    while rows and col < ncols:
        with_col = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not with_col:
            col += 1
            continue
        # Euclid on the column until a single row carries it
        while len(with_col) > 1:
            with_col.sort(key=lambda r: abs(r[col]))
            piv = with_col[0]
            nxt = [piv]
            for r in with_col[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                (nxt if r[col] else rest).append(r)
            with_col = nxt
        piv = with_col[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for b in range(len(basis)):
            q = basis[b][col] // piv[col]
            basis[b] = [x - q * y for x, y in zip(basis[b], piv)]
        basis.append(piv)
        rows = [r for r in rest if any(r)]
        col += 1
    return basis


def integer_kernel(a: IntMatrix, ncols: int) -> IntMatrix:
    """Basis (rows) of {x in Z^ncols : A x = 0}."""
    if not a:
        return identity(ncols)
    _, d, v = smith_normal_form(a, verify=False)
    r = sum(1 for i in range(min(len(d), ncols)) if d[i][i])
    return hermite_rows([[v[i][j] for i in range(ncols)] for j in range(r, ncols)], ncols)


def congruence_lattice(exact_rows: IntMatrix, mod_rows: IntMatrix, modulus: int, ncols: int) -> IntMatrix:
    """Basis of {x in Z^k : E x = 0 and C x = 0 mod N}.

    The congruence is turned into an equation with slack variables,
    ``C x + N y = 0``, and the kernel of the stacked system is projected
    back onto the x coordinates.
    """
    if modulus == 1 or not mod_rows:
        return integer_kernel(exact_rows, ncols) if exact_rows else identity(ncols)
    c = len(mod_rows)
    stacked = [list(r) + [0] * c for r in exact_rows]
    stacked += [list(r) + [modulus * int(i == j) for j in range(c)] for i, r in enumerate(mod_rows)]
    kern = integer_kernel(stacked, ncols + c)
    return hermite_rows([row[:ncols] for row in kern], ncols)


def saturation_index(basis: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """[sat(L) : L], i.e. the order of the torsion subgroup of Z^m / L."""
    if not basis:
        return 1
    divisors = elementary_divisors([list(b) for b in basis], ncols)
    return math.prod(x for x in divisors if x)


def in_lattice(vec: Sequence[int], basis: IntMatrix) -> bool:
    """Membership test of vec in the row span of a Hermite basis."""
    vec = list(vec)
    for row in basis:
        col = next(i for i, x in enumerate(row) if x)
        if vec[col] % row[col]:
            return False
        q = vec[col] // row[col]
        vec = [x - q * y for x, y in zip(vec, row)]
    return not any(vec)


# ---------------------------------------------------------------------------
# multiplicative elements and bicharacters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultElement:
    """zeta_N^a * t_1^f_1 * ... * t_r^f_r with the t_k declared free.

    Canonical form: N is the exact order of the torsion part (so
    ``MultElement(4, 2)`` stores as ``(2, 1)``) and trailing zero free
    exponents are dropped.
    """

    conductor: int = 1
    exponent: int = 0
    free: tuple[int, ...] = ()

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        a = self.exponent % self.conductor
        g = math.gcd(a, self.conductor)
        n = self.conductor // g
        free = tuple(self.free)
        while free and free[-1] == 0:
            free = free[:-1]
        object.__setattr__(self, "conductor", n)
        object.__setattr__(self, "exponent", a // g if n > 1 else 0)
        object.__setattr__(self, "free", free)

    @classmethod
    def root(cls, conductor: int, exponent: int = 1) -> "MultElement":
        return cls(conductor, exponent)

    @classmethod
    def generator(cls, index: int, power: int = 1) -> "MultElement":
        return cls(1, 0, (0,) * index + (power,))

    def __mul__(self, other: "MultElement") -> "MultElement":
        n = math.lcm(self.conductor, other.conductor)
        a = self.exponent * (n // self.conductor) + other.exponent * (n // other.conductor)
        r = max(len(self.free), len(other.free))
        fa = self.free + (0,) * (r - len(self.free))
        fb = other.free + (0,) * (r - len(other.free))
        return MultElement(n, a, tuple(x + y for x, y in zip(fa, fb)))

    def __pow__(self, k: int) -> "MultElement":
        return MultElement(self.conductor, self.exponent * k, tuple(k * f for f in self.free))

    def inverse(self) -> "MultElement":
        return self**-1

    def is_one(self) -> bool:
        return self.conductor == 1 and not self.free

    @property
    def is_torsion(self) -> bool:
        return not self.free

    @property
    def order(self) -> int | None:
        """Multiplicative order, or None when infinite."""
        return self.conductor if self.is_torsion else None

    def torsion_exponent(self, n: int) -> int:
        """a' with zeta_N^a = zeta_n^a'; requires N | n."""
        if n % self.conductor:
            raise ValueError(f"zeta_{self.conductor} is not an {n}-th root of unity")
        return self.exponent * (n // self.conductor)

    def free_exponents(self, r: int) -> tuple[int, ...]:
        if len(self.free) > r:
            raise ValueError("more free exponents than declared generators")
        return self.free + (0,) * (r - len(self.free))

    def to_text(self, names: Sequence[str] | None = None) -> str:
        parts = []
        if self.conductor == 2:
            parts.append("-1")
        elif self.conductor > 2:
            parts.append(f"zeta{self.conductor}" + (f"^{self.exponent}" if self.exponent != 1 else ""))
        for k, e in enumerate(self.free):
            if e:
                name = names[k] if names else f"t{k + 1}"
                parts.append(name + (f"^{e}" if e != 1 else ""))
        return "*".join(parts) or "1"

    def __str__(self):
        return self.to_text()


ONE = MultElement()


@dataclass(frozen=True)
class Bicharacter:
    """Skew-symmetric bicharacter on Z^n given by the matrix q_ij = q(e_i, e_j)."""

    entries: tuple[tuple[MultElement, ...], ...]
    free_names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidBicharacter("bicharacter matrix must be square")
        for i in range(n):
            if not rows[i][i].is_one():
                raise InvalidBicharacter(f"q_{i + 1}{i + 1} = {rows[i][i]} != 1")
            for j in range(i + 1, n):
                if not (rows[i][j] * rows[j][i]).is_one():
                    raise InvalidBicharacter(f"q_{i + 1}{j + 1} * q_{j + 1}{i + 1} != 1")

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], MultElement], free_names=()) -> "Bicharacter":
        """Build from entries q_ij with i < j (0-based); unspecified entries are 1."""
        rows = [[ONE] * n for _ in range(n)]
        for (i, j), q in upper.items():
            if not 0 <= i < j < n:
                raise InvalidBicharacter(f"upper entry index ({i}, {j}) out of range")
            rows[i][j] = q
            rows[j][i] = q.inverse()
        return cls(tuple(map(tuple, rows)), tuple(free_names))

    @classmethod
    def from_exponents(cls, m: Sequence[Sequence[int]], base: MultElement, free_names=()) -> "Bicharacter":
        """q_ij = base ** m_ij for an antisymmetric integer matrix m."""
        n = len(m)
        for i in range(n):
            for j in range(n):
                if m[i][j] != -m[j][i]:
                    raise InvalidBicharacter("exponent matrix must be antisymmetric")
        return cls(tuple(tuple(base ** m[i][j] for j in range(n)) for i in range(n)), tuple(free_names))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def free_rank(self) -> int:
        return max((len(q.free) for row in self.entries for q in row), default=0)

    @property
    def conductor(self) -> int:
        """lcm of the torsion orders of all entries."""
        return reduce(math.lcm, (q.conductor for row in self.entries for q in row), 1)

    @property
    def is_torsion(self) -> bool:
        return all(q.is_torsion for row in self.entries for q in row)

    def __getitem__(self, ij: tuple[int, int]) -> MultElement:
        i, j = ij
        return self.entries[i][j]

    def upper(self) -> list[MultElement]:
        """The point g = (q_ij)_{i<j} of the torus (k^x)^(n(n-1)/2)."""
        n = self.n
        return [self.entries[i][j] for i in range(n) for j in range(i + 1, n)]

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> MultElement:
        """q(a, b) = prod_{i,j} q_ij^(a_i b_j)."""
        out = ONE
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                if ai * bj:
                    out = out * self.entries[i][j] ** (ai * bj)
        return out

    def character(self, a: Sequence[int]) -> list[MultElement]:
        """Values of q(e_i, a) = prod_j q_ij^(a_j) for each i."""
        n = self.n
        return [self.pairing([int(k == i) for k in range(n)], a) for i in range(n)]


def _relation_rows(elements: Sequence[MultElement]):
    """Rows expressing sum_k x_k * log(elements[k]) = 0 as exact + mod-N constraints."""
    n_mod = reduce(math.lcm, (e.conductor for e in elements), 1)
    r = max((len(e.free) for e in elements), default=0)
    exact = [[e.free_exponents(r)[k] for e in elements] for k in range(r)]
    congr = [[e.torsion_exponent(n_mod) for e in elements]]
    return exact, congr, n_mod


def perp_lattice(elements: Sequence[MultElement]) -> IntMatrix:
    """g^perp = {chi in Z^m : prod_k g_k^chi_k = 1} for g = elements."""
    exact, congr, n_mod = _relation_rows(elements)
    return congruence_lattice(exact, congr, n_mod, len(elements))


def component_group_order(q: Bicharacter) -> int:
    """|G_q / G_q^0|: torsion order of Z^m / g^perp with g = (q_ij)_{i<j}."""
    g = q.upper()
    if not g:
        return 1
    return saturation_index(perp_lattice(g), len(g))


def radical(q: Bicharacter) -> IntMatrix:
    """Basis of {a in Z^n : prod_j q_ij^(a_j) = 1 for every i}."""
    n = q.n
    if n == 0:
        return []
    n_mod = q.conductor
    r = q.free_rank
    exact, congr = [], []
    for i in range(n):
        row = q.entries[i]
        for k in range(r):
            exact.append([row[j].free_exponents(r)[k] for j in range(n)])
        congr.append([row[j].torsion_exponent(n_mod) for j in range(n)])
    return congruence_lattice([e for e in exact if any(e)], congr, n_mod, n)


def in_radical(q: Bicharacter, a: Sequence[int]) -> bool:
    return all(v.is_one() for v in q.character(a))


def is_nondegenerate(q: Bicharacter) -> bool:
    return not radical(q)


def torsion_order_mod(q: Bicharacter, n: int) -> int:
    """|{a in (Z/n)^n : q(., a) = 1}| for torsion q whose entries are n-th roots of unity."""
    if not q.is_torsion:
        raise ValueError("bicharacter has free part")
    dim = q.n
    a = [[q.entries[i][j].torsion_exponent(n) for j in range(dim)] for i in range(dim)]
    divisors = elementary_divisors(a, dim)
    return math.prod(math.gcd(d, n) if d else n for d in divisors)

