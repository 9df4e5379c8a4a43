"""Exact integer linear algebra.

Extended gcd, completion of a primitive vector to a matrix in SL(k, Z) by
chained 2x2 Bezout moves, Smith and Hermite normal forms, integer kernels,
and the basis change that puts an integer combination of characteristic
classes first.

All entries are Python ints, so there is no overflow to worry about.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError


class IntMatrix:
    """Immutable rectangular matrix of Python ints."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            if not rows:
                raise DomainError("column count required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DomainError("ragged matrix")
        self._rows = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(([0] * cols for _ in range(rows)), cols=cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows), cols=self.rows) if self.rows else IntMatrix([], cols=0)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DomainError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = [other.column(j) for j in range(other.cols)]
            return IntMatrix(
                ([sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows),
                cols=other.cols,
            )
        vec = list(other)
        if len(vec) != self.cols:
            raise DomainError("vector length does not match column count")
        return [sum(a * b for a, b in zip(r, vec)) for r in self._rows]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"

    def det(self) -> int:
        """Exact determinant via fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise DomainError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.tolist()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if p is None:
                    return 0
                m[k], m[p] = m[p], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y == g``."""
    if a == 0 and b == 0:
        raise DomainError("extended_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def complete_to_sl(v: Sequence[int]) -> IntMatrix:
    """Complete a primitive vector to a matrix of determinant +1 with ``v`` as first row.

    Row 1 carries the running partial vector ``(a_1, ..., a_{j-1}, 0, ...) / g``.
    Step ``j`` folds in ``a_j`` with the unimodular 2x2 move
    ``[[p, q], [x, y]]`` on rows 1 and ``j``, where ``p = g/g'``, ``q = a_j/g'``
    and ``p*y - q*x = 1``.  Each move has determinant one, so the product does.
    """
    v = [int(x) for x in v]
    k = len(v)
    if k == 0:
        raise DomainError("empty vector")
    g_all = vector_gcd(v)
    if g_all != 1:
        raise DomainError(f"vector {v} is not primitive (gcd {g_all})")
    if k == 1:
        if v[0] != 1:
            raise DomainError("the only 1x1 matrix in SL(1, Z) is [[1]]")
        return IntMatrix([[1]])

    rows = [[int(i == j) for j in range(k)] for i in range(k)]
    g = v[0]  # signed: row 1 equals (a_1, 0, ..., 0) / g while g != 0
    for j in range(1, k):
        a = v[j]
        if g == 0 and a == 0:
            continue
        g_new = gcd(g, a)
        p, q = g // g_new, a // g_new
        _, s, t = extended_gcd(p, q)  # p*s + q*t == 1
        y, x = s, -t
        r1, rj = rows[0], rows[j]
        rows[0] = [p * u + q * w for u, w in zip(r1, rj)]
        rows[j] = [x * u + y * w for u, w in zip(r1, rj)]
        g = g_new
    result = IntMatrix(rows)
    assert list(result.row(0)) == v
    return result


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        """Nonzero diagonal entries of ``D``, in divisibility order."""
        n = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(n) if self.D[i, i] != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(m) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivots on the smallest-magnitude nonzero entry of the remaining block.
    """
    m = _as_matrix(m)
    nr, nc = m.shape
    a = m.tolist()
    u = IntMatrix.identity(nr).tolist()
    v = IntMatrix.identity(nc).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    for t in range(min(nr, nc)):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if not done:
                # bring the smallest leftover in row/column t into the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(IntMatrix(u, cols=nr), IntMatrix(a, cols=nc), IntMatrix(v, cols=nc))


def hermite_normal_form(rows: Sequence[Sequence[int]], cols: int | None = None) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows: echelon, positive pivots, and every entry above
    a pivot reduced into ``[0, pivot)``.
    """
    a = [list(map(int, r)) for r in rows]
    if cols is None:
        cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[p] = a[p], a[r]
            cleared = True
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        cleared = False
            if cleared:
                break
        if r < len(a) and a[r][c]:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][c] // a[r][c]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == len(a):
                break
    return [row for row in a[:r]]


def integer_kernel(m) -> list[list[int]]:
    """Z-basis of ``{x in Z^n : M x = 0}``, Hermite-reduced.

    The last ``n - rank`` columns of ``V`` from the Smith decomposition span
    the kernel; HNF then makes the basis canonical.
    """
    m = _as_matrix(m)
    snf = smith_normal_form(m)
    r = snf.rank
    basis = [list(snf.V.column(j)) for j in range(r, m.cols)]
    basis = hermite_normal_form(basis, cols=m.cols)
    for b in basis:
        assert all(x == 0 for x in m @ b)
        assert vector_gcd(b) == 1
    return basis


def normalize_class_basis(d: Sequence[int]) -> tuple[int, IntMatrix]:
    """Return ``(m, A)`` with ``m = gcd(d)`` and ``A`` in SL(len(d), Z) whose first row is ``d/m``.

    Reading rows of ``A`` as coefficients of new characteristic classes, the
    first new class is ``(1/m) * sum(d_i * omega_i)``.
    """
    d = [int(x) for x in d]
    m = vector_gcd(d)
    if m == 0:
        raise DomainError("class combination is zero")
    return m, complete_to_sl([x // m for x in d])


def matrix_rank(m) -> int:
    return smith_normal_form(m).rank
