"""Classical root systems A, B, C, D in the orthonormal e-basis.

Conventions:

* ``A`` with rank ``n`` is A_n realised in ``n + 1`` coordinates (sl(n+1)),
  so weights coming from the algebra have coordinate sum zero.
* ``B``, ``C``, ``D`` with rank ``n`` live in ``n`` coordinates.
* The pairing is the Euclidean dot product on e-coordinates (the Killing
  form up to scale).
* Fundamental weights are dual to the simple coroots:
  ``2 (w_k, a_j) / (a_j, a_j) = delta_kj``.  For type A this gives
  ``L_k = e_1 + ... + e_k - (k/n)(e_1 + ... + e_n)``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _exact
from .errors import DomainError


class Series(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @classmethod
    def parse(cls, tag) -> "Series":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise DomainError(f"unknown series {tag!r}; expected one of A, B, C, D") from None


MIN_RANK = {Series.A: 1, Series.B: 2, Series.C: 2, Series.D: 3}


class Weight:
    """An exact rational vector in e-coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, i: int, scale=1) -> "Weight":
        """``scale * e_i`` with ``i`` zero-based."""
        c = [0] * dim
        c[i] = scale
        return cls(c)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if len(other) != len(self):
            raise DomainError(f"dimension mismatch: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, k):
        if isinstance(k, Weight):
            return NotImplemented
        k = Fraction(k)
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Weight({[str(c) for c in self.coords]})"

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coords]


def _check_rank(series: Series, rank: int) -> None:
    if not isinstance(rank, int) or rank < MIN_RANK[series]:
        raise DomainError(f"rank {rank!r} out of bounds for series {series.value} (minimum {MIN_RANK[series]})")


def ambient_dim(series, rank: int) -> int:
    series = Series.parse(series)
    _check_rank(series, rank)
    return rank + 1 if series is Series.A else rank


def _e(dim, *terms):
    c = [0] * dim
    for i, s in terms:
        c[i] += s
    return Weight(c)


def simple_roots(series, rank: int) -> list[Weight]:
    series = Series.parse(series)
    dim = ambient_dim(series, rank)
    roots = [_e(dim, (i, 1), (i + 1, -1)) for i in range(rank if series is Series.A else rank - 1)]
    n = rank - 1
    if series is Series.B:
        roots.append(_e(dim, (n, 1)))
    elif series is Series.C:
        roots.append(_e(dim, (n, 2)))
    elif series is Series.D:
        roots.append(_e(dim, (n - 1, 1), (n, 1)))
    return roots


def positive_roots(series, rank: int) -> list[Weight]:
    series = Series.parse(series)
    dim = ambient_dim(series, rank)
    roots = [_e(dim, (i, 1), (j, -1)) for i in range(dim) for j in range(i + 1, dim)]
    if series is Series.A:
        return roots
    roots += [_e(dim, (i, 1), (j, 1)) for i in range(dim) for j in range(i + 1, dim)]
    if series is Series.B:
        roots += [_e(dim, (i, 1)) for i in range(dim)]
    elif series is Series.C:
        roots += [_e(dim, (i, 2)) for i in range(dim)]
    return roots


def sum_positive_roots(series, rank: int) -> Weight:
    """Closed form for twice the Weyl vector.

    A_{n-1}: sum (n - 2k + 1) e_k;  B_n: sum (2n - 2k + 1) e_k;
    C_n: sum 2(n - k + 1) e_k;  D_n: sum 2(n - k) e_k   (k one-based).
    """
    series = Series.parse(series)
    n = ambient_dim(series, rank)
    ks = range(1, n + 1)
    if series is Series.A:
        return Weight(n - 2 * k + 1 for k in ks)
    if series is Series.B:
        return Weight(2 * n - 2 * k + 1 for k in ks)
    if series is Series.C:
        return Weight(2 * (n - k + 1) for k in ks)
    return Weight(2 * (n - k) for k in ks)


def simple_root_coefficients(w: Weight, series, rank: int) -> list[Fraction]:
    """Coefficients ``c`` with ``w = sum c_i alpha_i``; exact."""
    series = Series.parse(series)
    alphas = simple_roots(series, rank)
    if len(w) != len(alphas[0]):
        raise DomainError(f"weight has {len(w)} coordinates, expected {len(alphas[0])}")
    a = _exact.transpose([list(al.coords) for al in alphas])
    c = _exact.solve(a, list(w.coords))
    if c is None:
        raise DomainError(f"{w!r} is not in the span of the simple roots of {series.value}{rank}")
    return c


def from_simple_root_coefficients(c: Sequence, series, rank: int) -> Weight:
    alphas = simple_roots(series, rank)
    if len(c) != len(alphas):
        raise DomainError(f"expected {len(alphas)} coefficients, got {len(c)}")
    out = Weight.zero(len(alphas[0]))
    for ci, al in zip(c, alphas):
        out = out + Fraction(ci) * al
    return out


def cartan_matrix(series, rank: int) -> list[list[int]]:
    """``a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    alphas = simple_roots(series, rank)
    out = []
    for ai in alphas:
        row = []
        for aj in alphas:
            v = 2 * ai.dot(aj) / aj.dot(aj)
            assert v.denominator == 1
            row.append(int(v))
        out.append(row)
    return out


@lru_cache(maxsize=None)
def _fundamental_weights(series: Series, rank: int) -> tuple[Weight, ...]:
    inv = _exact.inverse(cartan_matrix(series, rank))
    # w_k = sum_i c_i alpha_i with sum_i c_i a_ij = delta_kj, i.e. c = row k of A^{-1}
    return tuple(from_simple_root_coefficients(inv[k], series, rank) for k in range(rank))


def fundamental_weight(series, rank: int, k: int) -> Weight:
    """Fundamental weight for simple root ``k`` (one-based)."""
    series = Series.parse(series)
    _check_rank(series, rank)
    if not 1 <= k <= rank:
        raise DomainError(f"node index {k} out of range 1..{rank}")
    return _fundamental_weights(series, rank)[k - 1]


def coroot_pairing(w: Weight, alpha: Weight) -> Fraction:
    """``2 (w, alpha) / (alpha, alpha)``."""
    return 2 * w.dot(alpha) / alpha.dot(alpha)


def dynkin_edges(series, rank: int) -> set[tuple[int, int]]:
    """Edges ``(i, j)``, ``i < j`` one-based, read off the Cartan matrix."""
    a = cartan_matrix(series, rank)
    return {(i + 1, j + 1) for i in range(rank) for j in range(i + 1, rank) if a[i][j]}
