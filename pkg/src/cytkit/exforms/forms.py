"""Exterior algebra on a fixed basis of 1-forms, with exact coefficients.

A ``KForm`` is a homogeneous element of the exterior algebra: a map from
strictly increasing index tuples to nonzero ``Fraction`` coefficients.  The
basis lives in a ``FormSpace`` so that forms from different Lie algebras
cannot be mixed by accident.

``ComplexStructureOp`` stores the action of J on the 1-form basis as a
matrix ``M`` with ``J xi_i = sum_j M[i][j] xi_j``; on k-forms J acts slot by
slot.  ``InvariantMetric`` stores the Gram matrix of the 1-forms; on
k-forms the induced pairing is the determinant of the k x k Gram minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .. import _exact
from ..errors import DomainError


@dataclass(frozen=True)
class FormSpace:
    names: tuple
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise DomainError(f"duplicate basis names in {self.names}")

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.dim:
                raise DomainError(f"basis index {name} out of range")
            return name
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"unknown basis 1-form {name!r}") from None

    def zero(self, degree: int) -> "KForm":
        return KForm(self, degree, {})

    def one(self) -> "KForm":
        return KForm(self, 0, {(): 1})

    def basis(self, name) -> "KForm":
        return KForm(self, 1, {(self.index(name),): 1})

    def monomial(self, *names, coeff=1) -> "KForm":
        """Wedge of basis 1-forms in the given order."""
        out = self.one() * coeff
        for n in names:
            out = out ^ self.basis(n)
        return out

    def form(self, degree: int, terms: Mapping) -> "KForm":
        """Build a form from ``{(name, name, ...): coeff}``; tuples may be unsorted."""
        out = self.zero(degree)
        for key, c in terms.items():
            if isinstance(key, str):
                key = tuple(k for k in key.replace(",", " ").split())
            if len(key) != degree:
                raise DomainError(f"term {key} does not have degree {degree}")
            out = out + self.monomial(*key, coeff=Fraction(c))
        return out


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the permutation sorting ``idx``; 0 if an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


class KForm:
    __slots__ = ("space", "degree", "terms")

    def __init__(self, space: FormSpace, degree: int, terms: Mapping):
        clean = {}
        for key, c in terms.items():
            key = tuple(key)
            if len(key) != degree:
                raise DomainError(f"index tuple {key} has the wrong degree (expected {degree})")
            if any(b <= a for a, b in zip(key, key[1:])):
                raise DomainError(f"index tuple {key} is not strictly increasing")
            c = Fraction(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("KForm is immutable")

    def _same(self, other: "KForm", need_degree=True):
        if not isinstance(other, KForm):
            raise DomainError(f"expected a KForm, got {type(other).__name__}")
        if other.space != self.space:
            raise DomainError("forms belong to different presentations")
        if need_degree and other.degree != self.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return KForm(self.space, self.degree, t)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return KForm(self.space, self.degree, {k: -c for k, c in self.terms.items()})

    def __mul__(self, s):
        if isinstance(s, KForm):
            return NotImplemented
        s = Fraction(s)
        return KForm(self.space, self.degree, {k: s * c for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, KForm)
            and self.space == other.space
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.space, self.degree, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, *names) -> Fraction:
        sign, key = _sort_sign([self.space.index(n) for n in names])
        return sign * self.terms.get(key, Fraction(0))

    def is_multiple_of(self, other: "KForm"):
        """Return ``c`` with ``self == c * other``, or None."""
        self._same(other)
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        key, c0 = next(iter(other.terms.items()))
        c = self.terms.get(key, Fraction(0)) / c0
        return c if self == other * c else None

    def __repr__(self):
        return f"KForm({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            mono = "^".join(self.space.names[i] for i in key) or "1"
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"^".join(self.space.names[i] for i in k): str(c) for k, c in sorted(self.terms.items())}


def wedge(u: KForm, v: KForm) -> KForm:
    u._same(v, need_degree=False)
    out: dict = {}
    for ku, cu in u.terms.items():
        for kv, cv in v.terms.items():
            sign, key = _sort_sign(ku + kv)
            if sign:
                out[key] = out.get(key, 0) + sign * cu * cv
    return KForm(u.space, u.degree + v.degree, out)


def wedge_all(forms: Iterable[KForm], space: FormSpace) -> KForm:
    out = space.one()
    for f in forms:
        out = out ^ f
    return out


def _square(m) -> list[list[Fraction]]:
    rows = _exact.as_fraction_matrix(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("matrix is not square")
    return rows


class ComplexStructureOp:
    """Action of J on the 1-form basis (``J xi_i = sum_j M[i][j] xi_j``); ``M^2 = -I``."""

    def __init__(self, space: FormSpace, matrix):
        m = _square(matrix)
        if len(m) != space.dim:
            raise DomainError(f"J is {len(m)}x{len(m)} but the basis has {space.dim} forms")
        sq = _exact.matmul(m, m)
        if any(sq[i][j] != -(i == j) for i in range(len(m)) for j in range(len(m))):
            raise DomainError("J does not square to -1")
        self.space = space
        self.matrix = m

    def image(self, i: int) -> KForm:
        return KForm(self.space, 1, {(j,): c for j, c in enumerate(self.matrix[i]) if c})

    def apply(self, u: KForm) -> KForm:
        return apply_J(self, u)

    def vector_matrix(self) -> list[list[Fraction]]:
        """Matrix of J on the dual vector basis: ``J e_k = sum_i M[i][k] e_i``."""
        return _exact.transpose(self.matrix)

    def to_json(self):
        return [[str(x) for x in row] for row in self.matrix]


def apply_J(J: ComplexStructureOp, u: KForm) -> KForm:
    if u.space != J.space:
        raise DomainError("form and complex structure belong to different presentations")
    images = [J.image(i) for i in range(u.space.dim)]
    out = u.space.zero(u.degree)
    for key, c in u.terms.items():
        out = out + c * wedge_all((images[i] for i in key), u.space)
    return out


class InvariantMetric:
    """Gram matrix of the 1-form basis (the metric induced on the cotangent space)."""

    def __init__(self, space: FormSpace, gram):
        m = _square(gram)
        n = len(m)
        if n != space.dim:
            raise DomainError(f"Gram matrix is {n}x{n} but the basis has {space.dim} forms")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
            raise DomainError("Gram matrix is not symmetric")
        for k in range(1, n + 1):
            if _exact.det([row[:k] for row in m[:k]]) <= 0:
                raise DomainError(f"Gram matrix is not positive definite (leading minor {k})")
        self.space = space
        self.gram = m

    def pair_1(self, u: KForm, v: KForm) -> Fraction:
        return inner(self, u, v)

    def is_compatible(self, J: ComplexStructureOp) -> bool:
        """``g(J xi, J eta) == g(xi, eta)``, i.e. ``M P M^T == P``."""
        m = J.matrix
        return _exact.matmul(_exact.matmul(m, self.gram), _exact.transpose(m)) == self.gram

    def scaled(self, s) -> "InvariantMetric":
        s = Fraction(s)
        return InvariantMetric(self.space, [[s * x for x in row] for row in self.gram])

    def to_json(self):
        return [[str(x) for x in row] for row in self.gram]


def monomial_inner(g: InvariantMetric, a: tuple, b: tuple) -> Fraction:
    if len(a) != len(b):
        return Fraction(0)
    if not a:
        return Fraction(1)
    return _exact.det([[g.gram[i][j] for j in b] for i in a])


def inner(g: InvariantMetric, u: KForm, v: KForm) -> Fraction:
    """Induced pairing of two forms of equal degree."""
    u._same(v)
    if u.space != g.space:
        raise DomainError("metric and forms belong to different presentations")
    return sum(
        (cu * cv * monomial_inner(g, ku, kv) for ku, cu in u.terms.items() for kv, cv in v.terms.items()),
        Fraction(0),
    )


def monomials(space: FormSpace, degree: int) -> list[tuple]:
    return list(combinations(range(space.dim), degree))


def solve_by_pairings(g: InvariantMetric, degree: int, pairings: Mapping[tuple, Fraction]) -> KForm:
    """The form ``u`` of the given degree with ``g(u, xi_I) = pairings[I]`` for every monomial ``I``."""
    keys = monomials(g.space, degree)
    gram = [[monomial_inner(g, a, b) for b in keys] for a in keys]
    rhs = [Fraction(pairings.get(k, 0)) for k in keys]
    try:
        sol = _exact.solve(gram, rhs)
    except ValueError:
        sol = None
    if sol is None:
        raise DomainError("induced Gram matrix is singular")
    return KForm(g.space, degree, dict(zip(keys, sol)))
