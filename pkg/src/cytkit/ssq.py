"""Integral cohomology of SU(4)/U(1) through the Borel spectral sequence.

The circle acts on C^4 with weights ``(k, l, m, t4)``, ``m = -3k - 2l`` and
``t4 = 2k + l``.  Restricting the universal classes of SU(4) to the circle
gives three integers

    M4 = -(t1^2 + t2^2 + t3^2) + t1 t2 + t2 t3 + t1 t3
    N6 = -2 t1 t2 t3 + t1 t2 (t1 + t2) + t2 t3 (t2 + t3) + t1 t3 (t1 + t3)
    K8 = -t1 t2 t3 (t1 + t2 + t3)

evaluated at ``(t1, t2, t3) = (k, l, m)``.  The page ``E_2 = Z[s] x L(u3, u5, u7)``
(``s`` in degree 2) carries ``d4 u3 = M4 s^2``, ``d6 u5 = N6 s^3`` and
``d8 u7 = K8 s^4``.  The pages are computed as the spectral sequence of the
filtered complex with exactly these transgressions: every ``E_r`` cell is a
quotient of two integer lattices inside the cochains of one total degree,
and its invariants come from a Smith normal form.

Signs follow the polynomials above.  Group orders use absolute values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd

from . import _exact
from .errors import DomainError, MathAssertionError
from .intlat import hermite_normal_form, integer_kernel, smith_normal_form

MAX_DEGREE = 15
TOP_DIMENSION = 14
GENERATORS = (3, 5, 7)
# filtration jump (in powers of s) of the transgression of each generator
_S_SHIFT = {3: 2, 5: 3, 7: 4}


# -- weights and polynomials --------------------------------------------------------

@dataclass(frozen=True)
class WeightChoice:
    k: int
    l: int

    def __post_init__(self):
        if gcd(self.k, self.l, self.m, self.t4) != 1:
            raise DomainError(
                f"weights {self.weights} are not primitive: gcd = {gcd(self.k, self.l, self.m, self.t4)}"
            )

    @property
    def m(self) -> int:
        return -3 * self.k - 2 * self.l

    @property
    def t4(self) -> int:
        return 2 * self.k + self.l

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return (self.k, self.l, self.m, self.t4)


@dataclass(frozen=True)
class RestrictionPolys:
    M4: int
    N6: int
    K8: int

    @property
    def magnitudes(self) -> tuple[int, int, int]:
        return abs(self.M4), abs(self.N6), abs(self.K8)


def general_polys(t1: int, t2: int, t3: int) -> RestrictionPolys:
    """The three restriction polynomials in the first three weights."""
    m4 = -(t1 * t1 + t2 * t2 + t3 * t3) + t1 * t2 + t2 * t3 + t1 * t3
    n6 = -2 * t1 * t2 * t3 + t1 * t2 * (t1 + t2) + t2 * t3 * (t2 + t3) + t1 * t3 * (t1 + t3)
    k8 = -t1 * t2 * t3 * (t1 + t2 + t3)
    return RestrictionPolys(m4, n6, k8)


def specialized_polys(k: int, l: int) -> RestrictionPolys:
    """Closed forms in ``(k, l)``; these agree with ``general_polys`` up to sign."""
    return RestrictionPolys(
        13 * k * k + 7 * l * l + 16 * k * l,
        6 * k ** 3 + 2 * l ** 3 + 26 * k * k * l + 18 * k * l * l,
        6 * k ** 3 * l + 2 * k * l ** 3 + 7 * k * k * l * l,
    )


def restriction_polys(k: int, l: int) -> RestrictionPolys:
    w = WeightChoice(k, l)
    p = general_polys(w.k, w.l, w.m)
    q = specialized_polys(k, l)
    if p.magnitudes != q.magnitudes:
        raise MathAssertionError(f"restriction polynomials disagree at {(k, l)}: {p} vs {q}")
    return p


def gcd_conditions(p: RestrictionPolys) -> tuple[int, bool]:
    """``(L, eligible)`` with ``L = gcd(M4, N6)`` and eligibility ``gcd(M4, N6, K8) = 1``."""
    m4, n6, k8 = p.magnitudes
    return gcd(m4, n6), gcd(m4, n6, k8) == 1


# -- abelian groups and lattices ----------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus cyclic torsion with each coefficient dividing the next."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.rank < 0 or any(x <= 1 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise DomainError(f"invalid abelian group data: rank {self.rank}, torsion {t}")

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


def direct_sum(groups) -> AbelianGroup:
    """Direct sum, with torsion regrouped into invariant factors."""
    groups = list(groups)
    rank = sum(g.rank for g in groups)
    cyclic = [t for g in groups for t in g.torsion]
    if not cyclic:
        return AbelianGroup(rank)
    n = len(cyclic)
    diag = [[cyclic[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return AbelianGroup(rank, tuple(x for x in smith_normal_form(diag).invariant_factors if x > 1))


class Lattice:
    """Subgroup of ``Z^n`` stored by its Hermite basis."""

    __slots__ = ("n", "basis")

    def __init__(self, n: int, generators=()):
        self.n = n
        gens = [list(g) for g in generators if any(g)]
        self.basis = hermite_normal_form(gens, cols=n) if gens else []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.n, self.basis + other.basis)

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.n == other.n and self.basis == other.basis

    def coordinates(self, v) -> list[int] | None:
        """Integer coordinates of ``v`` in the basis, or None if ``v`` is not in the lattice."""
        if not any(v):
            return [0] * self.rank
        if not self.basis:
            return None
        sol = _exact.solve(_exact.transpose(self.basis), list(v))
        if sol is None or any(x.denominator != 1 for x in sol):
            return None
        return [int(x) for x in sol]

    def contains(self, other: "Lattice") -> bool:
        return all(self.coordinates(b) is not None for b in other.basis)

    def quotient(self, sub: "Lattice") -> AbelianGroup:
        rows = [self.coordinates(b) for b in sub.basis]
        if any(r is None for r in rows):
            raise MathAssertionError("quotient of lattices: denominator is not a sublattice")
        if not rows:
            return AbelianGroup(self.rank)
        factors = smith_normal_form(rows).invariant_factors
        return AbelianGroup(self.rank - len(factors), tuple(x for x in factors if x > 1))


# -- the filtered cochain complex ---------------------------------------------------

@dataclass(frozen=True)
class Cochain:
    """Basis element ``s^a u_S``."""

    a: int
    gens: tuple

    @property
    def degree(self) -> int:
        return 2 * self.a + sum(self.gens)

    @property
    def p(self) -> int:
        return 2 * self.a

    def __str__(self):
        s = "" if self.a == 0 else ("s" if self.a == 1 else f"s^{self.a}")
        u = "".join(f"u{g}" for g in self.gens)
        return (s + u) or "1"


class KoszulModel:
    """``Z[s] x L(u3, u5, u7)`` with ``D u_j = c_j s^{shift_j}`` up to a total degree."""

    def __init__(self, polys: RestrictionPolys, max_degree: int = MAX_DEGREE):
        self.polys = polys
        self.max_degree = max_degree
        self.coeff = {3: polys.M4, 5: polys.N6, 7: polys.K8}
        self.basis: dict[int, list[Cochain]] = {}
        for n in range(max_degree + 2):
            cells = []
            for size in range(4):
                for gens in combinations(GENERATORS, size):
                    rest = n - sum(gens)
                    if rest >= 0 and rest % 2 == 0:
                        cells.append(Cochain(rest // 2, gens))
            self.basis[n] = sorted(cells, key=lambda c: (-c.a, c.gens))
        self._index = {n: {c: i for i, c in enumerate(cs)} for n, cs in self.basis.items()}

    def dim(self, n: int) -> int:
        return len(self.basis.get(n, []))

    def apply(self, c: Cochain) -> dict[Cochain, int]:
        out: dict[Cochain, int] = {}
        for pos, g in enumerate(c.gens):
            coeff = (-1) ** pos * self.coeff[g]
            if coeff:
                tgt = Cochain(c.a + _S_SHIFT[g], c.gens[:pos] + c.gens[pos + 1:])
                out[tgt] = out.get(tgt, 0) + coeff
        return out

    @cached_property
    def matrices(self) -> dict[int, list[list[int]]]:
        """``D`` from degree ``n`` to ``n + 1`` as a matrix acting on column vectors."""
        out = {}
        for n in range(self.max_degree + 1):
            mat = [[0] * self.dim(n) for _ in range(self.dim(n + 1))]
            for j, c in enumerate(self.basis[n]):
                for tgt, v in self.apply(c).items():
                    mat[self._index[n + 1][tgt]][j] += v
            out[n] = mat
        return out

    def D(self, n: int, v) -> list[int]:
        if n not in self.matrices:
            raise DomainError(f"degree {n} is beyond the truncation")
        return [sum(a * b for a, b in zip(row, v)) for row in self.matrices[n]]

    def filtration_coords(self, n: int, p: int) -> list[int]:
        return [i for i, c in enumerate(self.basis[n]) if c.p >= p]

    def F(self, n: int, p: int) -> Lattice:
        dim = self.dim(n)
        return Lattice(dim, [[int(i == j) for i in range(dim)] for j in self.filtration_coords(n, p)])


# -- pages ----------------------------------------------------------------------------

INFINITY = 10 ** 6


class FilteredSpectralSequence:
    """Lattice description of the pages of the filtered model.

    ``Z_r^p = {x in F^p : D x in F^(p+r)}`` and
    ``E_r^p = Z_r^p / (Z_(r-1)^(p+1) + D Z_(r-1)^(p-r+1))``.
    """

    def __init__(self, model: KoszulModel):
        self.model = model
        self._z: dict = {}
        self._den: dict = {}

    def Z(self, r: int, n: int, p: int) -> Lattice:
        key = (r, n, p)
        if key not in self._z:
            m = self.model
            dim = m.dim(n)
            src = m.filtration_coords(n, p)
            if n > m.max_degree:
                raise DomainError(f"degree {n} is beyond the truncation")
            low_rows = [i for i, c in enumerate(m.basis[n + 1]) if c.p < p + r]
            mat = m.matrices[n]
            if not src:
                lat = Lattice(dim)
            elif not low_rows:
                lat = m.F(n, p)
            else:
                sub = [[mat[i][j] for j in src] for i in low_rows]
                kernel = integer_kernel(sub) if any(any(row) for row in sub) else [
                    [int(a == b) for a in range(len(src))] for b in range(len(src))
                ]
                gens = []
                for vec in kernel:
                    full = [0] * dim
                    for j, x in zip(src, vec):
                        full[j] = x
                    gens.append(full)
                lat = Lattice(dim, gens)
            self._z[key] = lat
        return self._z[key]

    def image(self, n: int, lat: Lattice) -> Lattice:
        """``D`` of a lattice in degree ``n``, inside degree ``n + 1``."""
        return Lattice(self.model.dim(n + 1), [self.model.D(n, b) for b in lat.basis])

    def denominator(self, r: int, n: int, p: int) -> Lattice:
        key = (r, n, p)
        if key not in self._den:
            lat = self.Z(r - 1, n, p + 1)
            if n >= 1:
                lat = lat + self.image(n - 1, self.Z(r - 1, n - 1, p - r + 1))
            self._den[key] = lat
        return self._den[key]

    def cell(self, r: int, n: int, p: int) -> AbelianGroup:
        return self.Z(r, n, p).quotient(self.denominator(r, n, p))

    def differential_is_zero(self, r: int, n: int, p: int) -> bool:
        """Whether ``d_r`` vanishes on the cell of total degree ``n``, filtration ``p``."""
        return self.denominator(r, n + 1, p + r).contains(self.image(n, self.Z(r, n, p)))

    def differential_matrix(self, r: int, n: int, p: int) -> list[list[int]]:
        """``D`` on the ``Z_r`` basis, in ``Z_r`` coordinates of the target cell."""
        tgt = self.Z(r, n + 1, p + r)
        cols = []
        for b in self.Z(r, n, p).basis:
            c = tgt.coordinates(self.model.D(n, b))
            if c is None:
                raise MathAssertionError(f"d_{r} leaves the target cycles at degree {n}, p = {p}")
            cols.append(c)
        return _exact.transpose(cols) if cols else []

    def homology_oracle(self, r: int, n: int, p: int) -> AbelianGroup:
        """``ker d_r / im d_r`` at one cell, computed from preimages rather than ``Z_(r+1)``."""
        m = self.model
        z = self.Z(r, n, p)
        if n + 1 <= m.max_degree:
            den_t = self.denominator(r, n + 1, p + r)
            images = [m.D(n, b) for b in z.basis]
            if images and den_t.basis:
                cols = images + [[-x for x in t] for t in den_t.basis]
                ker = integer_kernel(_exact.transpose(cols))
                kept = [[sum(c[i] * z.basis[i][j] for i in range(z.rank)) for j in range(z.n)] for c in ker]
            elif images:
                ker = integer_kernel(_exact.transpose(images)) if any(any(v) for v in images) else [
                    [int(i == j) for i in range(z.rank)] for j in range(z.rank)
                ]
                kept = [[sum(c[i] * z.basis[i][j] for i in range(z.rank)) for j in range(z.n)] for c in ker]
            else:
                kept = []
            cycles = Lattice(z.n, kept)
        else:
            cycles = z
        bounds = self.denominator(r, n, p)
        if n >= 1:
            bounds = bounds + self.image(n - 1, self.Z(r, n - 1, p - r))
        return cycles.quotient(bounds)

    def infinity_cell(self, n: int, p: int) -> AbelianGroup:
        return self.cell(INFINITY, n, p)


@dataclass
class SpectralPage:
    r: int
    cells: dict  # (p, q) -> AbelianGroup
    nonzero_differentials: dict = field(default_factory=dict)  # (p, q) -> matrix

    def to_json(self) -> dict:
        return {
            "page": self.r,
            "cells": {f"{p},{q}": g.to_json() for (p, q), g in sorted(self.cells.items()) if not g.is_zero()},
            "nonzero_differentials": {
                f"{p},{q}": mat for (p, q), mat in sorted(self.nonzero_differentials.items())
            },
        }


@dataclass
class GradedAbelianGroup:
    groups: dict  # degree -> AbelianGroup

    def __getitem__(self, degree: int) -> AbelianGroup:
        return self.groups.get(degree, AbelianGroup())

    def betti(self, top: int = TOP_DIMENSION) -> tuple:
        return tuple(self[d].rank for d in range(top + 1))

    def torsion(self) -> dict:
        return {d: g.torsion for d, g in self.groups.items() if g.torsion}

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * g.rank for d, g in self.groups.items())

    def to_json(self) -> dict:
        return {str(d): g.to_json() for d, g in sorted(self.groups.items())}


@dataclass
class SpectralResult:
    weights: WeightChoice
    polys: RestrictionPolys
    L: int
    pages: list
    e_infinity: dict
    cohomology: GradedAbelianGroup
    direct: GradedAbelianGroup


def _pages(ss: FilteredSpectralSequence, max_degree: int, last_page: int) -> list[SpectralPage]:
    pages = []
    for r in range(2, last_page + 1):
        cells, diffs = {}, {}
        for n in range(max_degree + 1):
            for p in range(0, n + 1, 2):
                cells[(p, n - p)] = ss.cell(r, n, p)
                if n < max_degree and not ss.differential_is_zero(r, n, p):
                    diffs[(p, n - p)] = ss.differential_matrix(r, n, p)
        pages.append(SpectralPage(r, cells, diffs))
    return pages


def check_page_law(ss: FilteredSpectralSequence, pages: list[SpectralPage], max_degree: int) -> None:
    """``d_r d_r = 0`` and ``E_(r+1) = H(E_r, d_r)`` cell by cell; raises on failure."""
    model = ss.model
    for n in range(max_degree):
        a, b = model.matrices[n], model.matrices[n + 1]
        prod = [[sum(b[i][k] * a[k][j] for k in range(len(a))) for j in range(model.dim(n))]
                for i in range(model.dim(n + 2))]
        if any(any(row) for row in prod):
            raise MathAssertionError(f"D^2 != 0 in degree {n}")
    for page, nxt in zip(pages, pages[1:]):
        r = page.r
        for n in range(max_degree):
            for p in range(0, n + 1, 2):
                twice = ss.image(n + 1, ss.image(n, ss.Z(r, n, p)))
                if twice.rank:
                    raise MathAssertionError(f"d_{r} o d_{r} != 0 at degree {n}, p = {p}")
                if ss.homology_oracle(r, n, p) != nxt.cells[(p, n - p)]:
                    raise MathAssertionError(f"E_{r + 1} is not the homology of E_{r} at ({p}, {n - p})")


def ext_vanishes(quotient: AbelianGroup, sub: AbelianGroup) -> bool:
    """``Ext(quotient, sub) = 0``: every extension of ``quotient`` by ``sub`` splits.

    ``Ext(Z/a, B) = B / aB``, so this needs ``sub`` finite with order prime to
    each torsion coefficient of ``quotient``.
    """
    if not quotient.torsion:
        return True
    if sub.rank:
        return False
    return all(gcd(a, b) == 1 for a in quotient.torsion for b in sub.torsion)


def _assemble(e_inf: dict, max_degree: int) -> GradedAbelianGroup:
    """Total-degree groups from the E_infinity cells.

    Working up from the deepest filtration, each step is an extension of the
    next cell by what has been assembled so far.  It is only accepted when
    that extension is forced to split; anything else is an assertion failure.
    """
    out = {}
    for n in range(max_degree + 1):
        acc = AbelianGroup()
        for p in range(n - n % 2, -1, -2):
            cell = e_inf[(p, n - p)]
            if cell.is_zero():
                continue
            if not ext_vanishes(cell, acc):
                raise MathAssertionError(
                    f"degree {n}: extending {cell} at filtration {p} by {acc} is not determined"
                )
            acc = direct_sum([cell, acc])
        if not acc.is_zero():
            out[n] = acc
    return GradedAbelianGroup(out)


def direct_cohomology(model: KoszulModel, max_degree: int = MAX_DEGREE) -> GradedAbelianGroup:
    """Cohomology of the whole model by Smith normal form, no filtration involved."""
    out = {}
    for n in range(max_degree + 1):
        dim = model.dim(n)
        cycles = Lattice(dim, integer_kernel(model.matrices[n]) if any(any(r) for r in model.matrices[n])
                         else [[int(i == j) for i in range(dim)] for j in range(dim)])
        bounds = Lattice(dim)
        if n >= 1:
            bounds = Lattice(dim, [model.D(n - 1, e) for e in
                                   ([int(i == j) for i in range(model.dim(n - 1))] for j in range(model.dim(n - 1)))])
        g = cycles.quotient(bounds)
        if not g.is_zero():
            out[n] = g
    return GradedAbelianGroup(out)


def spectral_sequence(k: int, l: int, max_degree: int = MAX_DEGREE, last_page: int = 9) -> SpectralResult:
    w = WeightChoice(k, l)
    polys = restriction_polys(k, l)
    L, eligible = gcd_conditions(polys)
    if not eligible:
        raise DomainError(f"gcd(M4, N6, K8) = {gcd(*polys.magnitudes)} != 1 for (k, l) = {(k, l)}")
    model = KoszulModel(polys, max_degree)
    ss = FilteredSpectralSequence(model)
    pages = _pages(ss, max_degree, last_page)
    check_page_law(ss, pages, max_degree)
    for page in pages:
        if page.r in (2, 3, 5, 7) and page.nonzero_differentials:
            raise MathAssertionError(f"page {page.r} has a nonzero differential at {sorted(page.nonzero_differentials)}")
    e_inf = {(p, n - p): ss.infinity_cell(n, p) for n in range(max_degree + 1) for p in range(0, n + 1, 2)}
    if pages[-1].cells != e_inf:
        raise MathAssertionError(f"E_{last_page} is not yet E_infinity")
    coh = _assemble(e_inf, max_degree)
    direct = direct_cohomology(model, max_degree)
    if coh.groups != direct.groups:
        raise MathAssertionError(f"assembled cohomology {coh.to_json()} differs from the direct computation")
    return SpectralResult(w, polys, L, pages, e_inf, coh, direct)


def spectral_cohomology(k: int, l: int) -> GradedAbelianGroup:
    return spectral_sequence(k, l).cohomology


# -- ring presentation ----------------------------------------------------------------

@dataclass
class RingPresentation:
    order: int  # |M4 / L|
    generators: list
    relations: list
    implied: GradedAbelianGroup
    computed: GradedAbelianGroup

    @property
    def consistent(self) -> bool:
        return all(self.implied[d] == self.computed[d] for d in range(MAX_DEGREE + 1))

    def mismatches(self) -> dict:
        return {
            d: {"implied": str(self.implied[d]), "computed": str(self.computed[d])}
            for d in range(MAX_DEGREE + 1)
            if self.implied[d] != self.computed[d]
        }

    def to_json(self) -> dict:
        return {
            "generators": [{"name": n, "degree": d} for n, d in self.generators],
            "relations": self.relations,
            "order": self.order,
            "consistent": self.consistent,
            "mismatches": {str(d): v for d, v in self.mismatches().items()},
        }


def presentation_groups(order: int) -> GradedAbelianGroup:
    """Additive groups of ``Z[w] / (order w^2, w^3, w^2 v5, w^2 v7)`` tensor ``L(v5, v7)``."""
    out: dict = {}
    for i in range(3):
        for ext in ((), (5,), (7,), (5, 7)):
            if i == 2 and ext:
                continue
            deg = 2 * i + sum(ext)
            g = AbelianGroup(0, (order,)) if i == 2 and order > 1 else (
                AbelianGroup() if i == 2 else AbelianGroup(1))
            out[deg] = direct_sum([out.get(deg, AbelianGroup()), g])
    return GradedAbelianGroup({d: g for d, g in out.items() if not g.is_zero()})


def ring_relations(k: int, l: int) -> RingPresentation:
    res = spectral_sequence(k, l)
    order = abs(res.polys.M4) // res.L
    rel = [f"{order}w^2" if order != 1 else "w^2", "w^3", "w^2v5", "w^2v7"]
    return RingPresentation(
        order,
        [("w", 2), ("v5", 5), ("v7", 7)],
        rel,
        presentation_groups(order),
        res.cohomology,
    )


# -- family scan ----------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    k: int
    l: int
    L: int
    order: int  # |M4 / L|
    eligible: bool
    S: int  # gcd(M4, K8)
    h4: AbelianGroup | None = None

    def to_json(self) -> dict:
        return {
            "k": self.k, "l": self.l, "L": self.L, "M4/L": self.order, "eligible": self.eligible,
            "S": self.S, "H4": None if self.h4 is None else self.h4.to_json(),
        }


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def family_scan(k_max: int, with_cohomology: bool = False) -> list[ScanRow]:
    """Rows ``k = 1..k_max`` with ``l = 1``.

    Asserted row by row: a prime ``5k + 16`` that does not divide ``M4`` comes
    with ``gcd(M4, N6, K8) = 1``.  Across the scan ``|M4/L|`` must take more
    than one value.
    """
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    rows = []
    for k in range(1, k_max + 1):
        polys = restriction_polys(k, 1)
        L, eligible = gcd_conditions(polys)
        m4, _, k8 = polys.magnitudes
        q = 5 * k + 16
        if _is_prime(q) and m4 % q and not eligible:
            raise MathAssertionError(f"k = {k}: 5k + 16 = {q} is prime, does not divide M4, yet gcd != 1")
        h4 = spectral_cohomology(k, 1)[4] if with_cohomology and eligible else None
        rows.append(ScanRow(k, 1, L, m4 // L, eligible, gcd(m4, k8), h4))
    orders = {r.order for r in rows if r.eligible}
    if sum(r.eligible for r in rows) >= 2 and len(orders) < 2:
        raise MathAssertionError("|M4/L| is constant along the scan")
    return rows
