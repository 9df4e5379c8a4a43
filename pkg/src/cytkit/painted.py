"""Painted Dynkin diagrams, Koszul forms and the c1 = 0 criterion.

A painting blackens a set of simple roots.  The white nodes span the
semisimple part of the isotropy algebra; the Koszul form is the sum of
positive roots of G minus that of the white subalgebra.  A torus
``a`` added to the white semisimple part gives a C-space with vanishing
first Chern class exactly when the Koszul form vanishes on ``a``.

Text formats::

    A10:1,2,6,9              diagram: series, rank, black nodes (one-based)
    blocks=1,1,su4,su3,su2   diagonal block pattern, scalar blocks as 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import rootsys
from .errors import DomainError, PreconditionError
from .intlat import IntMatrix, integer_kernel
from .rootsys import Series, Weight

_DIAGRAM_RE = re.compile(r"^\s*([ABCDabcd])(\d+)\s*:\s*([\d,\s]*)$")


@dataclass(frozen=True)
class PaintedDiagram:
    series: Series
    rank: int
    black: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "series", Series.parse(self.series))
        rootsys.ambient_dim(self.series, self.rank)  # rank bounds
        black = frozenset(int(i) for i in self.black)
        bad = sorted(i for i in black if not 1 <= i <= self.rank)
        if bad:
            raise DomainError(f"black nodes {bad} outside 1..{self.rank}")
        object.__setattr__(self, "black", black)

    @classmethod
    def parse(cls, text: str) -> "PaintedDiagram":
        m = _DIAGRAM_RE.match(text)
        if not m:
            raise DomainError(f"cannot parse diagram {text!r}; expected e.g. 'A10:1,2,6,9'")
        series, rank, nodes = m.groups()
        black = [int(t) for t in nodes.replace(" ", "").split(",") if t]
        return cls(Series.parse(series), int(rank), frozenset(black))

    def __str__(self):
        return f"{self.series.value}{self.rank}:{','.join(map(str, sorted(self.black)))}"

    @property
    def white(self) -> list[int]:
        return [i for i in range(1, self.rank + 1) if i not in self.black]


@dataclass(frozen=True)
class WhiteComponent:
    series: Series
    rank: int
    nodes: tuple  # ambient node indices, position i maps to sub-diagram node i + 1


def white_components(d: PaintedDiagram) -> list[WhiteComponent]:
    """Connected components of the white subgraph, classified.

    For B/C the component holding node ``rank`` keeps the ambient series
    (a lone end node is B1 or C1, both isomorphic to A1).  For D the
    component holding nodes ``rank - 2, rank - 1, rank`` is of type D.
    Everything else is a chain of type A.
    """
    white = set(d.white)
    adj = {i: set() for i in white}
    for i, j in rootsys.dynkin_edges(d.series, d.rank):
        if i in white and j in white:
            adj[i].add(j)
            adj[j].add(i)
    comps, seen = [], set()
    for start in sorted(white):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v not in comp:
                comp.add(v)
                stack.extend(adj[v] - comp)
        seen |= comp
        comps.append(tuple(sorted(comp)))

    n = d.rank
    out = []
    for nodes in comps:
        kind = Series.A
        if d.series in (Series.B, Series.C) and n in nodes:
            kind = d.series
        elif d.series is Series.D and {n - 2, n - 1, n} <= set(nodes):
            kind = Series.D
        out.append(WhiteComponent(kind, len(nodes), nodes))
    return out


def _component_simple_roots(c: WhiteComponent) -> list[Weight]:
    if c.rank == 1 and c.series in (Series.B, Series.C):
        return [Weight([1 if c.series is Series.B else 2])]
    return rootsys.simple_roots(c.series, c.rank)


def _component_sum_coefficients(c: WhiteComponent) -> list[Fraction]:
    if c.rank == 1:
        return [Fraction(1)]
    s = rootsys.sum_positive_roots(c.series, c.rank)
    return rootsys.simple_root_coefficients(s, c.series, c.rank)


def _check_component_embedding(d: PaintedDiagram, c: WhiteComponent) -> None:
    ambient = rootsys.simple_roots(d.series, d.rank)
    sub = _component_simple_roots(c)
    for a, i in enumerate(c.nodes):
        for b, j in enumerate(c.nodes):
            big = rootsys.coroot_pairing(ambient[i - 1], ambient[j - 1])
            small = rootsys.coroot_pairing(sub[a], sub[b])
            if big != small:
                raise AssertionError(f"white component {c} does not embed as {c.series.value}{c.rank}")


def koszul_coefficients(d: PaintedDiagram) -> list[Fraction]:
    """Koszul form in simple-root coordinates (the difference diagram)."""
    full = rootsys.simple_root_coefficients(rootsys.sum_positive_roots(d.series, d.rank), d.series, d.rank)
    coeffs = list(full)
    for c in white_components(d):
        _check_component_embedding(d, c)
        for node, v in zip(c.nodes, _component_sum_coefficients(c)):
            coeffs[node - 1] -= v
    return coeffs


def koszul_form(d: PaintedDiagram) -> Weight:
    """sigma_G - sigma_H in e-coordinates (the complexification factor 2i is dropped)."""
    return rootsys.from_simple_root_coefficients(koszul_coefficients(d), d.series, d.rank)


def white_reach(d: PaintedDiagram) -> dict[int, int]:
    """For each black node, the number of white nodes reachable through white paths."""
    comps = white_components(d)
    edges = rootsys.dynkin_edges(d.series, d.rank)
    out = {}
    for i in sorted(d.black):
        nbrs = {b for a, b in edges if a == i} | {a for a, b in edges if b == i}
        out[i] = sum(c.rank for c in comps if nbrs & set(c.nodes))
    return out


def koszul_form_a_chain(d: PaintedDiagram) -> Weight:
    """Type A shortcut: sigma = sum over black i of (2 + b_i) * fundamental weight i."""
    if d.series is not Series.A:
        raise DomainError(f"chain formula applies to series A only, got {d.series.value}")
    dim = rootsys.ambient_dim(d.series, d.rank)
    sigma = Weight.zero(dim)
    for i, b in white_reach(d).items():
        sigma = sigma + (2 + b) * rootsys.fundamental_weight(d.series, d.rank, i)
    return sigma


def chain_multipliers(d: PaintedDiagram) -> dict[int, int]:
    return {i: 2 + b for i, b in white_reach(d).items()}


def fundamental_weight_coordinates(w: Weight, d: PaintedDiagram) -> list[Fraction]:
    """Coordinates of ``w`` on the fundamental weights: ``2 (w, a_j) / (a_j, a_j)``."""
    return [rootsys.coroot_pairing(w, a) for a in rootsys.simple_roots(d.series, d.rank)]


# -- block structures -------------------------------------------------------------

_BLOCK_KINDS = ("scalar", "su", "so", "sp")
_BLOCK_RE = re.compile(r"^(su|so|sp)(\d+)$")


@dataclass(frozen=True)
class Block:
    kind: str
    label: int  # the group index: su4 -> 4, so6 -> 6, sp2 -> 2, scalar -> 1

    def __post_init__(self):
        if self.kind not in _BLOCK_KINDS:
            raise DomainError(f"unknown block kind {self.kind!r}")

    @property
    def size(self) -> int:
        """Number of diagonal e-slots the block occupies."""
        if self.kind == "scalar":
            return 1
        if self.kind == "so":
            return self.label // 2
        return self.label

    @property
    def has_variable(self) -> bool:
        """Whether the centre of the block contributes a torus direction."""
        return self.kind in ("scalar", "su")

    def __str__(self):
        return "1" if self.kind == "scalar" else f"{self.kind}{self.label}"


@dataclass(frozen=True)
class BlockStructure:
    blocks: tuple

    @classmethod
    def parse(cls, text: str) -> "BlockStructure":
        body = text.strip()
        if body.startswith("blocks="):
            body = body[len("blocks="):]
        blocks = []
        for tok in (t.strip().lower() for t in body.split(",")):
            if tok == "1":
                blocks.append(Block("scalar", 1))
                continue
            m = _BLOCK_RE.match(tok)
            if not m:
                raise DomainError(f"cannot parse block {tok!r}; expected 1, suN, soN or spN")
            blocks.append(Block(m.group(1), int(m.group(2))))
        if not blocks:
            raise DomainError("empty block structure")
        return cls(tuple(blocks))

    def __str__(self):
        return "blocks=" + ",".join(str(b) for b in self.blocks)

    @property
    def total_size(self) -> int:
        return sum(b.size for b in self.blocks)

    @property
    def variable_blocks(self) -> list[Block]:
        return [b for b in self.blocks if b.has_variable]

    def slots(self) -> list[range]:
        out, start = [], 0
        for b in self.blocks:
            out.append(range(start, start + b.size))
            start += b.size
        return out


def block_structure(d: PaintedDiagram) -> BlockStructure:
    """The diagonal block pattern of the centraliser determined by the painting."""
    n = rootsys.ambient_dim(d.series, d.rank)
    cover: dict[int, Block] = {}
    for c in white_components(d):
        lo = c.nodes[0]
        if c.series is Series.A:
            if d.series is Series.D and d.rank in c.nodes:
                raise DomainError(
                    f"{d}: white node {d.rank} without node {d.rank - 1} couples e_{d.rank - 1} "
                    "and -e_{d.rank}; not expressible as a diagonal block pattern"
                )
            cover[lo] = Block("su", c.rank + 1)
        elif c.series is Series.C:
            cover[lo] = Block("sp", c.rank)
        elif c.series is Series.B:
            cover[lo] = Block("so", 2 * c.rank + 1)
        else:
            cover[lo] = Block("so", 2 * c.rank)
    blocks, i = [], 1
    while i <= n:
        b = cover.get(i, Block("scalar", 1))
        blocks.append(b)
        i += b.size
    return BlockStructure(tuple(blocks))


def _check_blocks(d: PaintedDiagram, blocks: BlockStructure) -> None:
    expected = block_structure(d)
    if blocks != expected:
        raise DomainError(f"{blocks} is inconsistent with the white components of {d}; expected {expected}")


def c1_condition_matrix(d: PaintedDiagram, blocks: BlockStructure) -> IntMatrix:
    """Linear conditions on the torus variables (one per scalar/su block).

    Row order: trace row (ambient SU only), then the Koszul row, whose
    entry for block ``j`` is the sum of the Koszul form's e-coordinates over
    the slots of that block.
    """
    _check_blocks(d, blocks)
    sigma = koszul_form(d)
    rows = []
    if d.series is Series.A:
        rows.append([b.size for b in blocks.variable_blocks])
    koszul_row = []
    for b, slots in zip(blocks.blocks, blocks.slots()):
        if b.has_variable:
            v = sum((sigma[s] for s in slots), Fraction(0))
            assert v.denominator == 1
            koszul_row.append(int(v))
    rows.append(koszul_row)
    return IntMatrix(rows, cols=len(blocks.variable_blocks))


def c1_vanishes(d: PaintedDiagram, blocks: BlockStructure, a_basis: Sequence[Sequence[int]]) -> bool:
    """Whether sigma restricted to the torus spanned by ``a_basis`` vanishes."""
    m = c1_condition_matrix(d, blocks)
    nvars = m.cols
    trace_row = m.row(0) if d.series is Series.A else None
    koszul_row = m.row(m.rows - 1)
    ok = True
    for v in a_basis:
        v = [int(x) for x in v]
        if len(v) != nvars:
            raise PreconditionError(f"torus vector {v} has length {len(v)}, expected {nvars}")
        if trace_row is not None and sum(a * b for a, b in zip(trace_row, v)):
            raise PreconditionError(f"torus vector {v} violates the trace condition")
        if sum(a * b for a, b in zip(koszul_row, v)):
            ok = False
    return ok


@dataclass(frozen=True)
class EmbeddingLattice:
    basis: tuple        # the reported torus directions (first torus_dim kernel vectors)
    blocks: BlockStructure
    kernel: tuple       # full Z-basis of the solution lattice

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel)


def enumerate_embeddings(d: PaintedDiagram, blocks: BlockStructure, torus_dim: int) -> EmbeddingLattice:
    """Integer torus directions with vanishing first Chern class."""
    m = c1_condition_matrix(d, blocks)
    kernel = integer_kernel(m)
    if torus_dim < 0 or torus_dim > len(kernel):
        raise DomainError(f"torus_dim {torus_dim} exceeds the kernel rank {len(kernel)}")
    kernel = tuple(tuple(v) for v in kernel)
    return EmbeddingLattice(kernel[:torus_dim], blocks, kernel)


def diagonal_embedding(blocks: BlockStructure, vec: Sequence[int]) -> list[int]:
    """Expand one value per variable block to the full diagonal (zeros on so/sp blocks)."""
    vals = iter(vec)
    out = []
    for b in blocks.blocks:
        x = next(vals) if b.has_variable else 0
        out.extend([x] * b.size)
    return out


def su_n_u1_check(theta: Sequence[int]) -> bool:
    """c1 = 0 test for SU(n)/U(1) with U(1) acting by weights ``theta`` (n even)."""
    theta = [int(t) for t in theta]
    n = len(theta)
    if n % 2:
        raise PreconditionError(f"n = {n} must be even")
    if sum(theta):
        raise PreconditionError(f"weights {theta} do not sum to zero")
    lhs = sum((n - 2 * k + 1) * t for k, t in enumerate(theta, start=1))
    rhs = 2 * sum((n - k) * t for k, t in enumerate(theta[:-1], start=1))
    assert lhs == rhs
    return lhs == 0


def su_n_u1_identity_coefficients(n: int) -> tuple[list[int], list[int]]:
    """Both sides of the SU(n)/U(1) identity as coefficient vectors in theta_1..theta_{n-1}.

    The left side is sum (n - 2k + 1) theta_k with theta_n eliminated.
    """
    lhs = [(n - 2 * k + 1) - (n - 2 * n + 1) for k in range(1, n)]
    rhs = [2 * (n - k) for k in range(1, n)]
    return lhs, rhs


# -- dimensions -------------------------------------------------------------------

def simple_dimension(series, rank: int) -> int:
    series = Series.parse(series)
    if series is Series.A:
        return rank * (rank + 2)
    if series in (Series.B, Series.C):
        return rank * (2 * rank + 1)
    return rank * (2 * rank - 1)


def quotient_dimension(d: PaintedDiagram, torus_dim: int) -> int:
    """Real dimension of G/H with H = (white semisimple part) x T^torus_dim."""
    h = sum(simple_dimension(c.series, c.rank) for c in white_components(d))
    return simple_dimension(d.series, d.rank) - h - torus_dim
