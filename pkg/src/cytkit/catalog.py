"""Worked examples, each stored as a construction plus the tags it should earn.

Nothing here is a stored answer: ``derive_tags`` rebuilds every example from
its construction and recomputes the tags, and ``check`` compares them with
the declared ones.

Tag vocabulary:

* ``c1-zero`` / ``c1-nonzero``  first Chern class; Koszul form on the torus part for
                                quotients, unimodularity for invariant structures on groups
* ``even-dimensional``          the quotient ``G/H`` has even real dimension
* ``parallelizable``            a complex Lie algebra viewed as a real one with its J
* ``integrable``                Nijenhuis tensor vanishes
* ``unimodular``                ``tr ad`` vanishes, so a cocompact lattice is possible
* ``cyt``                       the invariant test ``d(delta F + kappa/2) = 0`` passes
* ``cyt-open-set``              CYT for some complex structures of the family, not all
* ``balanced``                  ``delta F = 0``
* ``anomaly-solvable``          the anomaly equation has a solution with ``alpha' > 0``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import painted
from .errors import DomainError
from .exforms import cyt, strominger
from .exforms.forms import InvariantMetric
from .exforms.presentations import (
    direct_sum_presentation,
    load_presentation,
    parallelizable_presentation,
    standard_torus,
    su2su2_complex_structure,
    su2su2_presentation,
    u2_complex_structure,
    u2_presentation,
)
from .intlat import integer_kernel


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "homogeneous", "parallelizable", "classification" or "presentation"
    title: str
    construction: dict
    tags: frozenset
    status: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "title": self.title,
            "construction": self.construction,
            "tags": sorted(self.tags),
            "status": self.status,
        }


def _entry(name, kind, title, construction, tags, status=""):
    return CatalogEntry(name, kind, title, construction, frozenset(tags), status)


_HOMOGENEOUS_TAGS = ("c1-zero", "even-dimensional")

ENTRIES: tuple[CatalogEntry, ...] = (
    # families of compact quotients with vanishing first Chern class
    _entry("su7-semisimple", "homogeneous", "SU(7)/SU(2)xSU(2)xSU(3)",
           {"family": "SU(n)/SU(n_1)x...xSU(n_k), k odd, sum n_i = n",
            "diagram": "A6:2,4", "blocks": "su2,su2,su3", "torus": []}, _HOMOGENEOUS_TAGS),
    _entry("su6-semisimple", "homogeneous", "SU(6)/SU(2)xSU(3)",
           {"family": "SU(n)/SU(n_1)x...xSU(n_k), sum n_i <= n, n - sum n_i + k odd",
            "diagram": "A5:1,3", "blocks": "1,su2,su3", "torus": []}, _HOMOGENEOUS_TAGS),
    _entry("so14-semisimple", "homogeneous", "SO(14)/SU(2)xSU(2)xSO(6)",
           {"family": "SO(2n)/SU(n_1)x...xSU(n_2k)xSO(2l)",
            "diagram": "D7:2,4", "blocks": "su2,su2,so6", "torus": []}, _HOMOGENEOUS_TAGS),
    _entry("so12-su2-cubed", "homogeneous", "SO(12)/SU(2)xSU(2)xSU(2)xU(1)",
           {"family": "SO(2n)/SU(n_1)x...xSU(n_2k+1)",
            "diagram": "D6:2,4,6", "blocks": "su2,su2,su2", "torus": "kernel:1"}, _HOMOGENEOUS_TAGS),
    _entry("so11-semisimple", "homogeneous", "SO(11)/SU(2)xSU(2)xSO(3)",
           {"family": "SO(2n+1)/SU(n_1)x...xSU(n_2k)xSO(2l+1)",
            "diagram": "B5:2,4", "blocks": "su2,su2,so3", "torus": []}, _HOMOGENEOUS_TAGS),
    _entry("sp6-semisimple", "homogeneous", "Sp(6)/SU(2)xSU(2)xSp(2)",
           {"family": "Sp(n)/SU(n_1)x...xSU(n_2k)xSp(l)",
            "diagram": "C6:2,4", "blocks": "su2,su2,sp2", "torus": []}, _HOMOGENEOUS_TAGS),
    _entry("su4-u1", "homogeneous", "SU(4)/U(1), weights (1,0,-3,2)",
           {"family": "SU(n)/U(1), n even",
            "diagram": "A3:1,2,3", "blocks": "1,1,1,1", "torus": [[1, 0, -3, 2]]}, _HOMOGENEOUS_TAGS),
    _entry("su11-t2", "homogeneous", "SU(11)/SU(4)xSU(3)xSU(2)xT^2",
           {"family": "worked A-series example",
            "diagram": "A10:1,2,6,9", "blocks": "1,1,su4,su3,su2", "torus": "kernel:2"}, _HOMOGENEOUS_TAGS),
    _entry("sp7-t2", "homogeneous", "Sp(7)/SU(2)xSp(2)xT^2",
           {"family": "worked C-series example",
            "diagram": "C7:1,3,4,5", "blocks": "1,su2,1,1,sp2", "torus": "kernel:2"}, _HOMOGENEOUS_TAGS),
    # three-dimensional complex Lie algebras
    _entry("alg-c3", "parallelizable", "C^3", {"algebra": "c3"},
           ("parallelizable", "integrable", "unimodular", "cyt")),
    _entry("alg-heisenberg", "parallelizable", "complex Heisenberg algebra", {"algebra": "heisenberg"},
           ("parallelizable", "integrable", "unimodular", "cyt")),
    _entry("alg-s2c-c", "parallelizable", "s_2(C) + C", {"algebra": "s2c_c"},
           ("parallelizable", "integrable")),
    _entry("alg-s3", "parallelizable", "s_3(C)", {"algebra": "s3"},
           ("parallelizable", "integrable")),
    _entry("alg-s3-lambda-minus1", "parallelizable", "s_3,-1(C)", {"algebra": "s3_lambda", "lambda": "-1"},
           ("parallelizable", "integrable", "unimodular", "cyt")),
    _entry("alg-s3-lambda-2", "parallelizable", "s_3,2(C)", {"algebra": "s3_lambda", "lambda": "2"},
           ("parallelizable", "integrable")),
    _entry("alg-sl2c", "parallelizable", "sl(2,C)", {"algebra": "sl2c"},
           ("parallelizable", "integrable", "unimodular", "cyt")),
    # compact complex homogeneous threefolds with vanishing first Chern class
    _entry("case-i", "classification", "compact complex parallelizable threefold",
           {"witness": "heisenberg"}, ("c1-zero", "cyt"), "CYT"),
    _entry("case-ii", "classification", "torus bundle over CP^2, CP^1 x CP^1 or CP^1",
           {"witness": "su2xsu2", "admissible": ["0", "1"], "rejected": ["3", "1"]},
           ("c1-zero", "cyt-open-set"), "CYT except some complex structures on SU(2)xSU(2)"),
    _entry("case-iii", "classification", "generalized flag manifold",
           {"witness": "A2:1,2"}, ("c1-nonzero",), "excluded: c1 != 0"),
    _entry("case-iv", "classification", "reducible: T^2 x homogeneous surface",
           {"witness": "torus2+u2"}, ("c1-zero", "cyt"), "CYT"),
    _entry("case-v", "classification", "complex torus (surface factor)",
           {"witness": "torus2"}, ("c1-zero", "cyt"), "CYT"),
    _entry("case-vi", "classification", "Hopf surface S^1 x S^3",
           {"witness": "u2"}, ("c1-zero", "cyt"), "CYT"),
    # presentations with a full Hermitian structure
    _entry("calabi-eckmann", "presentation", "S^3 x S^3 with J(0,1)",
           {"presentation": "su2xsu2", "a": "0", "b": "1"}, ("integrable", "unimodular", "cyt")),
    _entry("su3-bi-invariant", "presentation", "SU(3) with the bi-invariant metric",
           {"presentation": "su3"}, ("integrable", "unimodular", "cyt")),
    _entry("nil6-heterotic", "presentation", "nilmanifold with the anomaly data, a = 1, b = 0",
           {"presentation": "nil6", "a": "1", "b": "0"},
           ("integrable", "unimodular", "cyt", "balanced", "anomaly-solvable")),
)


def get(name: str) -> CatalogEntry:
    for e in ENTRIES:
        if e.name == name:
            return e
    raise DomainError(f"unknown catalog entry {name!r}; try one of {[e.name for e in ENTRIES]}")


# -- recomputation --------------------------------------------------------------------

def torus_basis(construction: dict) -> list[list[int]]:
    d = painted.PaintedDiagram.parse(construction["diagram"])
    blocks = painted.BlockStructure.parse(construction["blocks"])
    torus = construction["torus"]
    if isinstance(torus, str):
        if not torus.startswith("kernel:"):
            raise DomainError(f"torus data {torus!r} must be a list of vectors or 'kernel:N'")
        return [list(v) for v in painted.enumerate_embeddings(d, blocks, int(torus.split(":")[1])).basis]
    return [list(v) for v in torus]


def _homogeneous_tags(c: dict) -> set:
    d = painted.PaintedDiagram.parse(c["diagram"])
    blocks = painted.BlockStructure.parse(c["blocks"])
    basis = torus_basis(c)
    tags = {"c1-zero" if painted.c1_vanishes(d, blocks, basis) else "c1-nonzero"}
    if painted.quotient_dimension(d, len(basis)) % 2 == 0:
        tags.add("even-dimensional")
    if d.series is painted.Series.A and d.black == frozenset(range(1, d.rank + 1)) and len(basis) == 1:
        # the rank-one torus in SU(n): the closed-form test must agree
        if painted.su_n_u1_check(basis[0]) != ("c1-zero" in tags):
            tags.add("inconsistent-su-n-u1")
    return tags


def _identity_metric(p) -> InvariantMetric:
    return InvariantMetric(p.space, [[int(i == j) for j in range(p.dim)] for i in range(p.dim)])


def _algebra_tags(p, J, g=None) -> set:
    tags = set()
    if p.nijenhuis_vanishes(J):
        tags.add("integrable")
    if p.is_unimodular():
        tags.add("unimodular")
        if "integrable" in tags:
            g = g or _identity_metric(p)
            if cyt.is_cyt(p, g, J):
                tags.add("cyt")
    return tags


def _parallelizable_tags(c: dict) -> set:
    lam = Fraction(c["lambda"]) if "lambda" in c else None
    p, J = parallelizable_presentation(c["algebra"], lam)
    tags = {"parallelizable"} | _algebra_tags(p, J)
    g = _identity_metric(p)
    # the trace-form test: zero exactly on unimodular algebras, and then delta F = 0
    tau = cyt.parallelizable_balanced_check(p, J, g)
    if tau.is_zero() != ("unimodular" in tags):
        tags.add("inconsistent-trace")
    return tags


def _flag_c1_tags(diagram: str) -> set:
    d = painted.PaintedDiagram.parse(diagram)
    blocks = painted.block_structure(d)
    m = painted.c1_condition_matrix(d, blocks)
    centre = integer_kernel([list(m.row(0))]) if d.series is painted.Series.A else [
        [int(i == j) for i in range(m.cols)] for j in range(m.cols)
    ]
    return {"c1-zero" if painted.c1_vanishes(d, blocks, centre) else "c1-nonzero"}


def _witness(name: str):
    if name == "u2":
        p = u2_presentation()
        return p, u2_complex_structure(p)
    if name == "torus2":
        return standard_torus(2)
    if name == "torus2+u2":
        p = u2_presentation()
        return direct_sum_presentation(standard_torus(1), (p, u2_complex_structure(p)))
    if name in ("heisenberg", "sl2c", "c3"):
        return parallelizable_presentation(name)
    raise DomainError(f"unknown witness {name!r}")


def _classification_tags(c: dict) -> set:
    w = c["witness"]
    if ":" in w:
        return _flag_c1_tags(w)
    if w == "su2xsu2":
        p = su2su2_presentation()
        good = [Fraction(x) for x in c["admissible"]]
        bad = [Fraction(x) for x in c["rejected"]]
        J = su2su2_complex_structure(p, *good)
    else:
        p, J = _witness(w)
    tags = set()
    # on a unimodular group the Chern Ricci form is d of the invariant 1-form
    # kappa, which descends to any compact quotient, so c1 vanishes
    if p.is_unimodular() and p.nijenhuis_vanishes(J):
        tags.add("c1-zero")
    if w == "su2xsu2":
        ok = cyt.su2su2_cyt_region(*good) and cyt.is_cyt(p, cyt.su2su2_cyt_metric(*good), J)
        if ok and not cyt.su2su2_cyt_region(*bad):
            tags.add("cyt-open-set")
        elif ok:
            tags.add("cyt")
    elif "cyt" in _algebra_tags(p, J):
        tags.add("cyt")
    return tags


def _presentation_tags(c: dict) -> set:
    data = load_presentation(c["presentation"])
    p = data.presentation
    J, g = data.J, data.metric
    if c["presentation"] == "su2xsu2":
        J = su2su2_complex_structure(p, Fraction(c["a"]), Fraction(c["b"]))
        g = cyt.su2su2_cyt_metric(Fraction(c["a"]), Fraction(c["b"]))
    tags = _algebra_tags(p, J, g)
    if "connection" in data.extra:
        rep = strominger.strominger_report(data, Fraction(c["a"]), Fraction(c["b"]))
        if rep.balanced:
            tags.add("balanced")
        if rep.anomaly.solvable and all(rep.checks.values()):
            tags.add("anomaly-solvable")
    return tags


_DERIVERS: dict[str, Callable[[dict], set]] = {
    "homogeneous": _homogeneous_tags,
    "parallelizable": _parallelizable_tags,
    "classification": _classification_tags,
    "presentation": _presentation_tags,
}


def derive_tags(entry: CatalogEntry) -> frozenset:
    return frozenset(_DERIVERS[entry.kind](entry.construction))


@dataclass
class CheckResult:
    entry: CatalogEntry
    derived: frozenset
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.derived == self.entry.tags

    def to_json(self) -> dict:
        return {
            "name": self.entry.name,
            "ok": self.ok,
            "declared": sorted(self.entry.tags),
            "derived": sorted(self.derived),
            **self.details,
        }


def check(name: str) -> CheckResult:
    entry = get(name)
    details = {}
    if entry.kind == "homogeneous":
        d = painted.PaintedDiagram.parse(entry.construction["diagram"])
        basis = torus_basis(entry.construction)
        details = {
            "koszul": [str(x) for x in painted.koszul_form(d)],
            "torus": basis,
            "dimension": painted.quotient_dimension(d, len(basis)),
        }
    return CheckResult(entry, derive_tags(entry), details)


def check_all() -> list[CheckResult]:
    return [check(e.name) for e in ENTRIES]
