"""Lie algebras presented by the differentials of a basis of invariant 1-forms.

The structure constants and the Maurer-Cartan data are tied by
``d xi^k (e_i, e_j) = -xi^k([e_i, e_j])``, i.e. for ``i < j`` the coefficient of
``xi^i ^ xi^j`` in ``d xi^k`` is ``-c^k_ij``.

File format (JSON)::

    {"name": "...", "basis": ["e1", ...],
     "d": {"e3": [[coeff, "e1", "e2"], ...]},     # indices may be names or 0-based ints
     "J": [[...]], "metric": [[...]]}             # optional, rational entries as "p/q"
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from ..errors import DomainError
from .forms import ComplexStructureOp, FormSpace, InvariantMetric, KForm, wedge


class LiePresentation:
    def __init__(self, space: FormSpace, differentials: Sequence[KForm]):
        if len(differentials) != space.dim:
            raise DomainError(f"expected {space.dim} differentials, got {len(differentials)}")
        for name, f in zip(space.names, differentials):
            if f.space != space or f.degree != 2:
                raise DomainError(f"d{name} must be a 2-form on the same basis")
        self.space = space
        self.differentials = tuple(differentials)
        for name, f in zip(space.names, self.differentials):
            if not self.d(f).is_zero():
                raise DomainError(f"d(d{name}) = {self.d(f)} != 0; the structure constants violate Jacobi")

    @property
    def names(self):
        return self.space.names

    @property
    def dim(self):
        return self.space.dim

    @property
    def label(self):
        return self.space.label

    def basis(self, name) -> KForm:
        return self.space.basis(name)

    def d(self, u: KForm) -> KForm:
        return ext_d(self, u)

    def bracket_constants(self) -> dict:
        """``{(i, j): [c^0_ij, ..., c^{n-1}_ij]}`` for ``i < j``, nonzero pairs only."""
        out = {}
        for k, f in enumerate(self.differentials):
            for (i, j), c in f.terms.items():
                out.setdefault((i, j), [Fraction(0)] * self.dim)[k] = -c
        return out

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        """Bracket of two vectors given by coordinates in the dual basis."""
        out = [Fraction(0)] * self.dim
        for (i, j), c in self.bracket_constants().items():
            s = u[i] * v[j] - u[j] * v[i]
            if s:
                for k in range(self.dim):
                    out[k] += s * c[k]
        return out

    def trace_form(self) -> KForm:
        """The 1-form ``X -> tr(ad_X)``."""
        coeffs = {}
        for (i, j), c in self.bracket_constants().items():
            # ad_{e_i} e_j has e_j-component c^j_ij; ad_{e_j} e_i = -[e_i, e_j]
            coeffs[i] = coeffs.get(i, 0) + c[j]
            coeffs[j] = coeffs.get(j, 0) - c[i]
        return KForm(self.space, 1, {(i,): c for i, c in coeffs.items()})

    def is_unimodular(self) -> bool:
        return self.trace_form().is_zero()

    def nijenhuis_vanishes(self, J: ComplexStructureOp) -> bool:
        """Integrability: ``[JX,JY] - J[JX,Y] - J[X,JY] - [X,Y] = 0`` on all basis pairs."""
        return not nijenhuis_defects(self, J)

    def to_json(self) -> dict:
        d = {}
        for name, f in zip(self.names, self.differentials):
            if f.terms:
                d[name] = [[str(c), self.names[i], self.names[j]] for (i, j), c in sorted(f.terms.items())]
        return {"name": self.label, "basis": list(self.names), "d": d}


def ext_d(p: LiePresentation, u: KForm) -> KForm:
    """Exterior derivative extended from the basis differentials by the Leibniz rule."""
    if u.space != p.space:
        raise DomainError("form does not belong to this presentation")
    out = p.space.zero(u.degree + 1)
    for key, c in u.terms.items():
        for r, i in enumerate(key):
            left = p.space.monomial(*key[:r])
            right = p.space.monomial(*key[r + 1:])
            term = wedge(wedge(left, p.differentials[i]), right)
            out = out + term * (c if r % 2 == 0 else -c)
    return out


def nijenhuis_defects(p: LiePresentation, J: ComplexStructureOp) -> list[tuple]:
    n = p.dim
    jv = J.vector_matrix()

    def apply(v):
        return [sum(jv[r][k] * v[k] for k in range(n)) for r in range(n)]

    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            x, y = unit[i], unit[j]
            jx, jy = apply(x), apply(y)
            a = p.bracket(jx, jy)
            b = apply(p.bracket(jx, y))
            c = apply(p.bracket(x, jy))
            e = p.bracket(x, y)
            v = [a[k] - b[k] - c[k] - e[k] for k in range(n)]
            if any(v):
                bad.append((p.names[i], p.names[j], v))
    return bad


def from_brackets(names: Sequence[str], brackets: Mapping, label: str = "") -> LiePresentation:
    """Build from ``{(a, b): {c: coeff}}`` meaning ``[e_a, e_b] = sum coeff e_c``."""
    space = FormSpace(tuple(names), label)
    terms: list[dict] = [{} for _ in names]
    for (a, b), image in brackets.items():
        i, j = space.index(a), space.index(b)
        if i == j:
            raise DomainError("bracket of a basis vector with itself")
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for c, coeff in image.items():
            k = space.index(c)
            terms[k][(i, j)] = terms[k].get((i, j), 0) - sign * Fraction(coeff)
    return LiePresentation(space, [KForm(space, 2, t) for t in terms])


def realify_complex(n: int, brackets: Mapping, label: str = "") -> tuple[LiePresentation, ComplexStructureOp]:
    """Real form of a complex Lie algebra with rational structure constants.

    ``brackets`` maps ``(a, b)`` (1-based) to ``{c: coeff}``.  The real basis is
    ``x_a = X_a``, ``y_a = i X_a`` with ``J x_a = y_a``; on the dual 1-forms
    this reads ``J x^a = -y^a``, ``J y^a = x^a``.
    """
    names = [f"{s}{a}" for a in range(1, n + 1) for s in "xy"]
    real: dict = {}

    def add(key, image):
        real.setdefault(key, {})
        for c, v in image.items():
            real[key][c] = real[key].get(c, 0) + v

    for (a, b), image in brackets.items():
        add((f"x{a}", f"x{b}"), {f"x{c}": v for c, v in image.items()})
        add((f"x{a}", f"y{b}"), {f"y{c}": v for c, v in image.items()})
        add((f"y{a}", f"x{b}"), {f"y{c}": v for c, v in image.items()})
        add((f"y{a}", f"y{b}"), {f"x{c}": -Fraction(v) for c, v in image.items()})
    p = from_brackets(names, real, label)
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        m[2 * a][2 * a + 1] = -1
        m[2 * a + 1][2 * a] = 1
    return p, ComplexStructureOp(p.space, m)


# -- Gaussian rationals for matrix Lie algebras -------------------------------------

class _G:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re, self.im = Fraction(re), Fraction(im)

    def __add__(self, o):
        return _G(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return _G(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return _G(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)


def _mat(n, entries):
    m = [[_G() for _ in range(n)] for _ in range(n)]
    for (i, j), z in entries.items():
        m[i][j] = z
    return m


def _mm(a, b):
    n = len(a)
    out = [[_G() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = _G()
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def _sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def su_n_basis(n: int) -> tuple[list[str], list]:
    """Real basis of su(n): ``x_ij = E_ij - E_ji``, ``y_ij = i(E_ij + E_ji)``, ``h_k = i(E_kk - E_{k+1,k+1})``."""
    names, mats = [], []
    for i in range(n):
        for j in range(i + 1, n):
            names += [f"x{i + 1}{j + 1}", f"y{i + 1}{j + 1}"]
            mats.append(_mat(n, {(i, j): _G(1), (j, i): _G(-1)}))
            mats.append(_mat(n, {(i, j): _G(0, 1), (j, i): _G(0, 1)}))
    for k in range(n - 1):
        names.append(f"h{k + 1}")
        mats.append(_mat(n, {(k, k): _G(0, 1), (k + 1, k + 1): _G(0, -1)}))
    return names, mats


def _su_coordinates(n, m, names):
    coords = {}
    for i in range(n):
        for j in range(i + 1, n):
            z = m[i][j]
            coords[f"x{i + 1}{j + 1}"] = z.re
            coords[f"y{i + 1}{j + 1}"] = z.im
    # i * diag(d) = sum_k u_k h_k with u_k = d_1 + ... + d_k
    acc = Fraction(0)
    for k in range(n - 1):
        acc += m[k][k].im
        coords[f"h{k + 1}"] = acc
    return coords


def su_n_presentation(n: int) -> LiePresentation:
    names, mats = su_n_basis(n)
    brackets = {}
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            c = _sub(_mm(mats[a], mats[b]), _mm(mats[b], mats[a]))
            coords = {k: v for k, v in _su_coordinates(n, c, names).items() if v}
            if coords:
                brackets[(names[a], names[b])] = coords
    return from_brackets(names, brackets, f"su{n}")


def su3_complex_structure(p: LiePresentation) -> ComplexStructureOp:
    """Root-space structure: ``I E_a = i E_a`` on positive roots, ``I h1 = h2`` on the Cartan part.

    On vectors ``I x_ij = y_ij``; the dual action on 1-forms is ``J x^ij = -y^ij``.
    """
    n = p.dim
    m = [[0] * n for _ in range(n)]
    idx = p.space.index
    for pair in ("12", "13", "23"):
        x, y = idx(f"x{pair}"), idx(f"y{pair}")
        m[x][y], m[y][x] = -1, 1
    h1, h2 = idx("h1"), idx("h2")
    m[h1][h2], m[h2][h1] = -1, 1
    return ComplexStructureOp(p.space, m)


def su3_metric(p: LiePresentation, lam: Mapping[str, Fraction]) -> InvariantMetric:
    """Metric whose Gram matrix on the 1-forms of root plane ``r`` is ``lam[r] / 2``.

    ``lam`` keys are the root labels ``"12"``, ``"23"``, ``"13"``.  With
    ``lam = 1`` this is dual to ``B = -tr(XY)`` on the root planes; the
    Cartan 1-forms ``h^1, h^2`` are kept orthonormal.  Scaling the 1-form side
    by ``lam`` is scaling the vector metric by ``1 / lam``.
    """
    n = p.dim
    gram = [[Fraction(0)] * n for _ in range(n)]
    for pair, value in lam.items():
        for s in "xy":
            i = p.space.index(f"{s}{pair}")
            gram[i][i] = Fraction(value) / 2
    for h in ("h1", "h2"):
        i = p.space.index(h)
        gram[i][i] = Fraction(1)
    return InvariantMetric(p.space, gram)


# -- shipped examples ------------------------------------------------------------------

NIL6_BASIS = ("e1", "Je1", "e2", "Je2", "e3", "Je3")


def nil6_presentation() -> LiePresentation:
    """Heisenberg(5) x R with ``d(Je3) = e1^Je1 - e2^Je2``."""
    space = FormSpace(NIL6_BASIS, "nil6")
    diffs = [space.zero(2)] * 6
    diffs[5] = space.monomial("e1", "Je1") - space.monomial("e2", "Je2")
    return LiePresentation(space, diffs)


def nil6_complex_structure(p: LiePresentation) -> ComplexStructureOp:
    """``e^j -> Je^j``, ``Je^j -> -e^j``."""
    m = [[0] * 6 for _ in range(6)]
    for j in range(3):
        m[2 * j][2 * j + 1] = 1
        m[2 * j + 1][2 * j] = -1
    return ComplexStructureOp(p.space, m)


SU2SU2_BASIS = ("a1", "a2", "e1p", "e1m", "e2p", "e2m")


def su2su2_presentation() -> LiePresentation:
    """Compact real form: ``d a_i = e_i^- ^ e_i^+``, ``d e_i^+ = a_i ^ e_i^-``, ``d e_i^- = -a_i ^ e_i^+``.

    Writing ``f = e^+ + i e^-`` the last two equations combine to
    ``d f = -i a ^ f``, the complex shape of the same structure equations.
    """
    s = FormSpace(SU2SU2_BASIS, "su2xsu2")
    diffs = []
    for name in SU2SU2_BASIS:
        i = name[1]
        if name.startswith("a"):
            diffs.append(s.monomial(f"e{i}m", f"e{i}p"))
        elif name.endswith("p"):
            diffs.append(s.monomial(f"a{i}", f"e{i}m"))
        else:
            diffs.append(-s.monomial(f"a{i}", f"e{i}p"))
    return LiePresentation(s, diffs)


def su2su2_complex_structure(p: LiePresentation, a, b) -> ComplexStructureOp:
    """``J a1 = a a1 + b a2``, ``J a2 = c a1 - a a2`` with ``c = -(a^2 + 1)/b``; ``J e^+ = e^-``."""
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise DomainError("b = 0 does not define a complex structure")
    c = -(a * a + 1) / b
    m = [[Fraction(0)] * 6 for _ in range(6)]
    m[0][0], m[0][1], m[1][0], m[1][1] = a, b, c, -a
    for i in ("1", "2"):
        pp, mm = p.space.index(f"e{i}p"), p.space.index(f"e{i}m")
        m[pp][mm] = Fraction(1)
        m[mm][pp] = Fraction(-1)
    return ComplexStructureOp(p.space, m)


def direct_sum_presentation(
    first: tuple[LiePresentation, ComplexStructureOp], second: tuple[LiePresentation, ComplexStructureOp]
) -> tuple[LiePresentation, ComplexStructureOp]:
    """Product of two algebras with their complex structures; basis names must not clash."""
    (p, j1), (q, j2) = first, second
    space = FormSpace(p.names + q.names, f"{p.label}+{q.label}")
    shift = p.dim
    diffs = [KForm(space, 2, f.terms) for f in p.differentials]
    diffs += [KForm(space, 2, {(a + shift, b + shift): c for (a, b), c in f.terms.items()}) for f in q.differentials]
    n = space.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(p.dim):
        for j in range(p.dim):
            m[i][j] = j1.matrix[i][j]
    for i in range(q.dim):
        for j in range(q.dim):
            m[i + shift][j + shift] = j2.matrix[i][j]
    return LiePresentation(space, diffs), ComplexStructureOp(space, m)


def standard_torus(n: int) -> tuple[LiePresentation, ComplexStructureOp]:
    """Abelian algebra of real dimension ``2n`` with ``J t_(2i-1) = -t_(2i)``."""
    p = torus_presentation(2 * n)
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        m[2 * i][2 * i + 1] = Fraction(-1)
        m[2 * i + 1][2 * i] = Fraction(1)
    return p, ComplexStructureOp(p.space, m)


U2_BASIS = ("t", "a", "ep", "em")


def u2_presentation() -> LiePresentation:
    """``u(2) = R + su(2)``, the algebra of the Hopf surface ``S^1 x S^3``."""
    s = FormSpace(U2_BASIS, "u2")
    return LiePresentation(s, [s.zero(2), s.monomial("em", "ep"), s.monomial("a", "em"), -s.monomial("a", "ep")])


def u2_complex_structure(p: LiePresentation) -> ComplexStructureOp:
    """``J t = a`` and ``J e+ = e-``."""
    return ComplexStructureOp(p.space, [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])


def torus_presentation(n: int) -> LiePresentation:
    s = FormSpace(tuple(f"t{i + 1}" for i in range(n)), f"torus{n}")
    return LiePresentation(s, [s.zero(2)] * n)


PARALLELIZABLE = {
    "c3": (3, {}),
    "heisenberg": (3, {(1, 2): {3: 1}}),
    "s2c_c": (3, {(1, 2): {2: 1}}),
    "s3": (3, {(1, 2): {2: 1}, (1, 3): {2: 1, 3: 1}}),
    "sl2c": (3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}),
}


def s3_lambda_brackets(lam) -> dict:
    return {(1, 2): {2: 1}, (1, 3): {3: Fraction(lam)}}


def parallelizable_presentation(name: str, lam=None) -> tuple[LiePresentation, ComplexStructureOp]:
    """Complex three-dimensional algebras; ``s3_lambda`` needs ``lam``."""
    if name == "s3_lambda":
        if lam is None:
            raise DomainError("s3_lambda needs a value of lambda")
        return realify_complex(3, s3_lambda_brackets(lam), f"s3_lambda({Fraction(lam)})")
    if name not in PARALLELIZABLE:
        raise DomainError(f"unknown algebra {name!r}; known: {sorted(PARALLELIZABLE) + ['s3_lambda']}")
    n, br = PARALLELIZABLE[name]
    return realify_complex(n, br, name)


# -- files ---------------------------------------------------------------------------

def _parse_matrix(raw, space: FormSpace, what: str):
    try:
        return [[Fraction(str(x)) for x in row] for row in raw]
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot parse {what} matrix: {exc}") from None


@dataclass
class PresentationData:
    presentation: LiePresentation
    J: ComplexStructureOp | None = None
    metric: InvariantMetric | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = self.presentation.to_json()
        if self.J is not None:
            out["J"] = self.J.to_json()
        if self.metric is not None:
            out["metric"] = self.metric.to_json()
        out.update(self.extra)
        return out


def parse_presentation(doc: Mapping) -> PresentationData:
    try:
        names = [str(n) for n in doc["basis"]]
    except (KeyError, TypeError):
        raise DomainError("presentation needs a 'basis' list") from None
    space = FormSpace(tuple(names), str(doc.get("name", "")))
    diffs = [space.zero(2) for _ in names]
    for target, terms in dict(doc.get("d", {})).items():
        k = space.index(target)
        for term in terms:
            if len(term) != 3:
                raise DomainError(f"bad term {term!r} in d{target}; expected [coeff, i, j]")
            coeff, i, j = term
            diffs[k] = diffs[k] + space.monomial(i, j, coeff=Fraction(str(coeff)))
    p = LiePresentation(space, diffs)
    J = ComplexStructureOp(space, _parse_matrix(doc["J"], space, "J")) if "J" in doc else None
    g = InvariantMetric(space, _parse_matrix(doc["metric"], space, "metric")) if "metric" in doc else None
    extra = {k: v for k, v in doc.items() if k not in ("name", "basis", "d", "J", "metric")}
    return PresentationData(p, J, g, extra)


def load_presentation(path) -> PresentationData:
    """Load a presentation file; bare names resolve to the bundled data files."""
    path = Path(path)
    if not path.exists():
        bundled = resources.files("cytkit.exforms") / "data" / path.name
        if not path.suffix:
            bundled = resources.files("cytkit.exforms") / "data" / f"{path.name}.json"
        if not bundled.is_file():
            raise DomainError(f"presentation file {str(path)!r} not found")
        text = bundled.read_text()
    else:
        text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})") from None
    return parse_presentation(doc)


def bundled_names() -> list[str]:
    data = resources.files("cytkit.exforms") / "data"
    return sorted(p.name[:-5] for p in data.iterdir() if p.name.endswith(".json"))
