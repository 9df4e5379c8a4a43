"""Anomaly cancellation ``dd^c F = (alpha'/4) (tr R^R - tr F_A^F_A)`` on Lie algebras.

``ddc`` is the chain ``d J d J F`` with J acting slot by slot.  The Kähler
form entering the anomaly is the positive one in a unitary coframe,
``F = 2 sum e^j ^ Je^j`` for the cometric ``1/2`` times the identity, which
is ``-kahler_form(g, J)`` in the convention of ``cyt``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import DomainError
from .cyt import kahler_form, weak_codifferential
from .forms import ComplexStructureOp, FormSpace, InvariantMetric, KForm, apply_J, wedge
from .presentations import LiePresentation, PresentationData


def unitary_kahler_form(g: InvariantMetric, J: ComplexStructureOp) -> KForm:
    return -kahler_form(g, J)


def ddc(p: LiePresentation, J: ComplexStructureOp, F: KForm) -> KForm:
    if F.degree != 2:
        raise DomainError("ddc expects a 2-form")
    return p.d(apply_J(J, p.d(apply_J(J, F))))


class ConnectionForm:
    """Square matrix of invariant 1-forms."""

    def __init__(self, space: FormSpace, entries: Sequence[Sequence[KForm]]):
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise DomainError("connection matrix is not square")
        for row in entries:
            for w in row:
                if w.space != space or w.degree != 1:
                    raise DomainError("connection entries must be 1-forms on the presentation")
        self.space = space
        self.entries = [list(row) for row in entries]

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, space: FormSpace, n: int) -> "ConnectionForm":
        return cls(space, [[space.zero(1)] * n for _ in range(n)])

    @classmethod
    def from_json(cls, space: FormSpace, doc: Mapping) -> "ConnectionForm":
        n = int(doc["size"])
        rows = [[space.zero(1)] * n for _ in range(n)]
        for i, j, terms in doc.get("entries", []):
            rows[i][j] = rows[i][j] + space.form(1, {(k,): v for k, v in terms.items()})
        return cls(space, rows)

    def scaled(self, s) -> "ConnectionForm":
        return ConnectionForm(self.space, [[w * s for w in row] for row in self.entries])


def _matrix_wedge(a, b, space: FormSpace, degree: int):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = space.zero(degree)
            for k in range(n):
                acc = acc + wedge(a[i][k], b[k][j])
            row.append(acc)
        out.append(row)
    return out


def connection_curvature(p: LiePresentation, w: ConnectionForm) -> list[list[KForm]]:
    """``R = d w + w ^ w`` entrywise."""
    ww = _matrix_wedge(w.entries, w.entries, p.space, 2)
    return [[p.d(w.entries[i][j]) + ww[i][j] for j in range(w.size)] for i in range(w.size)]


def tr_wedge_square(R: Sequence[Sequence[KForm]]) -> KForm:
    """``sum_{i,j} R_ij ^ R_ji``."""
    n = len(R)
    if any(len(row) != n for row in R):
        raise DomainError("curvature matrix is not square")
    if n == 0:
        raise DomainError("empty curvature matrix")
    space = R[0][0].space
    acc = space.zero(2 * R[0][0].degree)
    for i in range(n):
        for j in range(n):
            acc = acc + wedge(R[i][j], R[j][i])
    return acc


def tr_wedge_square_polynomial(p: LiePresentation, w1: ConnectionForm) -> dict[int, KForm]:
    """``tr(R ^ R)`` for ``w = a * w1`` as ``{power of a: 4-form}``.

    ``R = a dw1 + a^2 w1^w1``, so the square has terms in ``a^2``, ``a^3``, ``a^4``.
    """
    dw = [[p.d(x) for x in row] for row in w1.entries]
    ww = _matrix_wedge(w1.entries, w1.entries, p.space, 2)

    def tr(x, y):
        n = len(x)
        acc = p.space.zero(4)
        for i in range(n):
            for j in range(n):
                acc = acc + wedge(x[i][j], y[j][i])
        return acc

    return {2: tr(dw, dw), 3: tr(dw, ww) + tr(ww, dw), 4: tr(ww, ww)}


@dataclass
class AnomalyReport:
    solvable: bool
    mu: Fraction | None
    alpha_prime: Fraction | None
    ddcF: KForm
    trRR: KForm
    trFA: KForm
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "solvable": self.solvable,
            "mu": None if self.mu is None else str(self.mu),
            "alpha_prime": None if self.alpha_prime is None else str(self.alpha_prime),
            "ddcF": self.ddcF.to_json(),
            "trRR": self.trRR.to_json(),
            "trFA": self.trFA.to_json(),
            "reason": self.reason,
        }


def strominger_anomaly_report(
    p: LiePresentation, J: ComplexStructureOp, F: KForm, w: ConnectionForm, trFA: KForm
) -> AnomalyReport:
    """Solve ``ddc F = (alpha'/4) (tr R^R - trFA)`` for ``alpha' > 0``.

    Writes ``tr R^R - trFA = mu * ddc F``; solvable iff such a ``mu > 0`` exists,
    and then ``alpha' = 4 / mu``.
    """
    if trFA.degree != 4:
        raise DomainError("the instanton term must be a 4-form")
    if len(trFA.terms) > 1:
        raise DomainError("the instanton term must be a multiple of a single monomial")
    lhs = ddc(p, J, F)
    trRR = tr_wedge_square(connection_curvature(p, w))
    rhs = trRR - trFA
    if lhs.is_zero():
        ok = rhs.is_zero()
        return AnomalyReport(False, None, None, lhs, trRR, trFA,
                             "ddc F = 0: alpha' is unconstrained" if ok else "ddc F = 0 but the right side is not")
    mu = rhs.is_multiple_of(lhs)
    if mu is None:
        return AnomalyReport(False, None, None, lhs, trRR, trFA, "tr R^R - trFA is not proportional to ddc F")
    if mu <= 0:
        return AnomalyReport(False, mu, None, lhs, trRR, trFA, f"mu = {mu} gives alpha' <= 0 or undefined")
    return AnomalyReport(True, mu, 4 / mu, lhs, trRR, trFA)


# -- complex forms ------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexForm:
    re: KForm
    im: KForm

    def __xor__(self, other: "ComplexForm") -> "ComplexForm":
        return ComplexForm(
            wedge(self.re, other.re) - wedge(self.im, other.im),
            wedge(self.re, other.im) + wedge(self.im, other.re),
        )

    def d(self, p: LiePresentation) -> "ComplexForm":
        return ComplexForm(p.d(self.re), p.d(self.im))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()


def holomorphic_volume_form(J: ComplexStructureOp, frame: Sequence[str]) -> ComplexForm:
    """``(xi_1 + i J xi_1) ^ ... ^ (xi_n + i J xi_n)`` for the named real 1-forms."""
    space = J.space
    out = ComplexForm(space.one(), space.zero(0))
    for name in frame:
        xi = space.basis(name)
        out = out ^ ComplexForm(xi, apply_J(J, xi))
    return out


# -- end-to-end report ---------------------------------------------------------------

@dataclass
class StromingerReport:
    F: KForm
    F_squared: KForm
    dF_squared: KForm
    balanced: bool
    ddcF: KForm
    curvature: list
    trRR_by_power: dict
    volume_form_closed: bool
    integrable: bool
    anomaly: AnomalyReport
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        n = len(self.curvature)
        return {
            "F": self.F.to_json(),
            "F^2": self.F_squared.to_json(),
            "dF^2": self.dF_squared.to_json(),
            "balanced": self.balanced,
            "ddcF": self.ddcF.to_json(),
            "curvature": {f"R{i + 1}{j + 1}": self.curvature[i][j].to_json()
                          for i in range(n) for j in range(n) if not self.curvature[i][j].is_zero()},
            "trRR_by_power_of_a": {str(k): v.to_json() for k, v in self.trRR_by_power.items()},
            "volume_form_closed": self.volume_form_closed,
            "integrable": self.integrable,
            "anomaly": self.anomaly.to_json(),
            "checks": self.checks,
        }


def strominger_report(data: PresentationData, a, b) -> StromingerReport:
    """Run the whole chain for a presentation file carrying J, metric, connection and instanton."""
    p, J, g = data.presentation, data.J, data.metric
    if J is None or g is None:
        raise DomainError("presentation needs both 'J' and 'metric'")
    for key in ("connection", "instanton", "holomorphic_frame"):
        if key not in data.extra:
            raise DomainError(f"presentation needs a '{key}' entry")
    a, b = Fraction(a), Fraction(b)
    F = unitary_kahler_form(g, J)
    F2 = wedge(F, F)
    w1 = ConnectionForm.from_json(p.space, data.extra["connection"])
    w = w1.scaled(a)
    inst = p.space.form(4, data.extra["instanton"]) * b
    R = connection_curvature(p, w)
    by_power = tr_wedge_square_polynomial(p, w1)
    omega = holomorphic_volume_form(J, data.extra["holomorphic_frame"])
    ddcF = ddc(p, J, F)
    report = StromingerReport(
        F=F,
        F_squared=F2,
        dF_squared=p.d(F2),
        balanced=weak_codifferential(p, g, F).is_zero(),
        ddcF=ddcF,
        curvature=R,
        trRR_by_power=by_power,
        volume_form_closed=omega.d(p).is_zero(),
        integrable=p.nijenhuis_vanishes(J),
        anomaly=strominger_anomaly_report(p, J, F, w, inst),
    )
    report.checks = {
        "trRR_is_a2_ddcF": by_power[2] == ddcF and by_power[3].is_zero() and by_power[4].is_zero(),
        "trRR_matches_numeric_a": tr_wedge_square(R) == sum(
            (v * a ** k for k, v in by_power.items()), p.space.zero(4)
        ),
    }
    return report
