"""Kähler forms, the invariant codifferential and CYT checks.

On a unimodular Lie algebra with invariant metric the codifferential of an
invariant 2-form is the 1-form determined by ``g(dF*, xi) = g(F, d xi)``.
For a compact semisimple group with an invariant complex structure the
CYT equation reduces to ``sigma = delta F`` with ``sigma`` the Koszul form.

Kähler form convention: ``g(F, xi ^ eta) = g(xi, J eta)`` on 1-forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .. import _exact
from ..errors import DomainError, MathAssertionError
from .forms import ComplexStructureOp, InvariantMetric, KForm, apply_J, inner, solve_by_pairings
from .presentations import LiePresentation, su2su2_complex_structure, su2su2_presentation, su3_metric, su_n_presentation


def _check_compatible(g: InvariantMetric, J: ComplexStructureOp) -> None:
    if g.space != J.space:
        raise DomainError("metric and complex structure belong to different presentations")
    if not g.is_compatible(J):
        raise DomainError("metric is not J-compatible: g(J xi, J eta) != g(xi, eta)")


def _kahler_pairings(gram, m) -> dict:
    n = len(gram)
    return {(k, l): sum(m[l][t] * gram[k][t] for t in range(n)) for k in range(n) for l in range(k + 1, n)}


def kahler_form(g: InvariantMetric, J: ComplexStructureOp) -> KForm:
    _check_compatible(g, J)
    return solve_by_pairings(g, 2, _kahler_pairings(g.gram, J.matrix))


def weak_codifferential(p: LiePresentation, g: InvariantMetric, F: KForm) -> KForm:
    """The 1-form ``u`` with ``g(u, xi) = g(F, d xi)`` for every basis 1-form ``xi``."""
    if F.degree != 2:
        raise DomainError(f"expected a 2-form, got degree {F.degree}")
    rhs = {(j,): inner(g, F, d) for j, d in enumerate(p.differentials)}
    return solve_by_pairings(g, 1, rhs)


def is_balanced(p: LiePresentation, g: InvariantMetric, J: ComplexStructureOp) -> bool:
    return weak_codifferential(p, g, kahler_form(g, J)).is_zero()


def cyt_equation_check(p: LiePresentation, g: InvariantMetric, J: ComplexStructureOp, sigma: KForm) -> bool:
    """``delta F == sigma`` exactly, with ``F`` the Kähler form of ``(g, J)``."""
    if sigma.degree != 1:
        raise DomainError("sigma must be a 1-form")
    return weak_codifferential(p, g, kahler_form(g, J)) == sigma


def solve_cyt_metric(
    p: LiePresentation,
    J: ComplexStructureOp,
    sigma: KForm,
    base: Sequence[Sequence],
    directions: Sequence[Sequence[Sequence]],
) -> list[Fraction]:
    """Solve for ``u`` with ``P = base + sum u_t directions[t]`` J-compatible and CYT.

    For fixed J both conditions are linear in the Gram matrix ``P``:
    compatibility is ``M P M^T = P`` and ``g(sigma, xi_j) = g(F, d xi_j)``
    becomes ``(P s)_j = sum c_{j,kl} (P M^T)_{kl}``.  Positivity is not
    checked here.
    """
    n = p.dim
    m = J.matrix
    s = [sigma.terms.get((i,), Fraction(0)) for i in range(n)]

    def residuals(gram):
        out = []
        mpm = _exact.matmul(_exact.matmul(m, gram), _exact.transpose(m))
        out += [mpm[i][j] - gram[i][j] for i in range(n) for j in range(i, n)]
        pairs = _kahler_pairings(gram, m)
        for j, d in enumerate(p.differentials):
            lhs = sum(gram[j][t] * s[t] for t in range(n))
            rhs = sum(c * pairs[key] for key, c in d.terms.items())
            out.append(lhs - rhs)
        return out

    base = _exact.as_fraction_matrix(base)
    r0 = residuals(base)
    cols = []
    for dmat in directions:
        dmat = _exact.as_fraction_matrix(dmat)
        shifted = [[b + x for b, x in zip(rb, rd)] for rb, rd in zip(base, dmat)]
        cols.append([a - b for a, b in zip(residuals(shifted), r0)])
    a = _exact.transpose(cols)
    try:
        u = _exact.solve(a, [-x for x in r0])
    except ValueError:
        raise DomainError("the metric ansatz leaves free parameters") from None
    if u is None:
        raise DomainError("no J-compatible CYT metric in the ansatz")
    return u


# -- general unimodular test ----------------------------------------------------------

def chern_ricci_potential(p: LiePresentation, J: ComplexStructureOp) -> KForm:
    """The 1-form ``kappa(X) = tr(J o ad_X)`` on vectors.

    On a unimodular algebra the Chern Ricci form is a multiple of ``d kappa``;
    on a compact semisimple algebra ``-kappa / 2`` is the Koszul form.
    """
    n = p.dim
    jv = J.vector_matrix()
    consts = p.bracket_constants()
    coeffs = {}
    for x in range(n):
        # ad_{e_x} e_j = sum_k c^k_{xj} e_k, and tr(J ad_x) = sum_{j,i} jv[j][i] * c^i_{xj}
        total = Fraction(0)
        for j in range(n):
            if j == x:
                continue
            c = consts.get((x, j)) if x < j else [-v for v in consts.get((j, x), [0] * n)]
            if c is None:
                continue
            total += sum(jv[j][i] * c[i] for i in range(n))
        coeffs[(x,)] = total
    return KForm(p.space, 1, coeffs)


def cyt_defect(p: LiePresentation, g: InvariantMetric, J: ComplexStructureOp) -> KForm:
    """``d(delta F + kappa / 2)``: the Bismut Ricci form up to a constant factor.

    Defined for unimodular algebras with integrable J; zero exactly for CYT structures.
    """
    if not p.is_unimodular():
        raise DomainError("the algebra is not unimodular")
    if not p.nijenhuis_vanishes(J):
        raise DomainError("J is not integrable")
    delta = weak_codifferential(p, g, kahler_form(g, J))
    return p.d(delta + chern_ricci_potential(p, J) * Fraction(1, 2))


def is_cyt(p: LiePresentation, g: InvariantMetric, J: ComplexStructureOp) -> bool:
    return cyt_defect(p, g, J).is_zero()


# -- SU(2) x SU(2) ---------------------------------------------------------------------

def su2su2_cyt_region(a, b) -> bool:
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise DomainError("b = 0 does not define a complex structure")
    return b * (b - a) > 0 and a * a + 1 - a * b > 0


def _unit(n, *cells):
    m = [[0] * n for _ in range(n)]
    for i, j in cells:
        m[i][j] = 1
    return m


def su2su2_cyt_metric(a, b) -> InvariantMetric:
    """CYT metric for the complex structure ``(a, b)``, normalized by ``g(a1, a1) = 1``.

    Ansatz: a Hermitian block on ``span(a1, a2)`` and ``G_i`` times the identity on
    ``span(e_i^+, e_i^-)``.  The four unknowns ``g(a1, a2), g(a2, a2), G_1, G_2``
    come from one linear solve; positivity of ``G_1`` and ``G_2`` is then the region.
    """
    a, b = Fraction(a), Fraction(b)
    p = su2su2_presentation()
    J = su2su2_complex_structure(p, a, b)
    sigma = p.basis("a1") + p.basis("a2")
    base = _unit(6, (0, 0))
    dirs = [_unit(6, (0, 1), (1, 0)), _unit(6, (1, 1)), _unit(6, (2, 2), (3, 3)), _unit(6, (4, 4), (5, 5))]
    g12, g22, G1, G2 = solve_cyt_metric(p, J, sigma, base, dirs)
    failed = []
    if G1 <= 0:
        failed.append(f"b(b-a) > 0 fails: b(b-a) = {b * (b - a)}")
    if G2 <= 0:
        failed.append(f"a^2+1-ab > 0 fails: a^2+1-ab = {a * a + 1 - a * b}")
    if failed:
        raise DomainError("; ".join(failed))
    gram = [[Fraction(0)] * 6 for _ in range(6)]
    gram[0][0], gram[0][1], gram[1][0], gram[1][1] = Fraction(1), g12, g12, g22
    gram[2][2] = gram[3][3] = G1
    gram[4][4] = gram[5][5] = G2
    return InvariantMetric(p.space, gram)


def su2su2_closed_form(a, b) -> dict:
    """The same metric from the explicit relations, for cross-checking."""
    a, b = Fraction(a), Fraction(b)
    c = -(a * a + 1) / b
    g22 = (a * a + 1) / (b * b)
    return {"g11": Fraction(1), "g12": -a / b, "g22": g22, "G1": (b - a) / b, "G2": (a + c) / c * g22}


# -- SU(3) -------------------------------------------------------------------------------

SU3_ROOTS = {"alpha": (1, 0), "beta": (0, 1), "alpha+beta": (1, 1)}
_SU3_ROOT_PLANES = {"alpha": "12", "beta": "23", "alpha+beta": "13"}


def _check_lambda(lam: Mapping) -> dict:
    if set(lam) != set(SU3_ROOTS):
        raise DomainError(f"lambda must be given on exactly {sorted(SU3_ROOTS)}")
    out = {k: Fraction(v) for k, v in lam.items()}
    bad = [k for k, v in out.items() if v <= 0]
    if bad:
        raise DomainError(f"lambda must be positive; non-positive at {bad}")
    return out


def su3_cyt_family(lam: Mapping) -> tuple[bool, list[Fraction]]:
    """Whether ``sum (1 - lambda_r) r`` over the positive roots vanishes; also the residual."""
    lam = _check_lambda(lam)
    res = [Fraction(0), Fraction(0)]
    for root, (c1, c2) in SU3_ROOTS.items():
        res[0] += (1 - lam[root]) * c1
        res[1] += (1 - lam[root]) * c2
    return not any(res), res


def su3_codifferential(lam: Mapping) -> KForm:
    """``delta F`` on su(3) for root planes scaled by ``lam`` (Cartan block fixed)."""
    from .presentations import su3_complex_structure

    lam = _check_lambda(lam)
    p = su_n_presentation(3)
    g = su3_metric(p, {_SU3_ROOT_PLANES[k]: v for k, v in lam.items()})
    return weak_codifferential(p, g, kahler_form(g, su3_complex_structure(p)))


# -- complex parallelizable ------------------------------------------------------------

def parallelizable_balanced_check(p: LiePresentation, J: ComplexStructureOp, g: InvariantMetric) -> KForm:
    """The 1-form ``X -> tr(ad_{JX})``.

    When it vanishes the weak codifferential of the Kähler form of ``g`` must
    vanish too; a mismatch raises ``MathAssertionError``.
    """
    if not p.nijenhuis_vanishes(J):
        raise DomainError("J is not integrable")
    _check_compatible(g, J)
    tau = apply_J(J, p.trace_form())
    if tau.is_zero():
        delta = weak_codifferential(p, g, kahler_form(g, J))
        if not delta.is_zero():
            raise MathAssertionError(f"unimodular algebra but delta F = {delta}")
    return tau
