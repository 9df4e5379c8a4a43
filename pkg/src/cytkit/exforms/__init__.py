"""Invariant exterior calculus on Lie algebras given by Maurer-Cartan data."""

from .cyt import (
    chern_ricci_potential,
    cyt_defect,
    cyt_equation_check,
    is_balanced,
    is_cyt,
    kahler_form,
    parallelizable_balanced_check,
    solve_cyt_metric,
    su2su2_cyt_metric,
    su2su2_cyt_region,
    su3_codifferential,
    su3_cyt_family,
    weak_codifferential,
)
from .forms import ComplexStructureOp, FormSpace, InvariantMetric, KForm, apply_J, inner, wedge
from .presentations import LiePresentation, PresentationData, ext_d, load_presentation, parse_presentation
from .strominger import (
    ConnectionForm,
    connection_curvature,
    ddc,
    holomorphic_volume_form,
    strominger_anomaly_report,
    strominger_report,
    tr_wedge_square,
    unitary_kahler_form,
)

__all__ = [
    "ComplexStructureOp",
    "ConnectionForm",
    "FormSpace",
    "InvariantMetric",
    "KForm",
    "LiePresentation",
    "PresentationData",
    "apply_J",
    "chern_ricci_potential",
    "connection_curvature",
    "cyt_defect",
    "cyt_equation_check",
    "ddc",
    "ext_d",
    "holomorphic_volume_form",
    "inner",
    "is_balanced",
    "is_cyt",
    "kahler_form",
    "load_presentation",
    "parallelizable_balanced_check",
    "parse_presentation",
    "solve_cyt_metric",
    "strominger_anomaly_report",
    "strominger_report",
    "su2su2_cyt_metric",
    "su2su2_cyt_region",
    "su3_codifferential",
    "su3_cyt_family",
    "tr_wedge_square",
    "unitary_kahler_form",
    "wedge",
    "weak_codifferential",
]
