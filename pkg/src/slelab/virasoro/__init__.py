"""Exact Virasoro-algebra engine: Verma modules, graded conformal operators,
coefficient-space differential operators, and the SLE martingale identities."""

from .coeffpoly import CoeffPolynomial
from .differential import (
    FirstOrderOperator,
    loewner_annihilator,
    martingale_subspace_check,
    r_operator,
    s_operator,
)
from .eigenvalues import annular_w_coeffs, diffusion_eigenvalue
from .gf import (
    GradedOperatorExpansion,
    conjugation_report,
    gf_conjugate_direct,
    gf_conjugate_mode,
    gf_expand,
)
from .series import LaurentSeries, schwarzian
from .verma import (
    VermaModule,
    VermaVector,
    gram_matrix,
    null_vector_level2,
    partitions,
    sle_generator_check,
)
from .weights import central_charge, central_charge_alt, h_12, h_13, h_rs

__all__ = [
    "CoeffPolynomial",
    "FirstOrderOperator",
    "GradedOperatorExpansion",
    "LaurentSeries",
    "VermaModule",
    "VermaVector",
    "annular_w_coeffs",
    "central_charge",
    "central_charge_alt",
    "conjugation_report",
    "diffusion_eigenvalue",
    "gf_conjugate_direct",
    "gf_conjugate_mode",
    "gf_expand",
    "gram_matrix",
    "h_12",
    "h_13",
    "h_rs",
    "loewner_annihilator",
    "martingale_subspace_check",
    "null_vector_level2",
    "partitions",
    "r_operator",
    "s_operator",
    "schwarzian",
    "sle_generator_check",
]
