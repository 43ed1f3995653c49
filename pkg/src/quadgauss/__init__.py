"""Certified evaluation of generalized quadratic Gauss sums.

S_N(x, theta) = sum_{j=1}^N exp(pi i x j^2 + 2 pi i j theta) evaluated
three independent ways: a compensated direct oracle, an exact
erfc-series representation, and a small-x expansion whose truncation
error carries a computable, N-independent bound.
"""

from .core import (
    GaussParams,
    NearestSplit,
    NormalizationRecord,
    direct_sum,
    normalize_params,
    phase_sum,
    phase_term,
    split_nearest,
)
from .errors import (
    DomainError,
    ExprError,
    ExprSyntaxError,
    PrecisionError,
    QuadGaussError,
    ResourceBudgetError,
    TruncationError,
    UnknownIdentifierError,
)
from .exact import (
    BoundarySeries,
    TailPolicy,
    boundary_series,
    exact_sum,
    exact_sum_detail,
    phase_integral,
)
from .expansion import (
    ExpansionReport,
    asymptotic_sum,
    classical_sum,
    optimal_truncation,
    reduced_sum_pair,
    remainder_bound,
    series_coeff,
)
from .exprs import NumberExpr, eval_number_expr, format_expr, parse_number_expr
from .precision import CompensatedSum, PrecisionContext
from .special import (
    BoundedValue,
    cot_pi_reg,
    erfc_complex,
    erfc_kernel,
    erfc_kernel_asym,
    hurwitz_zeta_odd,
    hzeta_diff,
    hzeta_sum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundarySeries",
    "BoundedValue",
    "CompensatedSum",
    "DomainError",
    "ExpansionReport",
    "ExprError",
    "ExprSyntaxError",
    "GaussParams",
    "NearestSplit",
    "NormalizationRecord",
    "NumberExpr",
    "PrecisionContext",
    "PrecisionError",
    "QuadGaussError",
    "ResourceBudgetError",
    "TailPolicy",
    "TruncationError",
    "UnknownIdentifierError",
    "asymptotic_sum",
    "boundary_series",
    "classical_sum",
    "cot_pi_reg",
    "direct_sum",
    "erfc_complex",
    "erfc_kernel",
    "erfc_kernel_asym",
    "eval_number_expr",
    "exact_sum",
    "exact_sum_detail",
    "format_expr",
    "hurwitz_zeta_odd",
    "hzeta_diff",
    "hzeta_sum",
    "normalize_params",
    "optimal_truncation",
    "parse_number_expr",
    "phase_integral",
    "phase_sum",
    "phase_term",
    "reduced_sum_pair",
    "remainder_bound",
    "series_coeff",
    "split_nearest",
    "__version__",
]
