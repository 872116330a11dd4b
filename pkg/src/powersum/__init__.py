"""Exact arithmetic for integer power sums 1^k + 2^k + ... + n^k.

Five closed-form evaluation routes plus the brute-force oracle, two
independent routes to the Stirling numbers and to the rational formula
coefficients, exact polynomial algebra for the identities relating the
forms, and a differential-verification engine with fault-injection
self-tests.  All arithmetic is arbitrary precision; nothing is ever
rounded or truncated.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .combinatorics import (
    CoefficientRow,
    StirlingTable,
    coeff_direct,
    coeff_row,
    coeff_via_stirling,
    stirling_explicit,
    stirling_table,
)
from .errors import DEFAULT_CEILING, CeilingError, DomainError, effective_ceiling
from .evaluator import (
    CLOSED_FORMS,
    Evaluation,
    FormulaId,
    eval_binomial,
    eval_companion,
    eval_factorized,
    eval_samsonadze,
    eval_stirling,
    evaluate,
    power_sum_naive,
)
from .polyalg import (
    Polynomial,
    X,
    binomial_poly,
    check_symmetry,
    check_transform_equivalence,
    powersum_poly,
    rising_factorial,
)
from .verify import (
    Fault,
    Mismatch,
    VerificationReport,
    grid_checks_planned,
    identity_checks_planned,
    merge_reports,
    verify_grid,
    verify_identities,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "DEFAULT_CEILING",
    "CeilingError",
    "DomainError",
    "effective_ceiling",
    "StirlingTable",
    "CoefficientRow",
    "stirling_table",
    "stirling_explicit",
    "coeff_direct",
    "coeff_via_stirling",
    "coeff_row",
    "FormulaId",
    "CLOSED_FORMS",
    "Evaluation",
    "power_sum_naive",
    "eval_samsonadze",
    "eval_binomial",
    "eval_stirling",
    "eval_companion",
    "eval_factorized",
    "evaluate",
    "Polynomial",
    "X",
    "rising_factorial",
    "binomial_poly",
    "powersum_poly",
    "check_symmetry",
    "check_transform_equivalence",
    "Fault",
    "Mismatch",
    "VerificationReport",
    "grid_checks_planned",
    "identity_checks_planned",
    "merge_reports",
    "verify_grid",
    "verify_identities",
]
