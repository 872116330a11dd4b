"""Six evaluation routes for the power sum 1**k + 2**k + ... + n**k.

The brute-force definition (``power_sum_naive``) is the oracle.  The five
closed forms are transcribed exactly as stated, validity domains included,
so the verify module can differentially test them against the oracle.
The sum is extended to n = 0 as the empty sum; every closed form is
expected to respect that.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .combinatorics import CoefficientRow, StirlingTable, coeff_row, stirling_table
from .errors import DomainError, check_natural

__all__ = [
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
]


class FormulaId(Enum):
    """Identifiers for the evaluation routes.

    ``companion`` and ``factorized`` hold only for k >= 1 (the companion
    form evaluates to n + 1 instead of n at k = 0); the rest are valid
    for every k >= 0.
    """

    NAIVE = "naive"
    SAMSONADZE = "samsonadze"
    BINOMIAL = "binomial"
    STIRLING = "stirling"
    COMPANION = "companion"
    FACTORIZED = "factorized"

    @property
    def min_k(self) -> int:
        return 1 if self in (FormulaId.COMPANION, FormulaId.FACTORIZED) else 0

    def valid_for(self, k: int) -> bool:
        return k >= self.min_k


#: The five closed forms, i.e. every route except the naive oracle.
CLOSED_FORMS = (
    FormulaId.SAMSONADZE,
    FormulaId.BINOMIAL,
    FormulaId.STIRLING,
    FormulaId.COMPANION,
    FormulaId.FACTORIZED,
)


@dataclass(frozen=True)
class Evaluation:
    """One evaluated point: which route, where, and the exact value."""

    k: int
    n: int
    formula: FormulaId
    value: int


def power_sum_naive(k: int, n: int) -> int:
    """The defining sum, term by term.  S_k(0) is the empty sum, 0."""
    check_natural("k", k)
    check_natural("n", n)
    return _kernels.power_sum_naive(k, n)


def eval_samsonadze(k: int, n: int, row: CoefficientRow) -> int:
    """Rising-factorial closed form, using a precomputed coefficient row."""
    check_natural("k", k)
    check_natural("n", n)
    if row.k != k:
        raise ValueError(f"coefficient row is for k={row.k}, not k={k}")
    return _kernels.eval_samsonadze(k, n, row.coefficients)


def eval_binomial(k: int, n: int) -> int:
    """Binomial-coefficient closed form; needs no precomputed data."""
    check_natural("k", k)
    check_natural("n", n)
    return _kernels.eval_binomial(k, n)


def eval_stirling(k: int, n: int, table: StirlingTable) -> int:
    """Alternating Stirling closed form, valid for all k >= 0."""
    check_natural("k", k)
    check_natural("n", n)
    if k > table.kmax:
        raise ValueError(f"table only reaches kmax={table.kmax}, got k={k}")
    return _kernels.eval_stirling(k, n, table.row(k))


def eval_companion(k: int, n: int, table: StirlingTable) -> int:
    """Companion Stirling form.  Restricted to k >= 1; k = 0 is an error,
    never a silently wrong value."""
    check_natural("k", k)
    check_natural("n", n)
    if k == 0:
        raise DomainError("the companion form needs k >= 1; at k = 0 it gives n + 1")
    if k > table.kmax:
        raise ValueError(f"table only reaches kmax={table.kmax}, got k={k}")
    return _kernels.eval_companion(k, n, table.row(k))


def eval_factorized(k: int, n: int, table: StirlingTable) -> int:
    """Factorized form, n(n+1) times a rational Stirling sum.  k >= 1 only."""
    check_natural("k", k)
    check_natural("n", n)
    if k == 0:
        raise DomainError("the factorized form needs k >= 1")
    if k > table.kmax:
        raise ValueError(f"table only reaches kmax={table.kmax}, got k={k}")
    return _kernels.eval_factorized(k, n, table.row(k))


_table_lock = threading.Lock()
_shared_table: StirlingTable | None = None


def _table_for(k: int) -> StirlingTable:
    """Process-wide Stirling table, grown to the largest k seen so far.

    The lock gives concurrent first users the single-initialization
    guarantee; a finished table is immutable and safe to share.
    """
    global _shared_table
    with _table_lock:
        if _shared_table is None or _shared_table.kmax < k:
            _shared_table = stirling_table(k)
        return _shared_table


def evaluate(formula: FormulaId | str, k: int, n: int) -> Evaluation:
    """Dispatch one evaluation, building coefficient rows and tables as needed."""
    check_natural("k", k)
    check_natural("n", n)
    formula = FormulaId(formula)
    if not formula.valid_for(k):
        raise DomainError(
            f"{formula.value} is not defined for k={k} (needs k >= {formula.min_k})"
        )
    if formula is FormulaId.NAIVE:
        value = power_sum_naive(k, n)
    elif formula is FormulaId.SAMSONADZE:
        value = eval_samsonadze(k, n, coeff_row(k))
    elif formula is FormulaId.BINOMIAL:
        value = eval_binomial(k, n)
    elif formula is FormulaId.STIRLING:
        value = eval_stirling(k, n, _table_for(k))
    elif formula is FormulaId.COMPANION:
        value = eval_companion(k, n, _table_for(k))
    else:
        value = eval_factorized(k, n, _table_for(k))
    return Evaluation(k=k, n=n, formula=formula, value=value)
