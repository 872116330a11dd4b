"""Stirling set numbers and the rational coefficients of the
rising-factorial power-sum formula.

Both quantities come in two independently computed routes so they can be
differentially tested against each other:

* S(k, j): the triangular recurrence (``stirling_table``) versus the
  alternating binomial sum (``stirling_explicit``).
* a(k, j): the defining alternating sum (``coeff_direct``) versus the
  Stirling rewrite (-1)**j / (j+1) * S(k, j) (``coeff_via_stirling``).

Every rational is a ``fractions.Fraction``, so results are always stored
normalized (positive denominator, gcd 1).  0**0 counts as 1 throughout;
without that convention a(0, 0) would not come out as 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import _kernels
from .errors import check_ceiling, check_natural

__all__ = [
    "StirlingTable",
    "CoefficientRow",
    "stirling_table",
    "stirling_explicit",
    "coeff_direct",
    "coeff_via_stirling",
    "coeff_row",
]


class StirlingTable:
    """Immutable triangle of Stirling set numbers S(k, j), 0 <= j <= k <= kmax.

    The constructor only checks the triangular shape, not the recurrence,
    so tests can build deliberately corrupted tables for fault injection.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        self._rows = tuple(tuple(row) for row in rows)
        if not self._rows:
            raise ValueError("a StirlingTable needs at least row 0")
        for k, row in enumerate(self._rows):
            if len(row) != k + 1:
                raise ValueError(f"row {k} has length {len(row)}, expected {k + 1}")

    @property
    def kmax(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def entry(self, k: int, j: int) -> int:
        if not 0 <= j <= k <= self.kmax:
            raise ValueError(
                f"entry(k, j) needs 0 <= j <= k <= {self.kmax}, got k={k}, j={j}"
            )
        return self._rows[k][j]

    def row(self, k: int) -> tuple[int, ...]:
        if not 0 <= k <= self.kmax:
            raise ValueError(f"row index must be in 0..{self.kmax}, got {k}")
        return self._rows[k]

    def __eq__(self, other):
        if not isinstance(other, StirlingTable):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"StirlingTable(kmax={self.kmax})"


@dataclass(frozen=True)
class CoefficientRow:
    """Coefficients a(k, 0..k) of the rising-factorial formula for one k.

    Rows produced by ``coeff_row`` satisfy: the top entry is
    (-1)**k / (k+1), and for k >= 1 the linear entry is -1/2 and the
    constant entry 0.  The constructor checks only the length, again so
    that fault-injection tests can build broken rows on purpose.
    """

    k: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.k + 1:
            raise ValueError(
                f"row for k={self.k} needs {self.k + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    def __getitem__(self, j: int) -> Fraction:
        return self.coefficients[j]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)


def stirling_table(kmax: int) -> StirlingTable:
    """Build the Stirling triangle up to kmax via the two-term recurrence."""
    check_natural("kmax", kmax)
    check_ceiling(kmax)
    return StirlingTable(_kernels.stirling_rows(kmax))


def stirling_explicit(k: int, j: int) -> int:
    """S(k, j) from the alternating binomial sum divided by j!.

    Independent of the recurrence route.  The alternating sum is always
    divisible by j!; a nonzero remainder means a bug, and stops loudly.
    """
    check_natural("k", k)
    check_natural("j", j)
    if j > k:
        raise ValueError(f"stirling_explicit needs j <= k, got k={k}, j={j}")
    total = _kernels.stirling_explicit_sum(k, j)
    q, r = divmod(total, factorial(j))
    if r:
        raise ArithmeticError(
            f"alternating sum {total} is not divisible by {j}! at k={k}, j={j}"
        )
    return q


def coeff_direct(k: int, j: int) -> Fraction:
    """a(k, j) straight from its defining alternating sum,

        a(k, j) = 1/(j+1) * sum over i = 0..j of (-1)**i * i**k / (i! (j-i)!)

    evaluated in exact rationals with 0**0 == 1.
    """
    check_natural("k", k)
    check_natural("j", j)
    if j > k:
        raise ValueError(f"coeff_direct needs j <= k, got k={k}, j={j}")
    total = Fraction(0)
    for i in range(j + 1):
        term = Fraction(i**k, factorial(i) * factorial(j - i))
        total += -term if i & 1 else term
    return total / (j + 1)


def coeff_via_stirling(k: int, j: int, table: StirlingTable) -> Fraction:
    """The same coefficient through the Stirling route: (-1)**j / (j+1) * S(k, j)."""
    check_natural("k", k)
    check_natural("j", j)
    if j > k:
        raise ValueError(f"coeff_via_stirling needs j <= k, got k={k}, j={j}")
    if k > table.kmax:
        raise ValueError(f"table only reaches kmax={table.kmax}, got k={k}")
    value = Fraction(table.entry(k, j), j + 1)
    return -value if j & 1 else value


def coeff_row(k: int) -> CoefficientRow:
    """The full row a(k, 0..k), computed via ``coeff_direct``."""
    check_natural("k", k)
    check_ceiling(k)
    return CoefficientRow(k, tuple(coeff_direct(k, j) for j in range(k + 1)))
