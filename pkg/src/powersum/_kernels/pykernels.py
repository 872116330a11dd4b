"""Pure-Python backend for the integer inner loops.

Drop-in equivalent of the compiled ``cykernels`` module.  Everything
runs on arbitrary-precision ints (Fractions where a formula has
rational intermediates); there is no fixed-width fast path anywhere.
Callers validate arguments; these functions trust them.
"""

from fractions import Fraction
from math import comb, factorial


def power_sum_naive(k, n):
    """Sum i**k for i = 1..n, term by term.  The empty sum (n = 0) is 0."""
    total = 0
    for i in range(1, n + 1):
        total += i**k
    return total


def stirling_rows(kmax):
    """Triangle of Stirling set numbers S(k, j) for 0 <= j <= k <= kmax.

    Built eagerly, row by row, from S(k, j) = j*S(k-1, j) + S(k-1, j-1).
    """
    rows = [[1]]
    for k in range(1, kmax + 1):
        prev = rows[k - 1]
        row = [0] * (k + 1)
        for j in range(1, k):
            row[j] = j * prev[j] + prev[j - 1]
        row[k] = 1
        rows.append(row)
    return rows


def stirling_explicit_sum(k, j):
    """Alternating sum of (-1)**(j-i) * C(j, i) * i**k over i = 0..j.

    Equals j! * S(k, j); the caller performs (and checks) the division.
    The i = 0 term uses the 0**0 == 1 convention.
    """
    total = 0
    for i in range(j + 1):
        term = comb(j, i) * i**k
        total += -term if (j - i) & 1 else term
    return total


def eval_samsonadze(k, n, coeffs):
    """Rising-factorial form: (-1)**k times the sum of coeffs[j] * n(n+1)...(n+j).

    ``coeffs`` holds exact rationals; the final value must reduce to an
    integer, anything else aborts loudly instead of rounding.
    """
    total = Fraction(0)
    prod = n
    for j in range(k + 1):
        if j:
            prod *= n + j
        total += coeffs[j] * prod
    if k & 1:
        total = -total
    if total.denominator != 1:
        raise ArithmeticError(
            f"rising-factorial form gave non-integer {total} at k={k}, n={n}"
        )
    return total.numerator


def eval_binomial(k, n):
    """Binomial-coefficient form with the alternating inner sum inlined.

    The j! in front of C(n+j, j+1) cancels the 1/j! on the inner sum, so
    the whole computation stays in integers.
    """
    total = 0
    for j in range(k + 1):
        inner = 0
        for i in range(j + 1):
            term = comb(j, i) * i**k
            inner += -term if i & 1 else term
        total += comb(n + j, j + 1) * inner
    return -total if k & 1 else total


def eval_stirling(k, n, srow):
    """Alternating Stirling form: sum of (-1)**(k-j) * j! * S(k, j) * C(n+j, j+1).

    ``srow`` is row k of the Stirling triangle.
    """
    total = 0
    for j in range(k + 1):
        term = factorial(j) * srow[j] * comb(n + j, j + 1)
        total += -term if (k - j) & 1 else term
    return total


def eval_companion(k, n, srow):
    """Companion Stirling form: sum of j! * S(k, j) * C(n+1, j+1).

    Wrong at k = 0 (it gives n + 1 there); callers enforce k >= 1.
    """
    total = 0
    for j in range(k + 1):
        total += factorial(j) * srow[j] * comb(n + 1, j + 1)
    return total


def eval_factorized(k, n, srow):
    """Factorized form: n(n+1) times an alternating rational Stirling sum.

    Callers enforce k >= 1.  The product must reduce to an integer.
    """
    inner = Fraction(0)
    for j in range(1, k + 1):
        term = Fraction(factorial(j - 1) * srow[j] * comb(n + j, j - 1), j + 1)
        inner += -term if (k - j) & 1 else term
    total = n * (n + 1) * inner
    if total.denominator != 1:
        raise ArithmeticError(
            f"factorized form gave non-integer {total} at k={k}, n={n}"
        )
    return total.numerator
