# cython: language_level=3
"""Compiled backend for the integer inner loops.

Same contract as ``pykernels``: loop bookkeeping is compiled to C while
every value stays an arbitrary-precision Python object, so results are
bit-identical to the pure backend.
"""

from fractions import Fraction
from math import comb, factorial


def power_sum_naive(k, n):
    """Sum i**k for i = 1..n, term by term.  The empty sum (n = 0) is 0."""
    cdef Py_ssize_t i, nn = n
    total = 0
    for i in range(1, nn + 1):
        total += i**k
    return total


def stirling_rows(kmax):
    """Triangle of Stirling set numbers S(k, j) for 0 <= j <= k <= kmax.

    Built eagerly, row by row, from S(k, j) = j*S(k-1, j) + S(k-1, j-1).
    """
    cdef Py_ssize_t k, j, km = kmax
    cdef list rows = [[1]]
    cdef list prev, row
    for k in range(1, km + 1):
        prev = <list>rows[k - 1]
        row = [0] * (k + 1)
        for j in range(1, k):
            row[j] = j * <object>prev[j] + <object>prev[j - 1]
        row[k] = 1
        rows.append(row)
    return rows


def stirling_explicit_sum(k, j):
    """Alternating sum of (-1)**(j-i) * C(j, i) * i**k over i = 0..j.

    Equals j! * S(k, j); the caller performs (and checks) the division.
    The i = 0 term uses the 0**0 == 1 convention.
    """
    cdef Py_ssize_t i, jj = j
    total = 0
    for i in range(jj + 1):
        term = comb(jj, i) * i**k
        if (jj - i) & 1:
            total -= term
        else:
            total += term
    return total


def eval_samsonadze(k, n, coeffs):
    """Rising-factorial form: (-1)**k times the sum of coeffs[j] * n(n+1)...(n+j).

    ``coeffs`` holds exact rationals; the final value must reduce to an
    integer, anything else aborts loudly instead of rounding.
    """
    cdef Py_ssize_t j, kk = k
    total = Fraction(0)
    prod = n
    for j in range(kk + 1):
        if j:
            prod = prod * (n + j)
        total = total + coeffs[j] * prod
    if kk & 1:
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
    cdef Py_ssize_t i, j, kk = k
    total = 0
    for j in range(kk + 1):
        inner = 0
        for i in range(j + 1):
            term = comb(j, i) * i**k
            if i & 1:
                inner -= term
            else:
                inner += term
        total += comb(n + j, j + 1) * inner
    if kk & 1:
        return -total
    return total


def eval_stirling(k, n, srow):
    """Alternating Stirling form: sum of (-1)**(k-j) * j! * S(k, j) * C(n+j, j+1).

    ``srow`` is row k of the Stirling triangle.
    """
    cdef Py_ssize_t j, kk = k
    total = 0
    for j in range(kk + 1):
        term = factorial(j) * srow[j] * comb(n + j, j + 1)
        if (kk - j) & 1:
            total -= term
        else:
            total += term
    return total


def eval_companion(k, n, srow):
    """Companion Stirling form: sum of j! * S(k, j) * C(n+1, j+1).

    Wrong at k = 0 (it gives n + 1 there); callers enforce k >= 1.
    """
    cdef Py_ssize_t j, kk = k
    total = 0
    for j in range(kk + 1):
        total += factorial(j) * srow[j] * comb(n + 1, j + 1)
    return total


def eval_factorized(k, n, srow):
    """Factorized form: n(n+1) times an alternating rational Stirling sum.

    Callers enforce k >= 1.  The product must reduce to an integer.
    """
    cdef Py_ssize_t j, kk = k
    inner = Fraction(0)
    for j in range(1, kk + 1):
        term = Fraction(factorial(j - 1) * srow[j] * comb(n + j, j - 1), j + 1)
        if (kk - j) & 1:
            inner = inner - term
        else:
            inner = inner + term
    total = n * (n + 1) * inner
    if total.denominator != 1:
        raise ArithmeticError(
            f"factorized form gave non-integer {total} at k={k}, n={n}"
        )
    return total.numerator
