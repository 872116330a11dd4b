"""Dense exact-rational polynomials in one indeterminate, and the power-sum
polynomial assembled symbolically from each closed form.

A polynomial is a trimmed tuple of Fractions, lowest degree first; the
empty tuple is the zero polynomial, whose degree is reported as None
rather than an ordinary number.  Degrees stay around 31 at the scales
this library targets, so the dense representation is the right one.

Binomial coefficients with a symbolic upper argument are taken in their
polynomial reading, C(x + shift, m) = (x+shift)(x+shift-1)...(x+shift-m+1)/m!,
which is what makes the x -> -x-1 substitution meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from math import comb, factorial

from .combinatorics import coeff_row, stirling_table
from .errors import DomainError, check_natural
from .evaluator import FormulaId

__all__ = [
    "Polynomial",
    "X",
    "rising_factorial",
    "binomial_poly",
    "powersum_poly",
    "check_symmetry",
    "check_transform_equivalence",
]

_ZERO = Fraction(0)


class Polynomial:
    """Immutable dense polynomial over exact rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """All coefficients, lowest degree first, trailing zeros trimmed."""
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, d: int) -> Fraction:
        """Coefficient of x**d (zero beyond the stored degree)."""
        if d < 0:
            raise ValueError(f"degree index must be >= 0, got {d}")
        return self._coeffs[d] if d < len(self._coeffs) else _ZERO

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(
            a + b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=_ZERO)
        )

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        """Exact Horner evaluation at a rational (or integer) point."""
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "Polynomial":
        """The substitution x -> -x-1, computed by Horner in polynomial arithmetic.

        An involution: reflecting twice gives back the original polynomial.
        """
        acc = Polynomial()
        flip = Polynomial((-1, -1))
        for c in reversed(self._coeffs):
            acc = acc * flip + Polynomial((c,))
        return acc

    def divexact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self / divisor.

        Long division that refuses to return anything when the remainder
        is nonzero; a quotient-remainder pair is never produced.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        rem = list(self._coeffs)
        dcoeffs = divisor._coeffs
        dlead = dcoeffs[-1]
        ddeg = len(dcoeffs) - 1
        qdeg = len(rem) - 1 - ddeg
        if qdeg < 0:
            raise ArithmeticError(
                f"{self!r} is not divisible by {divisor!r} (degree too small)"
            )
        quot = [_ZERO] * (qdeg + 1)
        for d in range(qdeg, -1, -1):
            c = rem[d + ddeg] / dlead
            quot[d] = c
            if c:
                for i, dc in enumerate(dcoeffs):
                    rem[d + i] -= c * dc
        if any(rem):
            raise ArithmeticError(f"{self!r} is not divisible by {divisor!r}")
        return Polynomial(quot)

    def __repr__(self):
        inner = ", ".join(str(c) for c in self._coeffs)
        return f"Polynomial([{inner}])"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self._coeffs):
            if not c:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{d}")
        return " + ".join(parts).replace("+ -", "- ")


#: The indeterminate itself.
X = Polynomial((0, 1))


def rising_factorial(j: int) -> Polynomial:
    """The ascending product x(x+1)...(x+j): j+1 factors, monic, degree j+1."""
    check_natural("j", j)
    p = X
    for i in range(1, j + 1):
        p *= Polynomial((i, 1))
    return p


def binomial_poly(shift: int, m: int) -> Polynomial:
    """The degree-m polynomial C(x + shift, m); the constant 1 when m = 0."""
    check_natural("shift", shift)
    check_natural("m", m)
    p = Polynomial((1,))
    for i in range(m):
        p *= Polynomial((shift - i, 1))
    return p * Fraction(1, factorial(m))


def _poly_samsonadze(k):
    row = coeff_row(k)
    total = Polynomial()
    for j, a in enumerate(row):
        total += rising_factorial(j) * a
    return -total if k & 1 else total


def _poly_binomial(k):
    # The j! in front of C(x+j, j+1) cancels the 1/j! on the inner sum.
    total = Polynomial()
    for j in range(k + 1):
        inner = 0
        for i in range(j + 1):
            term = comb(j, i) * i**k
            inner += -term if i & 1 else term
        total += binomial_poly(j, j + 1) * inner
    return -total if k & 1 else total


def _poly_stirling(k):
    srow = stirling_table(k).row(k)
    total = Polynomial()
    for j in range(k + 1):
        term = binomial_poly(j, j + 1) * (factorial(j) * srow[j])
        total = total - term if (k - j) & 1 else total + term
    return total


def _poly_companion(k):
    srow = stirling_table(k).row(k)
    total = Polynomial()
    for j in range(k + 1):
        total += binomial_poly(1, j + 1) * (factorial(j) * srow[j])
    return total


def _poly_factorized(k):
    srow = stirling_table(k).row(k)
    inner = Polynomial()
    for j in range(1, k + 1):
        term = binomial_poly(j, j - 1) * Fraction(factorial(j - 1) * srow[j], j + 1)
        inner = inner - term if (k - j) & 1 else inner + term
    return Polynomial((0, 1, 1)) * inner  # x^2 + x, i.e. twice the k=1 sum


_POLY_BUILDERS = {
    FormulaId.SAMSONADZE: _poly_samsonadze,
    FormulaId.BINOMIAL: _poly_binomial,
    FormulaId.STIRLING: _poly_stirling,
    FormulaId.COMPANION: _poly_companion,
    FormulaId.FACTORIZED: _poly_factorized,
}


def powersum_poly(k: int, formula: FormulaId | str) -> Polynomial:
    """The power-sum polynomial in n, assembled symbolically from one route.

    Degree k+1, zero constant term, leading coefficient 1/(k+1), and
    value 1 at x = 1, whichever route builds it.
    """
    check_natural("k", k)
    formula = FormulaId(formula)
    if formula is FormulaId.NAIVE:
        raise ValueError("the naive route evaluates pointwise; it has no symbolic form")
    if not formula.valid_for(k):
        raise DomainError(
            f"{formula.value} is not defined for k={k} (needs k >= {formula.min_k})"
        )
    return _POLY_BUILDERS[formula](k)


def check_symmetry(k: int) -> bool:
    """True iff p(-x-1) == (-1)**(k+1) * p(x) for the power-sum polynomial.

    Only meaningful for k >= 1; at k = 0 the polynomial is x, which the
    substitution sends to -x-1, not -x.
    """
    check_natural("k", k)
    if k == 0:
        raise DomainError("the reflection symmetry fails at k = 0")
    p = powersum_poly(k, FormulaId.STIRLING)
    sign = 1 if k & 1 else -1
    return p.reflect() == p * sign


def check_transform_equivalence(k: int) -> bool:
    """True iff the x -> -x-1 substitution carries the companion form onto
    the alternating Stirling form:

        (-1)**(k+1) * companion_poly(-x-1) == stirling_poly(x)

    i.e. the derivation of one formula from the other, done mechanically.
    """
    check_natural("k", k)
    if k == 0:
        raise DomainError("the companion form (and hence the transform) needs k >= 1")
    companion = powersum_poly(k, FormulaId.COMPANION)
    alternating = powersum_poly(k, FormulaId.STIRLING)
    sign = 1 if k & 1 else -1
    return companion.reflect() * sign == alternating
