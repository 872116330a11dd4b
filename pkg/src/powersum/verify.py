"""Differential verification of every closed form and identity.

``verify_grid`` compares the five closed forms against the brute-force
oracle on an exhaustive (k, n) grid; ``verify_identities`` checks the
coefficient and Stirling two-route equalities, pairwise equality of the
symbolically assembled polynomials, the reflection symmetry, the
companion transform, and the pinned special coefficient values.

Reports collect every mismatch with a full witness instead of failing
fast, and both functions recompute the number of checks they were
supposed to run from the validity-domain rules, so silently skipped
cells cannot go unnoticed.

Fault injection (the ``inject_fault`` keyword) deliberately breaks one
route so tests can prove the harness detects disagreement.  It is a
test-only mode; the CLI never passes it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .combinatorics import (
    CoefficientRow,
    StirlingTable,
    coeff_row,
    coeff_via_stirling,
    stirling_explicit,
    stirling_table,
)
from .errors import check_ceiling, check_natural
from .evaluator import (
    CLOSED_FORMS,
    FormulaId,
    eval_binomial,
    eval_companion,
    eval_factorized,
    eval_samsonadze,
    eval_stirling,
    power_sum_naive,
)
from .polyalg import check_symmetry, check_transform_equivalence, powersum_poly

__all__ = [
    "Fault",
    "Mismatch",
    "VerificationReport",
    "merge_reports",
    "grid_checks_planned",
    "identity_checks_planned",
    "verify_grid",
    "verify_identities",
]


class Fault(Enum):
    """Deliberate bugs for harness self-tests.  Values name the target route."""

    SAMSONADZE_COEFF_SIGN = "samsonadze"  # linear coefficient with the wrong sign
    BINOMIAL_LOWER_INDEX = "binomial"     # C(n+j, j) in place of C(n+j, j+1)
    STIRLING_OFF_BY_ONE = "stirling"      # every S(k, j) with j >= 1 bumped by one
    COMPANION_SHIFT = "companion"         # C(n, j+1) in place of C(n+1, j+1)
    FACTORIZED_SIGN = "factorized"        # alternating sign flipped
    COEFF_VIA_STIRLING_SIGN = "coeff-sign"  # the (-1)**j factor dropped


_GRID_FAULTS = (
    Fault.SAMSONADZE_COEFF_SIGN,
    Fault.BINOMIAL_LOWER_INDEX,
    Fault.STIRLING_OFF_BY_ONE,
    Fault.COMPANION_SHIFT,
    Fault.FACTORIZED_SIGN,
)


@dataclass(frozen=True)
class Mismatch:
    """One counterexample witness.

    ``formula`` names the failing route for grid checks, or the identity
    label for coefficient/polynomial checks.  ``n`` is the grid point, the
    index j for coefficient-level checks, or None as the polynomial-level
    marker.  ``expected`` and ``actual`` are exact values of the same
    shape: integers, Fractions, or coefficient tuples.
    """

    formula: str
    k: int
    n: int | None
    expected: object
    actual: object


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification pass; passes iff ``mismatches`` is empty."""

    checks_run: int
    mismatches: tuple[Mismatch, ...]
    elapsed_ms: float

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _sort_key(m: Mismatch):
    return (m.formula, m.k, -1 if m.n is None else m.n)


def merge_reports(*reports: VerificationReport) -> VerificationReport:
    """Associative merge: counts and times add, witnesses re-sort into the
    canonical (formula, k, n) order, so merge order never shows."""
    mismatches = sorted((m for r in reports for m in r.mismatches), key=_sort_key)
    return VerificationReport(
        checks_run=sum(r.checks_run for r in reports),
        mismatches=tuple(mismatches),
        elapsed_ms=sum(r.elapsed_ms for r in reports),
    )


def grid_checks_planned(kmax: int, nmax: int) -> int:
    """How many (formula, k, n) cells verify_grid must visit."""
    routes = sum(
        sum(1 for f in CLOSED_FORMS if f.valid_for(k)) for k in range(kmax + 1)
    )
    return routes * (nmax + 1)


def identity_checks_planned(kmax: int) -> int:
    """How many identity checks verify_identities must make."""
    total = 0
    for k in range(kmax + 1):
        routes = sum(1 for f in CLOSED_FORMS if f.valid_for(k))
        total += 2 * (k + 1)                 # coefficient + Stirling two-route checks
        total += routes * (routes - 1) // 2  # pairwise polynomial equality
        if k >= 1:
            total += 2                       # symmetry + companion transform
        total += 3 if k >= 1 else 1          # pinned special values
    return total


def _flip_linear_coeff(row: CoefficientRow) -> CoefficientRow:
    coeffs = list(row.coefficients)
    target = 1 if row.k >= 1 else 0
    coeffs[target] = -coeffs[target]
    return CoefficientRow(row.k, tuple(coeffs))


def _bump_entries(table: StirlingTable) -> StirlingTable:
    rows = [
        [entry + 1 if j else entry for j, entry in enumerate(row)]
        for row in table.rows
    ]
    return StirlingTable(rows)


def _binomial_lower_index(k, n):
    total = 0
    for j in range(k + 1):
        inner = 0
        for i in range(j + 1):
            term = comb(j, i) * i**k
            inner += -term if i & 1 else term
        total += comb(n + j, j) * inner
    return -total if k & 1 else total


def _companion_shift(k, n, srow):
    total = 0
    for j in range(k + 1):
        total += factorial(j) * srow[j] * comb(n, j + 1)
    return total


def _factorized_sign(k, n, srow):
    inner = Fraction(0)
    for j in range(1, k + 1):
        term = Fraction(factorial(j - 1) * srow[j] * comb(n + j, j - 1), j + 1)
        inner += term if (k - j) & 1 else -term
    return (n * (n + 1) * inner).numerator


def verify_grid(
    kmax: int, nmax: int, *, inject_fault: Fault | None = None
) -> VerificationReport:
    """Compare every closed form against the oracle for 0 <= k <= kmax,
    0 <= n <= nmax, each route only within its validity domain.

    Iteration is k outer, n inner; the returned witnesses are sorted by
    (formula, k, n) regardless.
    """
    check_natural("kmax", kmax)
    check_natural("nmax", nmax)
    check_ceiling(kmax)
    if inject_fault is not None and inject_fault not in _GRID_FAULTS:
        raise ValueError(f"{inject_fault} does not target a grid route")
    start = time.perf_counter()

    table = stirling_table(kmax)
    stirling_input = (
        _bump_entries(table) if inject_fault is Fault.STIRLING_OFF_BY_ONE else table
    )

    mismatches = []
    checks = 0
    for k in range(kmax + 1):
        row = coeff_row(k)
        if inject_fault is Fault.SAMSONADZE_COEFF_SIGN:
            row = _flip_linear_coeff(row)

        routes = [
            (FormulaId.SAMSONADZE, lambda n, k=k, row=row: eval_samsonadze(k, n, row)),
        ]
        if inject_fault is Fault.BINOMIAL_LOWER_INDEX:
            routes.append((FormulaId.BINOMIAL, lambda n, k=k: _binomial_lower_index(k, n)))
        else:
            routes.append((FormulaId.BINOMIAL, lambda n, k=k: eval_binomial(k, n)))
        routes.append(
            (FormulaId.STIRLING, lambda n, k=k: eval_stirling(k, n, stirling_input))
        )
        if k >= 1:
            if inject_fault is Fault.COMPANION_SHIFT:
                srow = table.row(k)
                routes.append(
                    (FormulaId.COMPANION, lambda n, k=k, srow=srow: _companion_shift(k, n, srow))
                )
            else:
                routes.append(
                    (FormulaId.COMPANION, lambda n, k=k: eval_companion(k, n, table))
                )
            if inject_fault is Fault.FACTORIZED_SIGN:
                srow = table.row(k)
                routes.append(
                    (FormulaId.FACTORIZED, lambda n, k=k, srow=srow: _factorized_sign(k, n, srow))
                )
            else:
                routes.append(
                    (FormulaId.FACTORIZED, lambda n, k=k: eval_factorized(k, n, table))
                )

        for n in range(nmax + 1):
            expected = power_sum_naive(k, n)
            for formula, route in routes:
                checks += 1
                actual = route(n)
                if actual != expected:
                    mismatches.append(Mismatch(formula.value, k, n, expected, actual))

    planned = grid_checks_planned(kmax, nmax)
    if checks != planned:
        raise RuntimeError(f"visited {checks} grid cells but planned {planned}")
    mismatches.sort(key=_sort_key)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(checks, tuple(mismatches), elapsed_ms)


def verify_identities(
    kmax: int, *, inject_fault: Fault | None = None
) -> VerificationReport:
    """Exact identity checks for every k <= kmax.

    Per k: coefficient routes agree at every j; explicit and recurrence
    Stirling numbers agree at every j; all applicable power-sum
    polynomials are coefficient-identical pairwise; for k >= 1 the
    reflection symmetry and the companion transform hold; and the pinned
    coefficient values (top, linear, constant) come out right.
    """
    check_natural("kmax", kmax)
    check_ceiling(kmax)
    if inject_fault is not None and inject_fault is not Fault.COEFF_VIA_STIRLING_SIGN:
        raise ValueError(f"{inject_fault} does not target an identity check")
    start = time.perf_counter()

    table = stirling_table(kmax)
    mismatches = []
    checks = 0
    for k in range(kmax + 1):
        row = coeff_row(k)

        for j in range(k + 1):
            checks += 1
            if inject_fault is Fault.COEFF_VIA_STIRLING_SIGN:
                via = Fraction(table.entry(k, j), j + 1)
            else:
                via = coeff_via_stirling(k, j, table)
            if row[j] != via:
                mismatches.append(Mismatch("coeff-routes", k, j, row[j], via))

        for j in range(k + 1):
            checks += 1
            explicit = stirling_explicit(k, j)
            entry = table.entry(k, j)
            if explicit != entry:
                mismatches.append(Mismatch("stirling-routes", k, j, entry, explicit))

        routes = [f for f in CLOSED_FORMS if f.valid_for(k)]
        polys = {f: powersum_poly(k, f) for f in routes}
        for fa, fb in combinations(routes, 2):
            checks += 1
            if polys[fa] != polys[fb]:
                mismatches.append(
                    Mismatch(
                        f"poly:{fa.value}~{fb.value}",
                        k,
                        None,
                        polys[fa].coefficients,
                        polys[fb].coefficients,
                    )
                )

        if k >= 1:
            sign = 1 if k & 1 else -1
            checks += 1
            if not check_symmetry(k):
                p = polys[FormulaId.STIRLING]
                mismatches.append(
                    Mismatch(
                        "symmetry",
                        k,
                        None,
                        (p * sign).coefficients,
                        p.reflect().coefficients,
                    )
                )
            checks += 1
            if not check_transform_equivalence(k):
                mismatches.append(
                    Mismatch(
                        "transform-equivalence",
                        k,
                        None,
                        polys[FormulaId.STIRLING].coefficients,
                        (polys[FormulaId.COMPANION].reflect() * sign).coefficients,
                    )
                )

        top = Fraction(-1 if k & 1 else 1, k + 1)
        checks += 1
        if row[k] != top:
            mismatches.append(Mismatch("special-values", k, k, top, row[k]))
        if k >= 1:
            checks += 1
            if row[1] != Fraction(-1, 2):
                mismatches.append(Mismatch("special-values", k, 1, Fraction(-1, 2), row[1]))
            checks += 1
            if row[0] != 0:
                mismatches.append(Mismatch("special-values", k, 0, Fraction(0), row[0]))

    planned = identity_checks_planned(kmax)
    if checks != planned:
        raise RuntimeError(f"ran {checks} identity checks but planned {planned}")
    mismatches.sort(key=_sort_key)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(checks, tuple(mismatches), elapsed_ms)
