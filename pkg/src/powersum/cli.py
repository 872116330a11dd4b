"""Command-line frontend.

Subcommands: ``stirling``, ``coeffs``, ``eval``, ``poly``, ``verify``;
output formats: plain, json, csv, latex.  Payload goes to stdout,
diagnostics to stderr.

Big integers and rationals are rendered as strings in json and csv
("123...", "p/q" with q > 0 and gcd(p, q) = 1), never as native numbers,
so 64-bit consumers cannot lose precision.  Grid parameters (k, n, kmax,
checks_run) are small and stay native.

Exit codes: 0 success / all checks passed, 1 verification mismatch,
2 usage error, 3 domain violation, 4 resource ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .combinatorics import CoefficientRow, StirlingTable, coeff_row, stirling_table
from .errors import CeilingError, DomainError, effective_ceiling
from .evaluator import CLOSED_FORMS, FormulaId, evaluate, power_sum_naive
from .polyalg import Polynomial, powersum_poly
from .verify import VerificationReport, merge_reports, verify_grid, verify_identities

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CEILING = 4

FORMATS = ("plain", "json", "csv", "latex")


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersum",
        description="Exact power sums 1^k + 2^k + ... + n^k: Stirling triangles, "
        "coefficient rows, five closed-form evaluation routes, symbolic "
        "polynomials, and differential verification.",
    )
    parser.add_argument(
        "--format", choices=FORMATS, default=None, help="output format (default plain)"
    )

    # Also accepted after the subcommand; SUPPRESS keeps a missing
    # subcommand-level flag from clobbering the global one.
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=FORMATS, default=argparse.SUPPRESS,
        help="output format (default plain)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stirling", parents=[fmt], help="Stirling second-kind triangle")
    p.add_argument("--kmax", type=_natural, required=True, help="largest row to print")

    p = sub.add_parser("coeffs", parents=[fmt], help="coefficient row a(k, 0..k)")
    p.add_argument("--k", type=_natural, required=True, help="exponent k")

    p = sub.add_parser("eval", parents=[fmt], help="evaluate the power sum at a point")
    p.add_argument("--k", type=_natural, required=True, help="exponent k")
    p.add_argument("--n", type=_natural, required=True, help="upper limit n")
    p.add_argument(
        "--formula",
        required=True,
        choices=[f.value for f in FormulaId] + ["all"],
        help="evaluation route, or 'all' for every closed form valid at k",
    )

    p = sub.add_parser("poly", parents=[fmt], help="power-sum polynomial for one route")
    p.add_argument("--k", type=_natural, required=True, help="exponent k")
    p.add_argument(
        "--formula",
        required=True,
        choices=[f.value for f in FormulaId if f is not FormulaId.NAIVE],
        help="closed form used to assemble the polynomial",
    )

    p = sub.add_parser("verify", parents=[fmt], help="differential + identity checks")
    p.add_argument("--kmax", type=_natural, required=True, help="largest exponent")
    p.add_argument("--nmax", type=_natural, required=True, help="largest grid point")

    return parser


def _latex_frac(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _latex_poly(poly: Polynomial) -> str:
    parts = []
    for d, c in enumerate(poly.coefficients):
        if not c:
            continue
        coeff = _latex_frac(abs(c))
        power = "" if d == 0 else (" x" if d == 1 else f" x^{{{d}}}")
        if coeff == "1" and power:
            coeff = ""
        term = f"{coeff}{power}".strip()
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    return " ".join(parts) if parts else "0"


def render_stirling(table: StirlingTable, fmt: str) -> str:
    rows = table.rows
    if fmt == "plain":
        return "\n".join(" ".join(str(e) for e in row) for row in rows)
    if fmt == "json":
        payload = {"kmax": table.kmax, "rows": [[str(e) for e in row] for row in rows]}
        return json.dumps(payload)
    if fmt == "csv":
        width = table.kmax + 1
        lines = ["k," + ",".join(f"j{j}" for j in range(width))]
        for k, row in enumerate(rows):
            cells = [str(k)] + [str(e) for e in row] + [""] * (width - len(row))
            lines.append(",".join(cells))
        return "\n".join(lines)
    lines = [f"\\begin{{tabular}}{{{'r' * (table.kmax + 1)}}}"]
    for row in rows:
        lines.append(" & ".join(str(e) for e in row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render_coeffs(row: CoefficientRow, fmt: str) -> str:
    values = row.coefficients
    if fmt == "plain":
        return " ".join(str(c) for c in values)
    if fmt == "json":
        return json.dumps({"k": row.k, "a": [str(c) for c in values]})
    if fmt == "csv":
        header = "k," + ",".join(f"a{j}" for j in range(len(values)))
        return header + "\n" + ",".join([str(row.k)] + [str(c) for c in values])
    body = " & ".join(_latex_frac(c) for c in values)
    return (
        f"\\begin{{tabular}}{{{'r' * len(values)}}}\n{body} \\\\\n\\end{{tabular}}"
    )


def render_eval_single(k: int, n: int, formula: FormulaId, value: int, fmt: str) -> str:
    if fmt == "plain":
        return str(value)
    if fmt == "json":
        return json.dumps({"k": k, "n": n, "formula": formula.value, "value": str(value)})
    if fmt == "csv":
        return "k,n,formula,value\n" + f"{k},{n},{formula.value},{value}"
    return f"$S_{{{k}}}({n}) = {value}$"


def render_eval_all(k, n, results, agreement, fmt):
    flag = "true" if agreement else "false"
    if fmt == "plain":
        lines = [f"{f.value} {v}" for f, v in results]
        lines.append(f"agreement: {flag}")
        return "\n".join(lines)
    if fmt == "json":
        payload = {
            "k": k,
            "n": n,
            "results": [{"formula": f.value, "value": str(v)} for f, v in results],
            "agreement": agreement,
        }
        return json.dumps(payload)
    if fmt == "csv":
        lines = ["k,n,formula,value,agreement"]
        for f, v in results:
            lines.append(f"{k},{n},{f.value},{v},{flag}")
        return "\n".join(lines)
    lines = ["\\begin{tabular}{lr}"]
    for f, v in results:
        lines.append(f"{f.value} & {v} \\\\")
    lines.append(f"agreement & {flag} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render_poly(k: int, formula: FormulaId, poly: Polynomial, fmt: str) -> str:
    coeffs = poly.coefficients
    if fmt == "plain":
        return " ".join(str(c) for c in coeffs)
    if fmt == "json":
        payload = {"k": k, "formula": formula.value, "coeffs": [str(c) for c in coeffs]}
        return json.dumps(payload)
    if fmt == "csv":
        header = "k,formula," + ",".join(f"c{d}" for d in range(len(coeffs)))
        row = ",".join([str(k), formula.value] + [str(c) for c in coeffs])
        return header + "\n" + row
    return f"$S_{{{k}}}(x) = {_latex_poly(poly)}$"


def _witness_value(value):
    if isinstance(value, (tuple, list)):
        return [str(v) for v in value]
    return str(value)


def render_report(report: VerificationReport, fmt: str) -> str:
    ok = report.ok
    if fmt == "plain":
        lines = [
            f"checks run: {report.checks_run}",
            f"mismatches: {len(report.mismatches)}",
            f"pass: {'true' if ok else 'false'}",
            f"elapsed ms: {report.elapsed_ms:.1f}",
        ]
        for m in report.mismatches:
            where = "poly" if m.n is None else m.n
            lines.append(
                f"MISMATCH formula={m.formula} k={m.k} n={where} "
                f"expected={m.expected} actual={m.actual}"
            )
        return "\n".join(lines)
    if fmt == "json":
        payload = {
            "checks_run": report.checks_run,
            "mismatches": [
                {
                    "formula": m.formula,
                    "k": m.k,
                    "n": m.n,
                    "expected": _witness_value(m.expected),
                    "actual": _witness_value(m.actual),
                }
                for m in report.mismatches
            ],
            "pass": ok,
            "elapsed_ms": report.elapsed_ms,
        }
        return json.dumps(payload)
    if fmt == "csv":
        return (
            "checks_run,mismatch_count,pass,elapsed_ms\n"
            f"{report.checks_run},{len(report.mismatches)},"
            f"{'true' if ok else 'false'},{report.elapsed_ms:.1f}"
        )
    return (
        "\\begin{tabular}{lr}\n"
        f"checks run & {report.checks_run} \\\\\n"
        f"mismatches & {len(report.mismatches)} \\\\\n"
        f"pass & {'true' if ok else 'false'} \\\\\n"
        "\\end{tabular}"
    )


def _cmd_eval(args, fmt: str) -> str:
    k, n = args.k, args.n
    if args.formula == "all":
        formulas = [f for f in CLOSED_FORMS if f.valid_for(k)]
        results = [(f, evaluate(f, k, n).value) for f in formulas]
        oracle = power_sum_naive(k, n)
        agreement = all(v == oracle for _, v in results)
        return render_eval_all(k, n, results, agreement, fmt)
    formula = FormulaId(args.formula)
    value = evaluate(formula, k, n).value
    return render_eval_single(k, n, formula, value, fmt)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", None) or "plain"

    try:
        effective_ceiling()  # fail fast on a malformed override
    except ValueError as exc:
        print(f"powersum: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "stirling":
            out = render_stirling(stirling_table(args.kmax), fmt)
        elif args.command == "coeffs":
            out = render_coeffs(coeff_row(args.k), fmt)
        elif args.command == "eval":
            out = _cmd_eval(args, fmt)
        elif args.command == "poly":
            formula = FormulaId(args.formula)
            out = render_poly(args.k, formula, powersum_poly(args.k, formula), fmt)
        else:
            report = merge_reports(
                verify_grid(args.kmax, args.nmax), verify_identities(args.kmax)
            )
            print(render_report(report, fmt))
            return EXIT_OK if report.ok else EXIT_MISMATCH
    except CeilingError as exc:
        print(f"powersum: {exc}", file=sys.stderr)
        return EXIT_CEILING
    except DomainError as exc:
        print(f"powersum: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
