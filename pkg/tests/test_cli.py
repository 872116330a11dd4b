import json
from fractions import Fraction

import pytest

from powersum import cli
from powersum.combinatorics import coeff_row, stirling_table
from powersum.evaluator import FormulaId, evaluate
from powersum.polyalg import powersum_poly
from powersum.verify import Mismatch, VerificationReport


def invoke(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStirlingCommand:
    def test_plain_triangle(self, capsys):
        code, out, _ = invoke(capsys, "stirling", "--kmax", "2")
        assert code == 0
        assert out.splitlines() == ["1", "0 1", "0 1 1"]

    def test_json_base_case(self, capsys):
        code, out, _ = invoke(capsys, "--format", "json", "stirling", "--kmax", "0")
        assert code == 0
        assert json.loads(out) == {"kmax": 0, "rows": [["1"]]}

    def test_csv_row_k4(self, capsys):
        code, out, _ = invoke(capsys, "--format", "csv", "stirling", "--kmax", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("k,")
        assert lines[5] == "4,0,1,7,6,1"

    def test_json_round_trip(self, capsys):
        _, out, _ = invoke(capsys, "--format", "json", "stirling", "--kmax", "6")
        payload = json.loads(out)
        table = stirling_table(6)
        parsed = tuple(tuple(int(e) for e in row) for row in payload["rows"])
        assert parsed == table.rows


class TestCoeffsCommand:
    def test_plain_k2(self, capsys):
        code, out, _ = invoke(capsys, "coeffs", "--k", "2")
        assert code == 0
        assert out.strip() == "0 -1/2 1/3"

    def test_json_k0(self, capsys):
        _, out, _ = invoke(capsys, "--format", "json", "coeffs", "--k", "0")
        assert json.loads(out) == {"k": 0, "a": ["1"]}

    def test_latex_k3(self, capsys):
        _, out, _ = invoke(capsys, "--format", "latex", "coeffs", "--k", "3")
        assert "-\\frac{1}{4}" in out
        assert "-\\frac{1}{2}" in out

    def test_json_round_trip(self, capsys):
        _, out, _ = invoke(capsys, "--format", "json", "coeffs", "--k", "7")
        payload = json.loads(out)
        parsed = tuple(Fraction(a) for a in payload["a"])
        assert parsed == coeff_row(7).coefficients


class TestEvalCommand:
    def test_all_routes_agree(self, capsys):
        code, out, _ = invoke(capsys, "eval", "--k", "2", "--n", "3", "--formula", "all")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6  # five closed forms plus the agreement flag
        assert all(line.endswith(" 14") for line in lines[:5])
        assert lines[5] == "agreement: true"

    def test_all_json_round_trip(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "eval", "--k", "2", "--n", "3",
            "--formula", "all",
        )
        payload = json.loads(out)
        assert payload["agreement"] is True
        assert len(payload["results"]) == 5
        for item in payload["results"]:
            assert int(item["value"]) == evaluate(item["formula"], 2, 3).value

    def test_all_at_k0_has_three_routes(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "eval", "--k", "0", "--n", "9",
            "--formula", "all",
        )
        payload = json.loads(out)
        assert [r["formula"] for r in payload["results"]] == [
            "samsonadze", "binomial", "stirling",
        ]
        assert payload["agreement"] is True

    def test_naive_json(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "eval", "--k", "3", "--n", "3",
            "--formula", "naive",
        )
        assert json.loads(out) == {"k": 3, "n": 3, "formula": "naive", "value": "36"}

    def test_plain_single_value(self, capsys):
        code, out, _ = invoke(
            capsys, "eval", "--k", "3", "--n", "3", "--formula", "stirling"
        )
        assert code == 0
        assert out.strip() == "36"

    def test_domain_violation_exit_code(self, capsys):
        code, _, err = invoke(
            capsys, "eval", "--k", "0", "--n", "5", "--formula", "companion"
        )
        assert code == 3
        assert "companion" in err

    def test_format_after_subcommand(self, capsys):
        code, out, _ = invoke(
            capsys, "eval", "--k", "2", "--n", "3", "--formula", "naive",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == "14"


class TestPolyCommand:
    def test_plain_k2(self, capsys):
        code, out, _ = invoke(capsys, "poly", "--k", "2", "--formula", "stirling")
        assert code == 0
        assert out.strip() == "0 1/6 1/2 1/3"

    def test_plain_k0(self, capsys):
        _, out, _ = invoke(capsys, "poly", "--k", "0", "--formula", "stirling")
        assert out.strip() == "0 1"

    def test_json_k1_companion(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "poly", "--k", "1", "--formula", "companion"
        )
        payload = json.loads(out)
        assert payload["k"] == 1
        assert payload["formula"] == "companion"
        assert payload["coeffs"] == ["0", "1/2", "1/2"]

    def test_json_round_trip(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "poly", "--k", "5", "--formula", "factorized"
        )
        payload = json.loads(out)
        parsed = tuple(Fraction(c) for c in payload["coeffs"])
        assert parsed == powersum_poly(5, FormulaId.FACTORIZED).coefficients

    def test_naive_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "poly", "--k", "2", "--formula", "naive")
        assert code == 2

    def test_domain_violation(self, capsys):
        code, _, _ = invoke(capsys, "poly", "--k", "0", "--formula", "companion")
        assert code == 3


class TestVerifyCommand:
    def test_clean_run(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--kmax", "3", "--nmax", "10")
        assert code == 0
        assert "mismatches: 0" in out
        assert "pass: true" in out

    def test_kmax0(self, capsys):
        code, _, _ = invoke(capsys, "verify", "--kmax", "0", "--nmax", "0")
        assert code == 0

    def test_json_schema(self, capsys):
        _, out, _ = invoke(
            capsys, "--format", "json", "verify", "--kmax", "2", "--nmax", "5"
        )
        payload = json.loads(out)
        assert isinstance(payload["checks_run"], int)
        assert payload["mismatches"] == []
        assert payload["pass"] is True

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        # No public input can make the identities fail, so simulate a
        # broken route to pin the exit-code mapping.
        report = VerificationReport(
            checks_run=10,
            mismatches=(Mismatch("stirling", 2, 3, 14, 15),),
            elapsed_ms=1.0,
        )
        monkeypatch.setattr(cli, "verify_grid", lambda kmax, nmax: report)
        code, out, _ = invoke(capsys, "verify", "--kmax", "2", "--nmax", "3")
        assert code == 1
        assert "mismatches: 1" in out

    def test_mismatch_json_witness(self, capsys, monkeypatch):
        report = VerificationReport(
            checks_run=10,
            mismatches=(Mismatch("poly:stirling~companion", 2, None, (0,), (1,)),),
            elapsed_ms=1.0,
        )
        monkeypatch.setattr(cli, "verify_grid", lambda kmax, nmax: report)
        code, out, _ = invoke(
            capsys, "--format", "json", "verify", "--kmax", "2", "--nmax", "3"
        )
        assert code == 1
        witness = json.loads(out)["mismatches"][0]
        assert witness["n"] is None
        assert witness["expected"] == ["0"]


class TestExitCodes:
    def test_usage_error_missing_flag(self, capsys):
        code, _, _ = invoke(capsys, "stirling")
        assert code == 2

    def test_usage_error_negative(self, capsys):
        code, _, _ = invoke(capsys, "stirling", "--kmax", "-3")
        assert code == 2

    def test_usage_error_unknown_formula(self, capsys):
        code, _, _ = invoke(capsys, "eval", "--k", "1", "--n", "1", "--formula", "magic")
        assert code == 2

    def test_ceiling_exit_code(self, capsys):
        code, _, err = invoke(capsys, "stirling", "--kmax", "1001")
        assert code == 4
        assert "ceiling" in err

    def test_env_ceiling_enforced(self, capsys, monkeypatch):
        monkeypatch.setenv("POWERSUM_CEILING", "50")
        code, _, _ = invoke(capsys, "stirling", "--kmax", "60")
        assert code == 4
        code, _, _ = invoke(capsys, "stirling", "--kmax", "50")
        assert code == 0

    def test_env_ceiling_rejected(self, capsys, monkeypatch):
        monkeypatch.setenv("POWERSUM_CEILING", "20000")
        code, _, err = invoke(capsys, "stirling", "--kmax", "2")
        assert code == 2
        assert "POWERSUM_CEILING" in err
        monkeypatch.setenv("POWERSUM_CEILING", "many")
        code, _, _ = invoke(capsys, "stirling", "--kmax", "2")
        assert code == 2
