"""End-to-end tests of the command-line interface.

Everything runs in-process through ``main(argv)`` so exit codes, stdout and
stderr can be asserted exactly; one subprocess smoke test covers the
installed console script.  The JSON forms are round-tripped through the
library parsers to keep the documented schemas honest.
"""

import json
import shutil
import subprocess

import pytest

from stackbrauer.abelian import IntegerMatrix
from stackbrauer.cli import main, parse_matrix
from stackbrauer.covers import AdmissibleDatum, sector_report
from stackbrauer.rootdata import SemisimpleGroupSpec


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestMatrixLiteral:
    def test_parse_matrix(self):
        assert parse_matrix("2,-1;-1,2") == IntegerMatrix([[2, -1], [-1, 2]])
        assert parse_matrix(" 1 , 0 ; 0 , 1 ") == IntegerMatrix.identity(2)

    def test_parse_matrix_rejects_bad_literals(self):
        from stackbrauer.cli import UsageError

        with pytest.raises(UsageError):
            parse_matrix("1,2;3")  # ragged
        with pytest.raises(UsageError):
            parse_matrix("1,x")


class TestSnfCommand:
    def test_table_output(self, capsys):
        code, out, err = run_cli(capsys, "snf", "2,-1;-1,2")
        assert code == 0 and err == ""
        assert "d = [1, 3]" in out
        assert "U =" in out and "V =" in out

    def test_json_output_reconstructs(self, capsys):
        code, out, _ = run_cli(capsys, "snf", "6,4;4,8", "--json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"d", "U", "V"}
        a = IntegerMatrix([[6, 4], [4, 8]])
        u = IntegerMatrix(doc["U"])
        v = IntegerMatrix(doc["V"])
        product = u @ a @ v
        assert product == IntegerMatrix.diagonal(doc["d"])
        assert doc["d"] == [2, 16]

    def test_bad_literal_exits_2(self, capsys):
        code, out, err = run_cli(capsys, "snf", "1,2;3")
        assert code == 2 and out == ""
        assert "error:" in err


class TestBrBgCommand:
    def test_adjoint_default(self, capsys):
        code, out, _ = run_cli(capsys, "br-bg", "--type", "A1")
        assert code == 0 and out.strip() == "Z/2"

    def test_trivial_center(self, capsys):
        code, out, _ = run_cli(capsys, "br-bg", "--type", "A1", "--center", "trivial")
        assert code == 0 and out.strip() == "trivial"

    def test_generator_literal(self, capsys):
        code, out, _ = run_cli(capsys, "br-bg", "--type", "A3", "--center", "gens=2")
        assert code == 0 and out.strip() == "Z/2"

    def test_multi_factor(self, capsys):
        code, out, _ = run_cli(capsys, "br-bg", "--type", "A1,A1")
        assert code == 0 and out.strip() == "Z/2 x Z/2"

    def test_spec_json(self, capsys):
        spec = '{"factors": ["A3"], "central_generators": [[2]]}'
        code, out, _ = run_cli(capsys, "br-bg", "--spec", spec)
        assert code == 0 and out.strip() == "Z/2"

    def test_json_output_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "br-bg", "--type", "A3,D4", "--json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"factors", "central_generators", "fundamental_group", "brauer_group"}
        again = SemisimpleGroupSpec.from_json(doc)
        assert [str(t) for t in again.factors] == ["A3", "D4"]
        assert doc["fundamental_group"] == doc["brauer_group"] == [2, 2, 4]

    def test_spec_and_type_conflict(self, capsys):
        code, _, err = run_cli(capsys, "br-bg", "--type", "A1", "--spec", "{}")
        assert code == 2 and "do not combine" in err

    def test_missing_type_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "br-bg")
        assert code == 2 and "error:" in err

    def test_bad_type_and_bad_center(self, capsys):
        assert run_cli(capsys, "br-bg", "--type", "Q5")[0] == 2
        assert run_cli(capsys, "br-bg", "--type", "A1", "--center", "half")[0] == 2
        assert run_cli(capsys, "br-bg", "--spec", "not json")[0] == 2

    def test_generator_arity_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "br-bg", "--type", "A1", "--center", "gens=1,0")
        assert code == 2 and "error:" in err


class TestEnumerateCommand:
    def test_table_output(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--g", "2", "--N", "2")
        assert code == 0
        assert out.splitlines() == ["(g'=0, N=2, d=[6])", "(g'=1, N=2, d=[2])"]

    def test_quotient_genus_filter(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--g", "2", "--N", "2", "--gq", "0")
        assert code == 0
        assert out.splitlines() == ["(g'=0, N=2, d=[6])"]

    def test_json_round_trips(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--g", "2", "--N", "3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["g"] == 2 and doc["N"] == 3 and doc["quotient_genus"] is None
        data = [AdmissibleDatum.from_json(item) for item in doc["data"]]
        assert data == [AdmissibleDatum(0, 3, (2, 2))]

    def test_empty_listing_is_success(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--g", "2", "--N", "7")
        assert code == 0 and out == ""

    def test_domain_errors_exit_2(self, capsys):
        assert run_cli(capsys, "enumerate", "--g", "1", "--N", "2")[0] == 2
        assert run_cli(capsys, "enumerate", "--g", "2", "--N", "1")[0] == 2


class TestInertiaCommand:
    def test_table_output(self, capsys):
        code, out, _ = run_cli(capsys, "inertia", "--g", "2", "--N", "2")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert "connected" in lines[0] and "H2=Z/2" in lines[0] and "class=nontrivial" in lines[0]
        assert lines[1].rstrip().endswith("-")  # no Brauer column for g' > 0

    def test_genus0_only_filter(self, capsys):
        code, out, _ = run_cli(capsys, "inertia", "--g", "2", "--N", "2", "--genus0-only")
        assert code == 0
        assert len(out.splitlines()) == 1 and "g'=0" in out

    def test_json_matches_library_reports(self, capsys):
        code, out, _ = run_cli(capsys, "inertia", "--g", "2", "--N", "2", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["g"] == 2 and doc["N"] == 2
        expected = [
            sector_report(AdmissibleDatum(0, 2, (6,)), genus=2).to_json(),
            sector_report(AdmissibleDatum(1, 2, (2,)), genus=2).to_json(),
        ]
        assert doc["sectors"] == expected
        assert doc["sectors"][0]["brauer"]["d_over_N"] == 3

    def test_empty_decomposition(self, capsys):
        code, out, _ = run_cli(capsys, "inertia", "--g", "2", "--N", "7", "--json")
        assert code == 0
        assert json.loads(out)["sectors"] == []


class TestClassifyCommand:
    def test_admissible_exits_0(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--datum", "0,2,6")
        assert code == 0
        assert "admissible:   yes" in out
        assert "connected:    connected" in out
        assert "class:        nontrivial" in out

    def test_json_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--datum", "0,2,6", "--json")
        assert code == 0
        assert json.loads(out) == sector_report(AdmissibleDatum(0, 2, (6,))).to_json()

    def test_inadmissible_exits_1(self, capsys):
        # genus 4 but the weighted-degree congruence fails
        code, out, _ = run_cli(capsys, "classify", "--datum", "0,3,4,2")
        assert code == 1
        assert "admissible:   no (structural_equation)" in out

    def test_half_integral_genus_exits_1_with_structured_output(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--datum", "0,2,5")
        assert code == 1
        assert "not an integer" in out
        code, out, _ = run_cli(capsys, "classify", "--datum", "0,2,5", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["error"] == "non_integral_genus"
        assert doc["total_genus"] == "3/2"

    def test_parse_errors_exit_2(self, capsys):
        assert run_cli(capsys, "classify", "--datum", "0,2,x")[0] == 2
        assert run_cli(capsys, "classify", "--datum", "0,3,1")[0] == 2
        assert run_cli(capsys, "classify", "--datum", "0")[0] == 2


class TestParserBehaviour:
    def test_no_arguments_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["paint"])
        assert exc.value.code == 2

    def test_missing_required_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--g", "2"])
        assert exc.value.code == 2


def test_console_script_smoke():
    exe = shutil.which("stackbrauer")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "snf", "2,-1;-1,2"], capture_output=True, text=True, timeout=30)
    assert proc.returncode == 0
    assert "d = [1, 3]" in proc.stdout
