import json
from fractions import Fraction
from pathlib import Path

import pytest

from folgerm.cli import main
from folgerm.documents import (
    DocumentError,
    load_local_problem,
    load_projective_problem,
    parse_document,
    render_document,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *args):
    code = main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDocuments:
    def test_round_trip(self):
        sections = {
            "foliation": {"P": "-y", "Q": "x"},
            "divisor": {"zero": "x*y*(x-y)", "pole": "x+y"},
        }
        assert parse_document(render_document(sections)) == sections

    def test_comments_and_blanks_ignored(self):
        text = "# leading comment\n\n[foliation]\n# inner\nP = -y\n\nQ = x\n"
        assert parse_document(text) == {"foliation": {"P": "-y", "Q": "x"}}

    def test_duplicate_key_rejected(self):
        with pytest.raises(DocumentError, match="line 3"):
            parse_document("[foliation]\nP = -y\nP = x\n")

    def test_key_before_section_rejected(self):
        with pytest.raises(DocumentError, match="before any section"):
            parse_document("P = -y\n")

    def test_local_problem_with_parameters(self):
        sections = parse_document(
            "[foliation]\nP = -a*y\nQ = x\n[parameters]\na = 3\n"
        )
        problem = load_local_problem(sections)
        assert problem.parameters == {"a": Fraction(3)}
        assert str(problem.germ.P) == "-3*y"

    def test_override_beats_file(self):
        sections = parse_document(
            "[foliation]\nP = -a*y\nQ = x\n[parameters]\na = 3\n"
        )
        problem = load_local_problem(sections, {"a": Fraction(1, 2)})
        assert str(problem.germ.P) == "-1/2*y"

    def test_one_problem_kind_per_document(self):
        sections = parse_document(
            "[foliation]\nP = -y\nQ = x\n[projective]\nA = y*z\nB = x*z\nC = x*y\n"
        )
        with pytest.raises(DocumentError, match="exactly one"):
            load_local_problem(sections)

    def test_unknown_section_rejected(self):
        sections = parse_document("[foliation]\nP = -y\nQ = x\n[extra]\na = 1\n")
        with pytest.raises(DocumentError, match="unknown section"):
            load_local_problem(sections)

    def test_points_parsed(self):
        sections = parse_document(
            "[projective]\nA = y*z\nB = 2*x*z\nC = -3*x*y\n"
            "points = 1:0:0; 0:1:0\n"
        )
        problem = load_projective_problem(sections)
        assert [str(p) for p in problem.points] == ["[1 : 0 : 0]", "[0 : 1 : 0]"]

    def test_bad_point_rejected(self):
        sections = parse_document(
            "[projective]\nA = y*z\nB = 2*x*z\nC = -3*x*y\npoints = 1:0\n"
        )
        with pytest.raises(DocumentError, match="triple"):
            load_projective_problem(sections)


class TestLocalCommands:
    def test_invariants_radial(self, capsys):
        code, out, _ = run(capsys, "invariants", FIXTURES / "radial.fol")
        assert code == 0
        report = parse_document(out)
        assert report["report"]["verdict"] == "pass"
        data = report["data"]
        assert data["mu"] == "1"
        assert data["mu_oracle"] == "1"
        assert data["tau"] == "1"
        assert data["nu_zero"] == "3"
        assert data["nu_pole"] == "1"
        assert data["i_polar_pole"] == "1"
        assert data["i_zero_pole"] == "3"
        assert data["delta"] == "0"
        assert data["xi"] == "0"
        assert data["second_type"] == "true"

    def test_check_bs_radial_passes(self, capsys):
        code, out, _ = run(capsys, "check-bs", FIXTURES / "radial.fol")
        assert code == 0
        assert "verdict = pass" in out

    def test_check_bs_fk5_fails(self, capsys):
        code, out, _ = run(
            capsys, "check-bs", FIXTURES / "fk5.fol", "--param", "lambda=1"
        )
        assert code == 1
        report = parse_document(out)
        assert report["report"]["verdict"] == "fail"
        assert report["data"]["mu"] == "45"

    def test_check_liu_radial(self, capsys):
        code, out, _ = run(capsys, "check-liu", FIXTURES / "radial.fol")
        assert code == 0
        assert "verdict = pass" in out

    def test_check_cota_radial(self, capsys):
        code, out, _ = run(capsys, "check-cota", FIXTURES / "radial.fol")
        assert code == 0
        report = parse_document(out)
        assert report["data"]["lhs"] == "1"
        assert report["data"]["equality_expected"] == "true"

    def test_check_second_type_cusp(self, capsys):
        for mode in ("criterion", "reduction", "both"):
            code, out, _ = run(
                capsys,
                "check-second-type",
                FIXTURES / "cusp.fol",
                "--mode",
                mode,
            )
            assert code == 0
            assert "verdict = pass" in out

    def test_reduce_cusp(self, capsys):
        code, out, _ = run(capsys, "reduce", FIXTURES / "cusp.fol")
        assert code == 0
        report = parse_document(out)
        assert report["data"]["blowups"] == "3"
        assert report["data"]["second_type"] == "true"
        assert report["data"]["generalized_curve"] == "true"

    def test_reduce_node(self, capsys):
        code, out, _ = run(capsys, "reduce", FIXTURES / "node.fol")
        assert code == 0
        report = parse_document(out)
        assert report["data"]["blowups"] == "2"

    def test_reduce_blowup_limit(self, capsys):
        code, out, _ = run(
            capsys, "reduce", FIXTURES / "cusp.fol", "--max-blowups", "1"
        )
        assert code == 1
        assert "verdict = fail" in out


class TestProjectiveCommands:
    def test_validate(self, capsys):
        code, out, _ = run(
            capsys, "projective-validate", FIXTURES / "omega_lambda.fol"
        )
        assert code == 0
        report = parse_document(out)
        assert report["data"]["degree"] == "1"
        assert report["data"]["milnor_certified"] == "true"
        assert report["data"]["curve_invariant"] == "true"

    def test_validate_degenerate_parameter(self, capsys):
        for lam in ("0", "-1"):
            code, out, _ = run(
                capsys,
                "projective-validate",
                FIXTURES / "omega_lambda.fol",
                "--param",
                f"lambda={lam}",
            )
            assert code == 1
            assert "verdict = fail" in out

    def test_global_bound(self, capsys):
        code, out, _ = run(
            capsys,
            "projective-global",
            FIXTURES / "omega_lambda.fol",
            "--param",
            "lambda=2",
        )
        assert code == 0
        report = parse_document(out)
        assert report["data"]["lower_bound"] == "2"
        assert report["data"]["tau_sum"] == "3"
        assert report["data"]["gsv_sum"] == "0"

    def test_global_needs_valid_form(self, capsys):
        code, _, err = run(
            capsys,
            "projective-global",
            FIXTURES / "omega_lambda.fol",
            "--param",
            "lambda=0",
        )
        assert code == 2
        assert "common factor" in err


class TestOutputModes:
    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "invariants", FIXTURES / "radial.fol", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["check"] == "invariants"
        assert payload["verdict"] == "pass"
        assert payload["data"]["mu"] == 1

    def test_text_deterministic(self, capsys):
        _, first, _ = run(capsys, "check-cota", FIXTURES / "radial.fol")
        _, second, _ = run(capsys, "check-cota", FIXTURES / "radial.fol")
        assert first == second

    def test_json_deterministic(self, capsys):
        _, first, _ = run(
            capsys, "projective-global", FIXTURES / "omega_lambda.fol", "--json"
        )
        _, second, _ = run(
            capsys, "projective-global", FIXTURES / "omega_lambda.fol", "--json"
        )
        assert first == second

    def test_out_writes_file(self, capsys, tmp_path):
        target = tmp_path / "report.txt"
        code, out, _ = run(
            capsys, "check-bs", FIXTURES / "radial.fol", "--out", target
        )
        assert code == 0
        assert out == ""
        text = target.read_text()
        assert "verdict = pass" in text


class TestExitCodes:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "invariants", "no_such_file.fol")
        assert code == 2
        assert "cannot read" in err

    def test_bad_param(self, capsys):
        code, _, err = run(
            capsys, "check-bs", FIXTURES / "radial.fol", "--param", "lambda"
        )
        assert code == 2
        assert "NAME=VALUE" in err

    def test_local_command_on_projective_document(self, capsys):
        code, _, err = run(capsys, "invariants", FIXTURES / "omega_lambda.fol")
        assert code == 2
        assert "[foliation]" in err

    def test_projective_command_on_local_document(self, capsys):
        code, _, err = run(
            capsys, "projective-validate", FIXTURES / "radial.fol"
        )
        assert code == 2
        assert "[projective]" in err

    def test_malformed_document(self, capsys, tmp_path):
        bad = tmp_path / "bad.fol"
        bad.write_text("[foliation]\nP - y\n")
        code, _, err = run(capsys, "invariants", bad)
        assert code == 2
        assert "line 2" in err

    def test_check_needs_divisor(self, capsys, tmp_path):
        doc = tmp_path / "nodivisor.fol"
        doc.write_text("[foliation]\nP = -y\nQ = x\n")
        code, _, err = run(capsys, "check-bs", doc)
        assert code == 2
        assert "divisor" in err

    def test_global_needs_curve(self, capsys, tmp_path):
        doc = tmp_path / "nocurve.fol"
        doc.write_text("[projective]\nA = y*z\nB = 2*x*z\nC = -3*x*y\n")
        code, _, err = run(capsys, "projective-global", doc)
        assert code == 2
        assert "curve" in err

    def test_ill_posed_germ(self, capsys, tmp_path):
        doc = tmp_path / "shared.fol"
        doc.write_text("[foliation]\nP = x*y\nQ = x^2\n")
        code, _, err = run(capsys, "invariants", doc)
        assert code == 2
        assert "common factor" in err
