"""Command-line surface: outputs, exit codes, certificate files."""

import json

import pytest

from chern_cert.certificates import Certificate
from chern_cert.cli import main


@pytest.fixture(autouse=True)
def cert_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("CHERN_CERT_DIR", str(tmp_path / "certs"))
    return tmp_path / "certs"


class TestChern:
    def test_rho8_mod3_witness(self, capsys):
        code = main(
            ["chern", "--group", "E8", "--rep", "rho8", "--p", "3", "--alpha", "1,1,1,0"]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "1 + 2*t^162"

    def test_adjoint_expanded_square(self, capsys):
        code = main(
            ["chern", "--group", "F4", "--rep", "rho4adj", "--p", "3", "--alpha", "1,1,1,0"]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "1 + t^18 + t^36"

    def test_zero_vector_rejected_with_exit_1(self, capsys):
        code = main(
            ["chern", "--group", "E8", "--rep", "rho8", "--p", "5",
             "--alpha", "0,0,0,0,0,0,0,0"]
        )
        assert code == 1
        assert "zero" in capsys.readouterr().err

    def test_malformed_alpha_is_usage_error(self, capsys):
        code = main(["chern", "--rep", "rho4", "--p", "3", "--alpha", "1,x,0,0"])
        assert code == 2

    def test_rank_flag_must_match(self):
        code = main(
            ["chern", "--rep", "rho4", "--p", "3", "--alpha", "1,1,1,0", "--rank", "5"]
        )
        assert code == 2

    def test_group_rep_consistency(self):
        code = main(
            ["chern", "--group", "E6", "--rep", "rho8", "--p", "3", "--alpha", "1,1,1,0"]
        )
        assert code == 2

    def test_no_registry_entry_at_rank(self):
        code = main(["chern", "--rep", "rho8", "--p", "3", "--alpha", "1,1"])
        assert code == 2

    def test_json_report(self, capsys):
        code = main(
            ["chern", "--rep", "rho4", "--p", "3", "--alpha", "1,1,1,0", "--json"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["total_chern"] == "1 + 2*t^18"
        assert doc["flags"]["in_subring"] is True
        assert doc["flags"]["pm_form"] == [9, 0]


class TestVerify:
    def test_branching_statement(self, capsys, cert_dir):
        code = main(["verify", "prop-2.2-branching"])
        assert code == 0
        out = capsys.readouterr().out.strip()
        assert out.endswith("prop-2.2-branching.json")
        cert = Certificate.load(out)
        assert cert.verified

    def test_theorem_11_json(self, capsys):
        code = main(["verify", "theorem-1.1", "--json"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "Verified"
        assert doc["evidence"]["polynomials"]["rho8"] == "1 + 2*t^162"

    def test_all_p3(self, capsys, cert_dir):
        code = main(["verify", "all", "--p", "3"])
        assert code == 0
        paths = capsys.readouterr().out.split()
        names = sorted(p.rsplit("/", 1)[-1] for p in paths)
        assert names == [
            "lemma-3.1-facts.json",
            "prop-2.2-branching.json",
            "prop-3.2.json",
            "prop-3.3.json",
            "theorem-1.1.json",
        ]
        for p in paths:
            assert Certificate.load(p).verified

    def test_explicit_out_path(self, tmp_path, capsys):
        target = tmp_path / "somewhere" / "t11.json"
        code = main(["verify", "theorem-1.1", "--out", str(target)])
        assert code == 0
        assert target.exists()

    def test_unknown_statement_is_usage_error(self):
        assert main(["verify", "theorem-9.9"]) == 2


class TestEnumerate:
    def test_mod3(self, capsys, cert_dir):
        code = main(["enumerate", "--p", "3", "--rep", "all"])
        assert code == 0
        captured = capsys.readouterr()
        cert = Certificate.load(captured.out.strip())
        assert cert.statement == "theorem-1.1"
        assert cert.parameters["points"] == 80

    def test_mod5_canonical(self, capsys, cert_dir):
        code = main(
            ["enumerate", "--p", "5", "--rep", "rho8", "--mode", "canonical",
             "--workers", "1", "--json"]
        )
        assert code == 0
        captured = capsys.readouterr()
        doc = json.loads(captured.out)
        assert doc["evidence"]["points_weighted"] == 5**8 - 1
        assert "block" in captured.err  # progress goes to stderr

    def test_mod5_wrong_rep(self):
        assert main(["enumerate", "--p", "5", "--rep", "rho4"]) == 2


class TestDickson:
    def test_mod3_default(self, capsys, cert_dir):
        code = main(["dickson", "--p", "3"])
        assert code == 0
        cert = Certificate.load(capsys.readouterr().out.strip())
        assert cert.statement == "lemma-3.1-facts"
        assert cert.evidence["cohomological_degrees"]["c2"] == 36

    def test_mod5_restrict_only(self, capsys, cert_dir):
        code = main(["dickson", "--p", "5", "--restrict", "--json"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["statement"] == "lemma-4.2-facts"
        assert doc["parameters"]["full_expansion"] is False
        assert doc["evidence"]["restriction_images"]["c2"] == "t^100"


class TestBranch:
    def test_suite(self, capsys, cert_dir):
        code = main(["branch"])
        assert code == 0
        cert = Certificate.load(capsys.readouterr().out.strip())
        assert cert.statement == "prop-2.2-branching"

    def test_single_character(self, capsys):
        code = main(["branch", "--rep", "rho8", "--rank", "8", "--steps", "4"])
        assert code == 0
        out = capsys.readouterr().out
        assert "dim 248" in out
        assert "matches registry entry: True" in out

    def test_rank_required_with_rep(self):
        assert main(["branch", "--rep", "rho8"]) == 2

    def test_too_many_steps(self):
        assert main(["branch", "--rep", "rho8", "--rank", "8", "--steps", "9"]) == 2


class TestDeterminism:
    def test_verify_all_p3_byte_identical(self, tmp_path):
        out1, out2 = tmp_path / "one", tmp_path / "two"
        assert main(["verify", "all", "--p", "3", "--out", str(out1), "--workers", "1"]) == 0
        assert main(["verify", "all", "--p", "3", "--out", str(out2), "--workers", "3"]) == 0
        for path in sorted(out1.iterdir()):
            a = Certificate.load(path)
            b = Certificate.load(out2 / path.name)
            assert a.canonical_bytes() == b.canonical_bytes()
