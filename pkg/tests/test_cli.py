import csv
import io
import json

import pytest

from latzeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestWeil:
    def test_both_methods_agree(self, capsys):
        code, out = run_cli(
            capsys,
            "weil", "--w1", "1", "--w2", "i", "--a", "0.3+0.2i", "--k", "4",
            "--method", "both",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["difference"] < 1e-6

    def test_breakdown_fields(self, capsys):
        code, out = run_cli(
            capsys,
            "weil", "--w1", "1", "--w2", "i", "--a", "0.3+0.2i", "--k", "4",
            "--method", "integral", "--breakdown",
        )
        doc = json.loads(out)
        for key in ("j1", "j2", "j3", "row_correction", "eps_used"):
            assert key in doc["integral"]

    def test_degenerate_lattice_exit_2(self, capsys):
        code, out = run_cli(capsys, "weil", "--w1", "1", "--w2", "1", "--a", "0.5", "--k", "3")
        assert code == 2
        assert json.loads(out)["error"] == "DegenerateLattice"

    def test_lattice_point_exit_2(self, capsys):
        code, out = run_cli(capsys, "weil", "--w1", "1", "--w2", "i", "--a", "1+i", "--k", "3")
        assert code == 2
        assert json.loads(out)["error"] == "PointOnLattice"

    def test_budget_env_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv("LATZETA_PANEL_BUDGET", "4")
        code, out = run_cli(
            capsys,
            "weil", "--w1", "1", "--w2", "i", "--a", "0.3+0.2i", "--k", "4",
            "--method", "integral",
        )
        assert code == 3
        assert "error" in json.loads(out)

    def test_deterministic_output(self, capsys):
        args = ("weil", "--w1", "1", "--w2", "i", "--a", "0.4+0.3i", "--k", "3")
        _, out1 = run_cli(capsys, *args)
        _, out2 = run_cli(capsys, *args)
        assert out1 == out2


class TestLerch:
    def test_both(self, capsys):
        code, out = run_cli(
            capsys, "lerch", "--z", "0.5", "--s", "2", "--a", "1", "--method", "both"
        )
        assert code == 0
        assert json.loads(out)["difference"] < 1e-8

    def test_coffey_zeta2(self, capsys):
        code, out = run_cli(
            capsys, "lerch", "--z", "1", "--s", "2", "--a", "1", "--method", "coffey"
        )
        doc = json.loads(out)
        assert doc["value"].startswith("1.6449340668")

    def test_domain_error(self, capsys):
        code, out = run_cli(capsys, "lerch", "--z", "1", "--s", "0.5", "--a", "1")
        assert code == 2
        assert json.loads(out)["error"] == "DomainError"


class TestVerify:
    def test_em2d_suite(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "em2d", "--seed", "42")
        assert code == 0

    def test_weil_report_shape(self, capsys):
        code, out = run_cli(capsys, "verify", "--suite", "weil", "--seed", "7")
        assert code == 0
        for token in ("periodicity", "parity", "homogeneity"):
            assert token in out


class TestGrid:
    def test_three_by_three(self, capsys):
        code, out = run_cli(
            capsys,
            "grid", "--w1", "1", "--w2", "i", "--k", "3",
            "--re-min", "0.1", "--re-max", "0.9",
            "--im-min", "0.1", "--im-max", "0.9",
            "--nx", "3", "--ny", "3",
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 9
        assert all(r["re_E"] != "" for r in rows)
        for r in rows:
            z = complex(float(r["re_E"]), float(r["im_E"]))
            assert abs(z) == pytest.approx(float(r["abs_E"]), rel=1e-10)

    def test_lattice_point_cell_empty(self, capsys):
        code, out = run_cli(
            capsys,
            "grid", "--w1", "1", "--w2", "i", "--k", "3",
            "--re-min", "-0.5", "--re-max", "0.5",
            "--im-min", "-0.5", "--im-max", "0.5",
            "--nx", "3", "--ny", "3",
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        origin = [r for r in rows if r["re_a"] == "0" and r["im_a"] == "0"]
        assert len(origin) == 1
        assert origin[0]["re_E"] == ""

    def test_bad_bounds_exit_2(self, capsys):
        code, out = run_cli(
            capsys,
            "grid", "--w1", "1", "--w2", "i", "--k", "3",
            "--re-min", "1.0", "--re-max", "0.0",
            "--im-min", "0.0", "--im-max", "1.0",
            "--nx", "2", "--ny", "2",
        )
        assert code == 2

    def test_row_major_im_outer(self, capsys):
        code, out = run_cli(
            capsys,
            "grid", "--w1", "1", "--w2", "i", "--k", "3",
            "--re-min", "0.1", "--re-max", "0.3",
            "--im-min", "0.1", "--im-max", "0.3",
            "--nx", "2", "--ny", "2",
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [(r["re_a"], r["im_a"]) for r in rows] == [
            ("0.1", "0.1"), ("0.3", "0.1"), ("0.1", "0.3"), ("0.3", "0.3"),
        ]


class TestEm2dCommand:
    def test_poly_matches_brute_force(self, capsys):
        code, out = run_cli(
            capsys,
            "em2d", "--phi", "poly",
            "--alpha1", "0", "--beta1", "4", "--alpha2", "0", "--beta2", "4",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["difference"] < 1e-8

    def test_unknown_function(self, capsys):
        code, out = run_cli(
            capsys,
            "em2d", "--phi", "nope",
            "--alpha1", "0", "--beta1", "4", "--alpha2", "0", "--beta2", "4",
        )
        assert code == 2
