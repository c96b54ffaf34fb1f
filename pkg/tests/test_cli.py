import json
import math

import pytest

import zetadelta as zd
from zetadelta.cli import (
    APOINTS_HEADER,
    CURVE_HEADER,
    EXIT_BAD_CONFIG,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    main,
)

VERIFY_KEYS = [
    "a_re", "a_im", "eta", "t_min", "t_max",
    "count", "contour_count", "n_main",
    "empirical_sum_re", "empirical_sum_im",
    "sum_main_re", "sum_main_im",
    "main_offset_re", "main_offset_im",
    "main_term_re", "main_term_im",
    "mean_re", "mean_im", "target_re", "target_im",
    "abs_error", "normalized_error", "checks",
]


def run(args, tmp_path, name="out"):
    out = tmp_path / name
    code = main(args + ["--out", str(out)])
    return code, out.read_text() if out.exists() else ""


class TestApointsCommand:
    def test_csv_schema_and_content(self, tmp_path):
        code, text = run(
            ["apoints", "--a-re", "1", "--a-im", "0", "--t-max", "100"], tmp_path
        )
        assert code == EXIT_OK
        lines = text.strip().split("\n")
        assert lines[0] == APOINTS_HEADER
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == zd.count_contour(1.0, 30.0, 100.0)
        # |a|=1 points sit on the critical line
        for row in rows:
            assert abs(float(row[1]) - 0.5) <= 1e-8
        gammas = [float(r[2]) for r in rows]
        assert gammas == sorted(gammas)

    def test_json_format(self, tmp_path):
        code, text = run(
            ["apoints", "--a-re", "2", "--t-max", "80", "--format", "json"], tmp_path
        )
        assert code == EXIT_OK
        doc = json.loads(text)
        assert set(doc["apoints"][0]) == {
            "branch", "beta", "gamma", "residual", "zeta_re", "zeta_im"
        }

    def test_rejects_zero_target(self, capsys, caplog):
        code = main(["apoints", "--a-re", "0", "--a-im", "0", "--t-max", "100"])
        assert code == EXIT_BAD_CONFIG
        assert "a=0" in caplog.text

    def test_rejects_bad_ranges(self):
        assert main(["apoints", "--a-re", "1", "--t-max", "40"]) == EXIT_BAD_CONFIG
        assert (
            main(["apoints", "--a-re", "1", "--t-max", "100", "--eta", "0.95"])
            == EXIT_BAD_CONFIG
        )
        assert (
            main(["apoints", "--a-re", "1", "--t-max", "100", "--t-min", "10"])
            == EXIT_BAD_CONFIG
        )

    def test_solver_failure_exit_code(self, monkeypatch, caplog):
        from zetadelta import cli
        from zetadelta.errors import ConvergenceError

        def boom(*args, **kwargs):
            raise ConvergenceError("branch k=17: no convergence")

        monkeypatch.setattr(cli, "enumerate_apoints", boom)
        code = main(["apoints", "--a-re", "1", "--t-max", "100"])
        assert code == cli.EXIT_NO_CONVERGENCE
        assert "k=17" in caplog.text

    def test_thread_determinism(self, tmp_path):
        _, one = run(
            ["apoints", "--a-re", "2", "--t-max", "200", "--threads", "1"],
            tmp_path, "one.csv",
        )
        _, eight = run(
            ["apoints", "--a-re", "2", "--t-max", "200", "--threads", "8"],
            tmp_path, "eight.csv",
        )
        assert one.encode() == eight.encode()


class TestVerifyCommand:
    def test_report_schema_and_checks(self, tmp_path):
        code, text = run(
            ["verify", "--a-re", "0", "--a-im", "1", "--t-max", "300"], tmp_path
        )
        assert code == EXIT_OK
        doc = json.loads(text)
        assert list(doc) == VERIFY_KEYS
        assert doc["count"] == doc["contour_count"]
        # eta=0 identity: sum_main == (1+a) n_main
        lhs = complex(doc["sum_main_re"], doc["sum_main_im"])
        rhs = (1.0 + complex(doc["a_re"], doc["a_im"])) * doc["n_main"]
        assert abs(lhs - rhs) <= 1e-9 * abs(rhs)
        assert all(doc["checks"].values())

    def test_thread_determinism(self, tmp_path):
        _, one = run(
            ["verify", "--a-re", "0", "--a-im", "1", "--t-max", "400",
             "--threads", "1"], tmp_path, "one.json",
        )
        _, eight = run(
            ["verify", "--a-re", "0", "--a-im", "1", "--t-max", "400",
             "--threads", "8"], tmp_path, "eight.json",
        )
        assert one.encode() == eight.encode()


class TestCurveCommand:
    def test_csv_overlay(self, tmp_path):
        code, text = run(
            ["curve", "--a-re", "10", "--t-max", "1000"], tmp_path
        )
        assert code == EXIT_OK
        lines = text.strip().split("\n")
        assert lines[0] == CURVE_HEADER
        curve_rows = [l.split(",") for l in lines[1:] if l.startswith("curve")]
        apoint_rows = [l.split(",") for l in lines[1:] if l.startswith("apoint")]
        assert curve_rows and apoint_rows
        # the last grid sample sits exactly at t_max=1000
        assert float(curve_rows[-1][1]) == pytest.approx(1000.0, rel=1e-12)
        assert float(curve_rows[-1][2]) == pytest.approx(0.045830294841429364, abs=1e-12)
        for row in apoint_rows:
            assert float(row[3]) <= 0.05

    def test_overlay_deviation_above_200(self, tmp_path):
        code, text = run(["curve", "--a-re", "2", "--t-max", "600"], tmp_path)
        assert code == EXIT_OK
        for line in text.strip().split("\n")[1:]:
            kind, t, sigma, dev = line.split(",")
            if kind == "apoint" and float(t) > 200.0:
                assert float(dev) <= 0.02


class TestCountCommand:
    def test_json_schema(self, tmp_path):
        code, text = run(
            ["count", "--a-re", "-1", "--t-max", "120", "--format", "json"], tmp_path
        )
        assert code == EXIT_OK
        doc = json.loads(text)
        assert list(doc) == ["a_re", "a_im", "t_min", "t_max", "count", "n_main"]
        assert doc["count"] == zd.count_contour(-1.0, 30.0, 120.0)


class TestConfigFile:
    def test_precedence_flags_over_file_over_defaults(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text(
            "# config\n"
            "a_re = 2.0\n"
            "t_max = 90\n"
            "format = json\n"
        )
        out = tmp_path / "out.json"
        code = main(
            ["apoints", "--config", str(cfg), "--t-max", "80", "--out", str(out)]
        )
        assert code == EXIT_OK
        doc = json.loads(out.read_text())
        # file supplied a=2, flag overrode t_max to 80
        assert max(p["gamma"] for p in doc["apoints"]) <= 80.0
        assert len(doc["apoints"]) == zd.count_contour(2.0, 30.0, 80.0)

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("nonsense = 1\n")
        assert main(["apoints", "--config", str(cfg)]) == EXIT_BAD_CONFIG

    def test_missing_file_rejected(self, tmp_path):
        assert (
            main(["apoints", "--config", str(tmp_path / "nope.cfg")])
            == EXIT_BAD_CONFIG
        )
