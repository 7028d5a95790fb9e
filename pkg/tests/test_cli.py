import csv
import io
import json
import math
import re
import subprocess
import sys

import pytest

from bessel_hiord import __version__, cli
from bessel_hiord.cli import ReportConfig, load_report, main, parse_list, parse_range
from bessel_hiord.exceptions import ConvergenceError


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- argument parsing ------------------------------------------------------------

def test_parse_range_forms():
    assert parse_range("40,60") == [40, 60]
    assert parse_range("0:3") == [0, 1, 2, 3]
    assert parse_range("0:100:50") == [0, 50, 100]
    assert parse_range("") == []


def test_parse_list():
    assert parse_list("0.5, 1,2") == [0.5, 1.0, 2.0]
    assert parse_list("") == []


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["table1", "--nu", "0.5"], ["table1", "--kmax", "3"], ["table1", "--n", "0"],
    ["derivs", "--kind", "K", "--nu", "0", "--a", "0"], ["transform", "--kind", "K", "--nu", "1.5"],
    ["transform", "--method", "convergent", "--nu", "0.5"], ["transform", "--x", "abc"],
    ["validate-bounds", "--x", ""], ["validate-bounds", "--tol", "-1"], ["derivs", "--nu", "0,1"],
    ["transform", "--kind", "Q"], ["derivs", "--format", "xml"],
])
def test_usage_errors_exit_1(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 1
    assert out == ""
    assert "error" in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


# -- table1 ----------------------------------------------------------------------------

EXPECTED = {
    0: [6.968e-4, 3.903e-4, 1.856e-4, 6.674e-5],
    1: [6.373e-5, 2.341e-5, 6.594e-6, 1.174e-6],
    2: [2.546e-6, 6.193e-7, 1.041e-7, 9.224e-9],
}


def test_table1_defaults(capsys):
    code, out, _ = run_cli(capsys, "table1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "n=40", "n=60", "n=100", "n=200"]
    assert len(rows) == 4
    for line in rows[1:]:
        k = int(line[0])
        got = [float(c) for c in line[1:]]
        assert got == pytest.approx(EXPECTED[k], rel=1e-3)


def test_table1_single_column(capsys):
    code, out, _ = run_cli(capsys, "table1", "--n", "40", "--kmax", "0")
    assert code == 0
    assert out.splitlines()[0] == "k,n=40" and len(out.splitlines()) == 2
    assert float(out.splitlines()[1].split(",")[1]) == pytest.approx(6.968e-4, rel=1e-3)


def test_table1_json_rows(capsys):
    code, out, _ = run_cli(capsys, "table1", "--format", "json", "--n", "40,60")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"config", "rows", "version"}
    assert len(doc["rows"]) == 6
    r = doc["rows"][0]
    assert r["abs_error"] == pytest.approx(abs(r["exact"] - r["asymptotic"]))


# -- format contract ---------------------------------------------------------------------

FLOAT_CELL = re.compile(r"-?\d\.\d{5}e[+-]\d{2,3}")


@pytest.mark.parametrize("argv", [
    ["table1"], ["derivs", "--kind", "K", "--nu", "0.5", "--a", "2"],
    ["transform", "--kind", "K", "--nu", "0.5", "--x", "5,10"], ["validate-bounds", "--nu", "0.5", "--x", "1,2"],
])
def test_csv_format(capsys, argv):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    assert "\r" not in out and out.endswith("\n")
    for line in list(csv.reader(io.StringIO(out)))[1:]:
        for cell in line:
            if "." in cell and cell not in ("nan", "inf", "-inf"):
                assert FLOAT_CELL.fullmatch(cell), cell


@pytest.mark.parametrize("argv", [
    ["table1", "--n", "40"], ["derivs", "--kind", "Y", "--nu", "0.4", "--a", "1", "--n", "0:30"],
    ["transform", "--kind", "J", "--nu", "0", "--x", "5,10"], ["validate-bounds", "--nu", "0.1,0.5"],
])
def test_deterministic_and_json_round_trip(capsys, argv):
    first = run_cli(capsys, *argv, "--format", "json")[1]
    second = run_cli(capsys, *argv, "--format", "json")[1]
    assert first == second
    cfg, rows, version = load_report(first)
    assert version == __version__
    assert isinstance(cfg, ReportConfig) and cfg.format == "json"
    doc = json.loads(first)
    assert cfg.to_dict() == doc["config"]
    # re-rendering the loaded rows reproduces the document exactly
    again = {"config": cfg.to_dict(), "rows": [{k: cli._json_value(v) for k, v in r.items()} for r in rows],
             "version": version}
    assert json.dumps(again, indent=2, allow_nan=False) + "\n" == first


def test_json_encodes_non_finite(capsys):
    _, out, _ = run_cli(capsys, "derivs", "--kind", "J", "--nu", "0", "--a", "0.5", "--n", "0:3", "--format",
                        "json")
    # J_0^(1)(0.5) etc. are finite; log of a zero derivative would be -inf
    doc = json.loads(out)
    assert all(isinstance(r["log_abs"], (float, str)) for r in doc["rows"])
    assert "NaN" not in out and "Infinity" not in out


def test_empty_transform_grid(capsys):
    code, out, _ = run_cli(capsys, "transform", "--x", "", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"] == [] and doc["config"]["x"] == []
    code, out, _ = run_cli(capsys, "transform", "--x", "")
    assert code == 0 and out.count("\n") == 1


def test_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run_cli(capsys, "table1", "--n", "40", "--out", str(target))
    assert code == 0 and out == ""
    data = target.read_bytes()
    assert data.startswith(b"k,n=40\n") and b"\r" not in data


# -- subcommands --------------------------------------------------------------------------

def test_derivs_integer_j_has_asymptotic_columns(capsys):
    _, out, _ = run_cli(capsys, "derivs", "--n", "0:5", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[0]["asymptotic"] is None
    assert rows[0]["value"] == pytest.approx(0.7651976865579666, rel=1e-14)
    assert rows[5]["abs_error"] >= 0


def test_transform_columns_and_consistency(capsys):
    _, out, _ = run_cli(capsys, "transform", "--kind", "K", "--nu", "0.5", "--x", "10,20", "--format", "json")
    for r in json.loads(out)["rows"]:
        assert r["error"] is None and r["convergent_value"] is None
        for m in ("poincare", "hadamard"):
            assert r[f"{m}_deviation"] <= r[f"{m}_bound"] + 10 * r["oracle_error"] + 1e-15
        assert r["log_tail_plus_ax"] < 0


def test_transform_partial_and_total_failure(capsys, monkeypatch):
    real = cli.quadrature_oracle

    def flaky(query, **kw):
        if query.x > 7:
            raise ConvergenceError("forced")
        return real(query, **kw)

    monkeypatch.setattr(cli, "quadrature_oracle", flaky)
    code, out, _ = run_cli(capsys, "transform", "--x", "5,10", "--format", "json")
    assert code == 3
    rows = json.loads(out)["rows"]
    assert rows[0]["error"] is None and "forced" in rows[1]["error"]
    code, _, _ = run_cli(capsys, "transform", "--x", "10,20")
    assert code == 2


def test_numeric_failure_exit_2(capsys, monkeypatch):
    def boom(cfg):
        raise ConvergenceError("forced")

    monkeypatch.setitem(cli._RUNNERS, "derivs", boom)
    code, out, err = run_cli(capsys, "derivs")
    assert code == 2 and out == "" and "forced" in err


def test_validate_bounds_variants(capsys):
    _, out, _ = run_cli(capsys, "validate-bounds", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len({(r["nu"], r["x"]) for r in rows}) == 25
    assert not all(r["ok"] for r in rows)
    _, out, _ = run_cli(capsys, "validate-bounds", "--variant", "corrected", "--format", "json")
    assert all(r["ok"] for r in json.loads(out)["rows"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bessel_hiord", "table1", "--n", "40", "--kmax", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("k,n=40\n0,")
    assert math.isclose(float(proc.stdout.splitlines()[1].split(",")[1]), 6.968e-4, rel_tol=1e-3)
