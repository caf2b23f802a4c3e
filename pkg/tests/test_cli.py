import json
import subprocess
import sys

import pytest

from twincurve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_report(capsys):
    code, out, _ = run(capsys, "report", "109")
    assert code == 0
    assert "conductor = 373216" in out and "w = -1" in out


def test_report_json(capsys):
    code, out, _ = run(capsys, "report", "109", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert doc["conductor"] == 373216 and doc["root_number"]["global"] == -1
    assert doc["short_form"] == ["-3889", "-93240"]
    _, out2, _ = run(capsys, "report", "109", "--json")
    assert out2 == out


@pytest.mark.parametrize("p", ["6", "9", "3"])
def test_report_bad_input(capsys, p):
    code, _, err = run(capsys, "report", p)
    assert code == 2 and "prime" in err


def test_report_small_and_non_twin(capsys):
    _, out, _ = run(capsys, "report", "5")
    assert "warning: p < 7" in out
    _, out, _ = run(capsys, "report", "11", "--json")
    assert any("not prime" in w for w in json.loads(out)["warnings"])


def test_scan_count(capsys):
    code, out, _ = run(capsys, "scan", "7", "50000", "--twin", "--mod8", "1", "--count")
    assert code == 0 and out.strip() == "165"


def test_scan_rows(capsys):
    _, out, _ = run(capsys, "scan", "7", "20", "--twin", "--no-meta")
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["7", "13", "19"]


def test_scan_outputs_deterministic(tmp_path, capsys):
    paths = {k: tmp_path / f"a.{k}" for k in ("csv", "json", "tex")}
    args = ["scan", "5", "300", "--twin", "--no-meta", "--csv", str(paths["csv"]),
            "--json", str(paths["json"]), "--latex", str(paths["tex"])]
    assert main(args) == 0
    first = {k: p.read_bytes() for k, p in paths.items()}
    assert main(args + ["--jobs", "2"]) == 0
    assert first == {k: p.read_bytes() for k, p in paths.items()}
    assert json.loads(first["json"])["schema"] == 1


def test_scan_io_error(capsys):
    code, _, err = run(capsys, "scan", "7", "20", "--csv", "/nonexistent/dir/x.csv")
    assert code == 3


def test_scan_bad_range(capsys):
    assert run(capsys, "scan", "3", "20")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["scan", "7", "20", "--mod8", "2"])
    assert exc.value.code == 2


def test_verify_fixtures_exit_and_only(capsys):
    code, out, _ = run(capsys, "verify-fixtures")
    assert code == 1
    assert "lies on E_2803" in out and "lies on E_4789" in out
    code, out, _ = run(capsys, "verify-fixtures", "--only", "rank2,residues")
    assert code == 0 and "points" not in out
    code, out, _ = run(capsys, "verify-fixtures", "--only", "rootnumber", "-v")
    assert code == 0 and out.count("PASS") == 4
    assert run(capsys, "verify-fixtures", "--only", "bogus")[0] == 2
    assert run(capsys, "verify-fixtures", "--fixture-dir", "/nonexistent")[0] == 3


def test_lvalue(capsys):
    code, out, _ = run(capsys, "lvalue", "109", "Lprime", "1e-5")
    assert code == 0 and out.startswith("L'(E_109, 1) = 7.32477")
    err = float(out.split("+/-")[1].split()[0])
    assert err <= 1e-5
    code, out, _ = run(capsys, "lvalue", "73", "L", "1e-5")
    assert code == 0 and float(out.split("=")[1].split()[0]) > 1
    code, out, _ = run(capsys, "lvalue", "109", "rank", "1e-4")
    assert "analytic rank of E_109: 1" in out


def test_lvalue_cap(capsys):
    code, _, err = run(capsys, "lvalue", "47713", "L", "1e-8")
    assert code == 4 and "n_max" in err
    assert run(capsys, "lvalue", "73", "Lprime", "1e-5")[0] == 2


def test_search_points(capsys):
    code, out, _ = run(capsys, "search-points", "13", "--height", "6.5")
    assert code == 0 and "(650, 16380)" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "twincurve", "report", "6"], capture_output=True, text=True)
    assert r.returncode == 2
