import csv
import io
import json
import subprocess
import sys

from shifted_kpq import bender_knuth as bk
from shifted_kpq.cli import EXIT_OK, EXIT_USAGE, run
from shifted_kpq.shapes import shifted_diagram
from shifted_kpq.tableaux import BarTableau, tableau_from_json


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def test_genfun_one_row():
    code, data = call_json("genfun", "--family", "jq", "--outer", "2", "--vars", "1")
    assert code == EXIT_OK
    assert data["polynomial"] == "-β*x1 + 2*x1^2"
    assert {(t["beta"], t["coef"]) for t in data["terms"]} == {(1, "-1"), (0, "2")}


def test_verify_cauchy_passes():
    code, data = call_json("verify", "cauchy", "--kind", "qp", "--nx", "1", "--ny", "1",
                           "--max-deg", "4")
    assert code == EXIT_OK
    assert data["status"] == "pass" and data["residual_terms"] == 0


def test_enumerate_count():
    code, data = call_json("enumerate", "--family", "btq", "--outer", "2", "--max-value", "1",
                           "--count-only")
    assert code == EXIT_OK and data["count"] == 3


def test_enumerated_tableaux_parse_back():
    code, data = call_json("enumerate", "--family", "btq", "--outer", "2", "--max-value", "1")
    tabs = [tableau_from_json(t, "BT") for t in data["tableaux"]]
    assert len(set(tabs)) == data["count"] == 3


def test_non_strict_partition_names_the_flag(capsys):
    code, _ = call("genfun", "--family", "jq", "--outer", "2,2", "--vars", "1")
    assert code == EXIT_USAGE
    assert "--outer" in capsys.readouterr().err
    code, _ = call("pieri", "--kind", "bhat", "--lambda", "3,3", "--nu", "4,3")
    assert code == EXIT_USAGE
    assert "--lambda" in capsys.readouterr().err


def test_usage_errors():
    assert call("genfun", "--family", "xx", "--outer", "2")[0] == EXIT_USAGE
    assert call("verify", "cauchy", "--kind", "qp", "--mu", "1")[0] == EXIT_USAGE
    assert call("ops", "--kind", "inverse", "--size-cap", "0")[0] == EXIT_USAGE
    assert call("verify", "suite", "--only", "nonsense")[0] == EXIT_USAGE
    assert call()[0] == EXIT_USAGE


def test_bk_reads_a_tableau_file(tmp_path):
    shape = shifted_diagram((2, 1), (1,))
    t = BarTableau.make(shape, {(1, 2): 1, (2, 2): 2}, [[(1, 2)], [(2, 2)]])
    path = tmp_path / "t.json"
    path.write_text(json.dumps(t.to_json()))
    code, data = call_json("bk", "tau", "--in", str(path), "--k", "1")
    assert code == EXIT_OK
    assert tableau_from_json(data["result"], "BT") == bk.tau(t, 1)
    code, data = call_json("bk", "swap", "--in", str(path), "--trace")
    assert code == EXIT_OK and isinstance(data["trace"], list)


def test_bk_bad_input(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{}")
    assert call("bk", "tau", "--in", str(path))[0] == EXIT_USAGE


def test_pieri_with_oracle():
    code, data = call_json("pieri", "--kind", "chat", "--lambda", "5,4,1", "--nu", "8,5,3,1")
    assert code == EXIT_OK and data["total"] == 12
    code, data = call_json("pieri", "--kind", "chat", "--lambda", "2,1", "--nu", "4,2,1",
                           "--oracle")
    assert code == EXIT_OK and data["status"] == "pass"
    assert all(row["value"] == row["oracle"] for row in data["values"])
    code, data = call_json("pieri", "--kind", "bhat", "--lambda", "-", "--nu", "3", "--n", "3")
    assert data["total"] == 1


def test_coeffs():
    code, data = call_json("coeffs", "--kind", "y", "--params", "Lambda=8,5,3,1", "Psi=5,4,1")
    assert code == EXIT_OK
    assert [e["value"] for e in data["entries"]] == ["1", "5", "9", "7", "2"]
    code, data = call_json("coeffs", "--kind", "ahat", "--params", "lambda=1", "mu=1")
    assert code == EXIT_OK
    assert call("coeffs", "--kind", "a", "--params", "lambda=1", "mu=1")[0] == EXIT_USAGE


def test_ops():
    code, data = call_json("ops", "--kind", "commute", "--size-cap", "4", "--deg-cap", "3")
    assert code == EXIT_OK and data["status"] == "pass"


def test_suite_subset_pretty_and_json():
    code, text = call("verify", "suite", "--only", "products", "--only", "operators")
    assert code == EXIT_OK
    assert text.splitlines()[-1] == "pass"
    code, data = call_json("verify", "suite", "--only", "beta-zero", "--max-size", "4",
                           "--format", "json")
    assert code == EXIT_OK and [c["check"] for c in data["checks"]] == ["beta-zero"]


def test_csv_output():
    code, text = call("verify", "cauchy", "--kind", "pq", "--nx", "1", "--ny", "1",
                      "--max-deg", "3", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows and rows[0]["status"] == "pass"


def test_output_is_deterministic():
    argv = ("genfun", "--family", "GQ", "--outer", "3,1", "--vars", "2", "--max-deg", "6")
    first, second = call(*argv), call(*argv)
    assert first == second
    data = json.loads(first[1])
    assert json.loads(json.dumps(data)) == data


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "shifted_kpq", "enumerate", "--family", "btq",
                           "--outer", "2", "--max-value", "1", "--count-only"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["count"] == 3
