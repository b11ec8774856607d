import csv
import io
import json
import subprocess
import sys

import pytest

from dtpart.cli import main, parse_t


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_count():
    code, out, _ = run("count", "--t", "2", "--n", "25")
    assert code == 0
    (row,) = rows_of(out)
    assert row["d_t"] == "39" and row["L"] == "10"


def test_count_n_list():
    code, out, _ = run("count", "--t", "3/2", "--n-list", "16,36")
    assert code == 0
    assert [r["L"] for r in rows_of(out)] == ["6", "9"]


def test_estimate_json_round_trip():
    code, out, _ = run("estimate", "--t", "3", "--n", "1000", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1 and payload["subcommand"] == "estimate"
    row = payload["rows"][0]
    assert set(payload["columns"]) == set(row)
    from dtpart.asymptotics import estimate_dt
    assert row["log_estimate"] == estimate_dt(1000, 3).log_estimate


def test_compare_columns():
    code, out, _ = run("compare", "--t", "3", "--n-list", "100,400")
    assert code == 0
    rows = rows_of(out)
    assert list(rows[0]) == ["t", "n", "L", "frac", "d_t_exact_digits", "log_exact",
                             "log_estimate", "ratio"]
    assert 0.9 < float(rows[1]["ratio"]) < 1.1


def test_precision_flag():
    _, out, _ = run("beta-table", "--t-list", "3", "--precision", "4")
    assert rows_of(out)[0]["beta"] == "0.6553"


def test_limit_shape_endpoints():
    code, out, _ = run("limit-shape", "--t", "2", "--points", "5")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 5
    assert float(rows[0]["y"]) == pytest.approx(1.0)
    assert float(rows[-1]["x"]) == 2.0 and float(rows[-1]["y"]) == 0.0


def test_sample_rows():
    code, out, _ = run("sample", "--t", "3", "--n", "400", "--seed", "5", "--count", "3")
    rows = rows_of(out)
    assert code == 0 and [r["index"] for r in rows] == ["0", "1", "2"]
    assert all(int(r["largest_part"]) <= 60 for r in rows)


def test_beta_table_range():
    code, out, _ = run("beta-table", "--t-min", "1.5", "--t-max", "3", "--steps", "4")
    assert code == 0 and len(rows_of(out)) == 4


@pytest.mark.parametrize("suite", ["lemmas", "beta", "counts"])
def test_verify_suites(suite):
    code, out, _ = run("verify", "--suite", suite)
    assert code == 0
    assert all(r["passed"] == "true" for r in rows_of(out))


def test_exit_codes():
    assert run("estimate", "--t", "1.2", "--n", "100")[0] == 2
    assert run("count", "--t", "3", "--n", "10000", "--budget", "10")[0] == 4
    assert run("count", "--t", "-1", "--n", "5")[0] == 2
    assert run("bogus")[0] == 2
    assert run("count", "--t", "3")[0] == 2


def test_parse_t():
    from fractions import Fraction
    assert parse_t("3/2") == Fraction(3, 2)
    assert parse_t("2") == Fraction(2)
    assert parse_t("1.5") == 1.5


@pytest.mark.parametrize("argv", [
    ["sample", "--t", "3", "--n", "2500", "--seed", "42", "--count", "50"],
    ["sample", "--t", "1.7", "--n", "900", "--seed", "0", "--count", "20", "--format", "json"],
    ["compare", "--t", "2", "--n-list", "100,900"],
])
def test_subprocess_byte_identical(argv):
    cmd = [sys.executable, "-m", "dtpart", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
