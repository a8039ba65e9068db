"""CLI behaviour: output, determinism, schemas, exit codes."""

from __future__ import annotations

import io
import json
from importlib import resources

import jsonschema
import pytest

from pascalhankel import cli


def run(argv):
    out = io.StringIO()
    code = cli.run(argv, out=out)
    return code, out.getvalue()


def load_schema(name):
    path = resources.files("pascalhankel") / "schemas" / name
    return json.loads(path.read_text())


def test_matrix_det():
    code, out = run(["matrix", "det", "--family", "M2", "--n", "3"])
    assert code == 0
    assert out.strip() == "1"


def test_matrix_show_csv_and_json():
    code, out = run(["matrix", "show", "--family", "P1:a=1", "--n", "2",
                     "--m", "2", "--k", "1"])
    assert code == 0
    assert out.strip().splitlines() == ["1,1", "1,2"]

    code, out = run(["matrix", "show", "--family", "H1", "--n", "3",
                     "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("matrix.schema.json"))
    assert payload["entries"][0] == ["1", "0", "-1"]


def test_matrix_rank_and_ldu():
    code, out = run(["matrix", "rank", "--family", "M2", "--n", "4", "--p", "2"])
    assert code == 0
    assert out.strip() == "4"
    code, out = run(["matrix", "ldu", "--family", "M2", "--n", "4"])
    assert code == 0
    assert "D: 1,-1,-1,1" in out


def test_verify_single_and_json_schema():
    code, out = run(["verify", "item1", "--n-max", "8"])
    assert code == 0
    assert "pass" in out

    code, out = run(["verify", "det-m2", "--n-max", "16", "--json"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("verification_report.schema.json"))
    assert payload[0]["passed"] is True


def test_verify_group_law_with_a_range():
    code, out = run(["verify", "group-law-m1", "--a-range=-2:2",
                     "--n-max", "8"])
    assert code == 0


def test_verify_all_passes():
    code, out = run(["verify", "all"])
    assert code == 0
    assert out.count("pass") == len(out.strip().splitlines())


def test_verify_failure_exit_code(monkeypatch):
    from pascalhankel import verify as v

    def broken(**kw):
        report = v.VerificationReport("broken", "n=1")
        report.fail("n=1", 0, 1)
        return report

    monkeypatch.setitem(v.CHECKS, "item1", broken)
    code, out = run(["verify", "item1"])
    assert code == 1
    assert "FAIL" in out


def test_cf_expand():
    code, out = run(["cf", "expand", "--series", "L1", "--coeffs", "21",
                     "--quotients", "10"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "integer part: 0"
    assert [l for l in lines if l.startswith("A_")] == \
        [f"A_{i} = X" for i in range(1, 11)]

    code, out = run(["cf", "expand", "--series", "L2", "--coeffs", "21",
                     "--quotients", "8", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["partial_quotients"][:4] == ["X", "-1*X", "-1*X", "-1*X"]
    assert payload["exhausted_precision"] is False


def test_seq_dump():
    code, out = run(["seq", "catalan", "--count", "5"])
    assert code == 0
    assert json.loads(out) == ["1", "1", "2", "5", "14"]

    code, out = run(["seq", "paperfolding", "--count", "3"])
    assert code == 0
    assert json.loads(out) == ["1", "-1", "-1"]


def test_net_t_value():
    code, out = run(["net", "t-value", "--p", "3", "--dims", "M1:a=0,M1:a=1",
                     "--m-max", "8"])
    assert code == 0
    assert "overall t = 0" in out


def test_net_points_and_discrepancy(tmp_path):
    code, out = run(["net", "points", "--p", "2", "--dims", "P1:a=0",
                     "--m", "2", "--n", "4", "--format", "csv"])
    assert code == 0
    assert out.strip().splitlines() == ["0/1", "1/2", "1/4", "3/4"]

    path = tmp_path / "points.csv"
    path.write_text(out)
    code, out = run(["net", "discrepancy", "--input", str(path)])
    assert code == 0
    assert out.strip() == "1/4"


def test_net_search():
    code, out = run(["net", "search", "--p", "3", "--m-max", "3",
                     "--candidates", "m1", "--budget", "1"])
    assert code == 0
    assert "M1:a=2" in out


def test_deterministic_output():
    args = ["verify", "det-m2", "--n-max", "32", "--json"]
    _, first = run(args)
    _, second = run(args)
    first = json.loads(first)[0]
    second = json.loads(second)[0]
    first.pop("elapsed")
    second.pop("elapsed")
    assert first == second


def test_usage_error_exit_code():
    code, _ = run(["matrix", "det", "--family", "M2"])  # missing --n
    assert code == 2
    code, _ = run(["frobnicate"])
    assert code == 2


def test_internal_error_exit_code():
    code, _ = run(["matrix", "det", "--family", "P3", "--n", "2"])
    assert code == 3
    code, _ = run(["net", "discrepancy", "--input", "/nonexistent/points.csv"])
    assert code == 3
