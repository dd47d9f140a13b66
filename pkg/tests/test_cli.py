import io
import json

import pytest

from conftest import GOLDEN
from z4nu.analysis import analyze, check_sample, load_spec, read_theta, run_census
from z4nu.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write_spec(tmp_path, data, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_golden_reports(i):
    code, text = run(["analyze", str(GOLDEN / f"example{i}.json"), "--oracle", "--format", "machine"])
    assert text == (GOLDEN / f"example{i}.report.json").read_text()
    assert code == 5   # the closed forms disagree with every worked example


def test_clean_code_exits_zero(tmp_path):
    path = write_spec(tmp_path, {"n": 3, "theta": [0, 0], "generators": ["1"]})
    code, text = run(["analyze", path, "--oracle"])
    assert code == 0 and "all checks passed" in text


def test_report_shape(tmp_path):
    path = write_spec(tmp_path, {"n": 2, "theta": "2v", "generators": ["z+1", [[0, 2], [0, 2]]]})
    code, text = run(["analyze", path, "--format", "machine"])
    report = json.loads(text)
    assert set(report["canonical"]) == {"g11", "g12", "g13", "g14", "g22", "g23", "g24", "g33", "g34", "g44"}
    assert "oracle" not in report
    assert report["log2_size"] == report["log2_size_from_towers"]
    assert code == (5 if report["violations"] else 0)


def test_chain_theta(tmp_path, capsys):
    path = write_spec(tmp_path, {"n": 2, "theta": [2, 0], "generators": ["1"]})
    code, _ = run(["analyze", path])
    assert code == 2
    assert "chain ring" in capsys.readouterr().err


def test_limit_exit(tmp_path):
    path = write_spec(tmp_path, {"n": 4, "theta": [0, 1], "generators": ["1"]})
    code, _ = run(["analyze", path, "--oracle", "--limit", "100"])
    assert code == 3


@pytest.mark.parametrize("data", [
    {"n": 2, "theta": [0, 0], "generators": ["z^"]},
    {"n": 0, "theta": [0, 0], "generators": ["1"]},
    {"n": 2, "theta": [0, 0], "generators": []},
    {"n": 2, "theta": [0, 0]},
    {"n": 2, "theta": "zz", "generators": ["1"]},
    {"n": 2, "theta": [0, 0], "generators": [[1, 2]]},
])
def test_bad_specs_exit_4(tmp_path, data, capsys):
    code, _ = run(["analyze", write_spec(tmp_path, data)])
    assert code == 4
    assert capsys.readouterr().err.startswith("error:")


def test_unreadable_inputs_exit_4(tmp_path):
    assert run(["analyze", str(tmp_path / "missing.json")])[0] == 4
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["analyze", str(bad)])[0] == 4


def test_output_is_deterministic():
    argv = ["analyze", str(GOLDEN / "example2.json"), "--oracle", "--format", "machine"]
    assert run(argv) == run(argv)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_canonical_generators_roundtrip(i):
    first = analyze(load_spec(json.loads((GOLDEN / f"example{i}.json").read_text())))
    again = analyze(load_spec({"n": first["n"], "theta": first["theta"], "generators": first["generators"]}))
    assert again == first


def test_census_is_deterministic_and_flags_findings():
    argv = ["census", "--n", "1..2", "--theta", "0,2v", "--samples", "5", "--seed", "11", "--format", "machine"]
    code, text = run(argv)
    assert (code, text) == run(argv)
    result = json.loads(text)
    assert [(r["n"], r["theta"]) for r in result["rows"]] == [(1, "0"), (1, "2v"), (2, "0"), (2, "2v")]
    assert all(r["samples"] == 5 for r in result["rows"])
    assert code == (5 if result["findings"] else 0)


def test_census_empty_theta_set():
    code, text = run(["census", "--n", "1..3", "--theta", "", "--samples", "3", "--format", "machine"])
    assert code == 0 and json.loads(text)["rows"] == []
    assert run_census(range(1, 3), [], 3, 0) == {"rows": [], "findings": [], "seed": 0}


def test_census_rejects_chain_theta():
    assert run(["census", "--theta", "1+v", "--samples", "1"])[0] == 2


def test_census_findings_reproduce():
    theta = read_theta("v")
    result = run_census([3], [theta], 30, 5)
    assert result["findings"]
    for finding in result["findings"]:
        tag = dict(kv.split("=") for kv in finding.split(":")[0].split())
        _, again = check_sample(int(tag["seed"]), int(tag["n"]), read_theta(tag["theta"]), int(tag["sample"]))
        assert finding in again


def test_classify_theta():
    assert run(["classify-theta", "2v"]) == (0, "2v: non-chain (k = v)\n")
    assert run(["classify-theta", "3+3v"]) == (0, "3+3v: chain\n")
    assert run(["classify-theta", "2+3*v"]) == (0, "2+3v: non-chain (k = 2+v)\n")
    assert run(["classify-theta", "z"])[0] == 4


def test_parse_command():
    code, text = run(["parse", "z^3+z^2+z+1+v*(z+3)", "--n", "4", "--theta", "2v"])
    assert code == 0
    assert json.loads(text)["coefficients"] == [[1, 3], [1, 1], [1, 0], [1, 0]]
    assert run(["parse", "1", "--n", "2", "--theta", "2"])[0] == 2
