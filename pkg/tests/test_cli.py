import csv
import io
import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from kerov.cli import main

SCHEMAS = resources.files("kerov") / "schemas"


def _registry():
    reg = Registry()
    for f in SCHEMAS.iterdir():
        if f.name.endswith(".json"):
            reg = reg.with_resource(f.name, Resource.from_contents(json.loads(f.read_text())))
    return reg


def validate(obj, name):
    schema = json.loads((SCHEMAS / name).read_text())
    Draft202012Validator(schema, registry=_registry()).validate(obj)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_report(tmp_path, capsys):
    path = tmp_path / "v.json"
    code, _, _ = run(capsys, "verify", "--max-n", "3", "--alpha", "1,1/2", "--report", str(path))
    assert code == 0
    report = json.loads(path.read_text())
    validate(report, "verify_report.json")
    assert report["status"] == "pass" and report["failures"] == 0


def test_verify_resource_bound(capsys):
    code, out, err = run(capsys, "verify", "--max-n", "3", "--alpha", "1", "--bound", "2")
    assert code == 2 and "resource bound" in err
    report = json.loads(out)
    validate(report, "verify_report.json")
    assert report["status"] == "resource-bound" and report["checked_identities"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--alpha", "x"],
        ["verify", "--alpha", "-1"],
        ["clt", "--samples", "10", "--n", "10"],
        ["clt", "--n", "1", "--samples", "1000"],
        ["walk", "--n", "3", "--eta", "file"],
        ["sample", "--n", "0"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(capsys, *argv)[0] == 64


def test_walk_report(tmp_path, capsys):
    code, out, _ = run(capsys, "walk", "--n", "4", "--eta", "std")
    assert code == 0
    report = json.loads(out)
    validate(report, "walk_report.json")
    assert report["status"] == "pass"


def test_walk_trivial_file_is_hypothesis_violation(tmp_path, capsys):
    eta = tmp_path / "eta.txt"
    eta.write_text("4 1\n")
    code, out, _ = run(capsys, "walk", "--n", "4", "--eta", "file", "--eta-file", str(eta))
    assert code == 0
    statuses = {r["identity"]: r["status"] for r in json.loads(out)["reports"]}
    assert statuses["burnside-brauer-coverage"] == "hypothesis-violated"
    assert statuses["chain-diameter"] == "hypothesis-violated"


def test_walk_missing_file(tmp_path, capsys):
    assert run(capsys, "walk", "--n", "4", "--eta", "file", "--eta-file", str(tmp_path / "none"))[0] == 64


def test_sample_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "sample", "--n", "8", "--alpha", "3/2", "--seed", "7", "--out", str(a))[0] == 0
    assert run(capsys, "sample", "--n", "8", "--alpha", "3/2", "--seed", "7", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    obj = json.loads(a.read_text())
    validate(obj, "sample_path.json")
    assert len(obj["shapes"]) == 8 and obj["shapes"][0] == "1"


def test_clt_outputs(tmp_path, capsys):
    out, summ = tmp_path / "c.csv", tmp_path / "s.json"
    code, _, _ = run(capsys, "clt", "--n", "10,20", "--samples", "2000", "--seed", "1", "--out", str(out), "--summary", str(summ))
    assert code == 0
    raw = out.read_bytes()
    assert raw.startswith(b"n,alpha,samples,ks,mean,var,l_delta\r\n")
    rows = list(csv.DictReader(io.StringIO(raw.decode())))
    assert [r["n"] for r in rows] == ["10", "20"]
    summary = json.loads(summ.read_text())
    validate(summary, "clt_summary.json")
    again = tmp_path / "c2.csv"
    run(capsys, "clt", "--n", "10,20", "--samples", "2000", "--seed", "1", "--out", str(again), "--threads", "2")
    assert again.read_bytes() == raw


def test_moments_csv(capsys):
    code, out, _ = run(capsys, "moments", "--n", "10", "--r", "2,4", "--alpha", "1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "r", "alpha", "expectation_num", "expectation_den", "ratio_float"]
    assert rows[2][:5] == ["10", "4", "1", "190", "1"]
    assert float(rows[2][5]) == pytest.approx(1.9)


def test_theta_and_measure(capsys):
    code, out, _ = run(capsys, "theta", "--n", "2", "--alpha", "3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["lambda", "2", "1,1"], ["2", "3", "1"], ["1,1", "-1", "1"]]
    code, out, _ = run(capsys, "measure", "--n", "2", "--alpha", "1")
    assert list(csv.reader(io.StringIO(out))) == [["partition", "weight"], ["2", "1/2"], ["1,1", "1/2"]]
