"""
Tests for the degenlab command line: outputs and exit codes.
"""

import json

import pytest
import yaml

from degenlab.cli.main import run
from degenlab.cli.report import EXIT_ASSERTED, EXIT_DATA, EXIT_FAIL, EXIT_OK, EXIT_USAGE, PASS, RunReport


def write_yaml(path, data):
    path.write_text(yaml.safe_dump(data, sort_keys=False))
    return str(path)


@pytest.fixture
def witness_file(tmp_path):
    return write_yaml(tmp_path / "witness.yaml", {
        "source": "S_1^2", "target": "S_3^3", "variety": [1, 2],
        "even": [["t"]], "odd": [["1", "-2*t^-1"], ["0", "1"]],
    })


def test_check_jordan_on_a_catalog_name(capsys):
    report = run(["check-jordan", "S_7^3@1,2"])
    assert report.exit_code == EXIT_OK
    assert capsys.readouterr().out.strip() == "S_7^3: pass"


def test_check_jordan_on_a_document(tmp_path, capsys):
    path = write_yaml(tmp_path / "bad.yaml", {"name": "bad", "variety": [1, 2],
                                              "products": {"e1.e1": [["e1", 1]], "e1.f1": [["f1", "1/3"]]}})
    report = run(["check-jordan", path, "--format", "json"])
    assert report.exit_code == EXIT_FAIL
    data = json.loads(capsys.readouterr().out)
    assert data["algebra"] == "bad"
    assert data["verdict"] == "fail"
    assert data["witness"]["kind"] == "jordan"


def test_check_jordan_raw_document(tmp_path, capsys):
    # e1.f1 listed without its mirror f1.e1
    path = write_yaml(tmp_path / "one_sided.yaml", {"name": "one_sided", "dims": [1, 2],
                                                    "products": {"e1.e1": [["e1", 1]], "e1.f1": [["f1", "1/2"]]}})
    assert run(["check-jordan", path]).exit_code == EXIT_OK
    capsys.readouterr()
    report = run(["check-jordan", path, "--raw", "--format", "json"])
    assert report.exit_code == EXIT_FAIL
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "fail"
    assert data["witness"]["kind"] == "supercommutativity"


def test_invariants_json(capsys):
    assert run(["invariants", "S_7^3", "-f", "json"]).exit_code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["derivation_dim"] == 3
    assert data["burde_11"]["value"] == "8/3"
    assert data["associative"] is False


def test_invariants_text(capsys):
    assert run(["invariants", "S_2^3"]).exit_code == EXIT_OK
    out = capsys.readouterr().out
    assert "derivation dimension: 4" in out
    assert "c_(1,1): undefined:DenominatorZero" in out


def test_verify_deg(witness_file, capsys):
    report = run(["verify-deg", witness_file])
    assert report.exit_code == EXIT_OK
    assert report.verdicts[0].status == PASS
    capsys.readouterr()


def test_verify_deg_with_transport(witness_file, capsys):
    assert run(["verify-deg", witness_file, "--show-transport", "-f", "json"]).exit_code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "Verified"


def test_verify_deg_erratum_fails(tmp_path, capsys):
    path = write_yaml(tmp_path / "erratum.yaml", {
        "source": "S_1^3", "target": "S_2^3", "variety": [1, 2],
        "even": [["1"]], "odd": [["t", "0"], ["0", "t"]],
    })
    assert run(["verify-deg", path]).exit_code == EXIT_FAIL
    capsys.readouterr()


def test_verify_nondeg(tmp_path, capsys):
    valid = write_yaml(tmp_path / "valid.yaml", {"source": "S_3^3", "target": "S_2^3", "variety": [1, 2],
                                                 "kind": "PowerDim", "r": 2, "parity": 0})
    invalid = write_yaml(tmp_path / "invalid.yaml", {"source": "S_2^2", "target": "S_3^3", "variety": [1, 2],
                                                     "kind": "PowerDim", "r": 2, "parity": 0})
    assert run(["verify-nondeg", valid]).exit_code == EXIT_OK
    assert run(["verify-nondeg", invalid]).exit_code == EXIT_FAIL
    capsys.readouterr()


def test_external_facts_need_permission(tmp_path, capsys):
    path = write_yaml(tmp_path / "external.yaml", {"source": "S_13^3", "target": "U_1^s",
                                                   "kind": "ExternalFact", "citation": "ungraded classification"})
    assert run(["verify-nondeg", path]).exit_code == EXIT_ASSERTED
    assert run(["verify-nondeg", path, "--allow-external"]).exit_code == EXIT_OK
    assert "AssertedOnly" in capsys.readouterr().out


def test_graph_dot(capsys):
    assert run(["graph", "--variety", "1,2"]).exit_code == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('digraph JS_1_2 {')
    assert out.count(" -> ") == 14


def test_graph_json(capsys):
    assert run(["graph", "--variety", "2,1", "--format", "json"]).exit_code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["nodes"]) == 15
    assert len(data["edges"]) == 20


def test_graph_without_external_facts_is_undecided(capsys):
    assert run(["graph", "--variety", "2,1", "--no-external"]).exit_code == 3
    assert "Undecided" in capsys.readouterr().err


def test_components(capsys):
    assert run(["components", "--variety", "1,2"]).exit_code == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["components"]) == 7
    assert len(data["errata"]) == 3
    assert data["rigid_set"][0] == "U_1^s"


def test_catalog_commands(tmp_path, capsys):
    assert run(["catalog", "list", "-f", "json"]).exit_code == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 28
    assert run(["catalog", "show", "S_7^3"]).exit_code == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "S_7^3 (1,2)  [Table 1]"
    assert run(["catalog", "export", "--dir", str(tmp_path)]).exit_code == EXIT_OK
    assert (tmp_path / "witnesses.json").exists()
    capsys.readouterr()


@pytest.mark.parametrize("argv", [
    [],
    ["check-jordan", "nope"],
    ["check-jordan", "S_1^2"],
    ["graph", "--variety", "x"],
    ["catalog"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert run(argv).exit_code == EXIT_USAGE
    capsys.readouterr()


def test_data_errors(tmp_path, capsys):
    broken = tmp_path / "broken.yaml"
    broken.write_text("source: [")
    assert run(["verify-deg", str(broken)]).exit_code == EXIT_DATA
    assert run(["verify-deg", str(tmp_path / "absent.yaml")]).exit_code == EXIT_DATA
    ragged = write_yaml(tmp_path / "ragged.yaml", {"source": "S_7^3", "target": "S_5^3",
                                                   "even": [["1"]], "odd": [["1", "0"], ["0"]]})
    assert run(["verify-deg", ragged]).exit_code == EXIT_DATA
    capsys.readouterr()


def test_report_exit_codes():
    report = RunReport("x")
    report.add("s", "a", PASS)
    report.add("s", "b", "AssertedOnly")
    assert report.settle() == EXIT_ASSERTED
    assert report.settle(allow_external=True) == EXIT_OK
    report.add("s", "c", "fail")
    assert report.settle(allow_external=True) == EXIT_FAIL
    assert [v["subject"] for v in report.to_dict()["verdicts"]] == ["a", "b", "c"]


@pytest.mark.slow
def test_reproduce_paper(capsys):
    report = run(["reproduce-paper"])
    out = capsys.readouterr().out
    assert report.exit_code == EXIT_OK, out
    assert out.rstrip().endswith("PASS")
    assert "[erratum] witnesses: S_1^3 -> S_2^3 (Table 2)" in out


@pytest.mark.slow
def test_reproduce_paper_without_errata(capsys):
    assert run(["reproduce-paper", "--variety", "1,2", "--no-expect-errata"]).exit_code == EXIT_FAIL
    capsys.readouterr()
