import json
import subprocess
import sys

import pytest

from beltpoly.cli import run
from golden_cases import CASES, HERE, run_case


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, text = run_case(CASES[name])
    assert code == 0
    assert text == (HERE / "golden" / f"{name}.json").read_text()


def test_stirling(capsys):
    assert run(["stirling", "--kind", "1B", "--n", "3"]) == 0
    assert json.loads(capsys.readouterr().out) == [15, 23, 9, 1]


def test_project_both(capsys):
    assert run(["project", "--type", "A", "--x", "3,2,1", "--d", "2", "--seed", "0",
                "--method", "both"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["counts"] == {"j0": 6, "j1": 6}
    assert doc["agreement"] is True
    assert doc["certificate"]["pass"] is True
    assert "seconds" in doc["timing"]


def test_project_threads_invariant(capsys):
    outs = []
    for k in ("1", "2"):
        assert run(["project", "--type", "B", "--x", "3,2,1", "--d", "3", "--seed", "2",
                    "--threads", k, "--no-timing"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_project_refuses_uncertified(tmp_path, capsys):
    m = tmp_path / "g.txt"
    m.write_text("1 3\n1 1 -2\n")
    assert run(["project", "--type", "A", "--x", "3,2,1", "--d", "1", "--matrix", str(m)]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["certificate"]["pass"] is False and "counts" not in doc


def test_project_needs_seed():
    with pytest.raises(SystemExit) as exc:
        run(["project", "--type", "A", "--x", "3,2,1", "--d", "2"])
    assert exc.value.code == 2


def test_project_csv(capsys):
    assert run(["project", "--type", "A", "--x", "4,3,2,1", "--d", "2", "--seed", "1", "--csv"]) == 0
    assert capsys.readouterr().out.splitlines() == ["j,formula,oracle", "0,12,12", "1,12,12"]


def test_angles_csv(capsys):
    assert run(["angles", "--type", "A", "--n", "3", "--table", "--csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "j,d,upsilon_sum,gamma_sum"
    assert "0,1,3,4" in lines


@pytest.mark.parametrize("argv", [
    ["stirling", "--kind", "3", "--n", "2"],
    ["faces", "--type", "C", "--x", "1"],
    ["project", "--type", "A", "--x", "1,2", "--d", "1", "--seed", "0"],
    ["charpoly"],
    ["angles", "--type", "A", "--n", "3"],
    ["nosuch"],
])
def test_bad_input_exits_2(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_verify_single_criterion(capsys):
    assert run(["verify", "--suite", "desk", "--seed", "42", "--only", "5", "--no-timing"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["passed"] and doc["criteria"][0]["criterion"] == 5
    assert "[PASS] criterion 5" in captured.err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "beltpoly", "stirling", "--kind", "1", "--n", "3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == [0, 2, 3, 1]


def test_byte_stable():
    argv = ["angles", "--type", "B", "--n", "3", "--table"]
    assert run_case(argv) == run_case(argv)
