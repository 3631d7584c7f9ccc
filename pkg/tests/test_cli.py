"""End-to-end checks of the command-line interface."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qcluster.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mutate_first_direction_frozen(capsys):
    code, out, err = _run(capsys, "mutate", "--type", "A2", "--dirs", "1")
    assert code == EXIT_OK and err == ""
    seed = json.loads(out)["seed"]
    exps = sorted(tuple(t["exp"]) for t in seed["vars"][0]["terms"])
    assert exps == [(-1, 0, 1, 0), (-1, 1, 0, 0)]
    assert all(t["coeff"] == "1" for t in seed["vars"][0]["terms"])


def test_mutate_rejects_out_of_range_direction(capsys):
    code, out, err = _run(capsys, "mutate", "--type", "A2", "--dirs", "3")
    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("qcluster: ") and err.count("\n") == 1


def test_enumerate_counts_and_is_deterministic(capsys):
    code1, out1, _ = _run(capsys, "enumerate", "--type", "A2")
    code2, out2, _ = _run(capsys, "enumerate", "--type", "A2")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["count"] == 5
    assert len(payload["variables"]) == 5


def test_enumerate_budget_exit_code(capsys):
    code, out, err = _run(capsys, "enumerate", "--type", "A3", "--budget-seeds", "2")
    assert code == EXIT_BUDGET
    assert out == ""
    assert err.startswith("qcluster: budget exceeded") and err.count("\n") == 1


def test_cc_char_simple_module_frozen(capsys):
    code, out, err = _run(
        capsys, "cc-char", "--type", "A2", "--p", "3", "--module", "1,0"
    )
    assert code == EXIT_OK
    terms = json.loads(out)["character"]["terms"]
    assert sorted(tuple(t["exp"]) for t in terms) == [(-1, 0, 1, 0), (-1, 1, 0, 0)]


def test_cc_char_shifted_injective_only(capsys):
    code, out, _ = _run(capsys, "cc-char", "--type", "A2", "--shift-injective", "1")
    assert code == EXIT_OK
    assert json.loads(out)["character"]["terms"] == [{"exp": [1, 0, 0, 0], "coeff": "1"}]


def test_cc_char_rejects_decomposable_dims(capsys):
    code, _, err = _run(capsys, "cc-char", "--type", "A2", "--module", "2,1")
    assert code == EXIT_USAGE
    assert "indecomposable" in err


@pytest.mark.parametrize("check", ["product", "injective", "extension"])
def test_verify_suites_pass_on_a2(capsys, check):
    code, out, err = _run(capsys, "verify", check, "--type", "A2", "--p", "2")
    assert code == EXIT_OK and err == ""
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["instances"]


def test_verify_generation_smallest_type(capsys):
    code, out, _ = _run(capsys, "verify", "generation", "--type", "A1", "--p", "2")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["instances"][0]["cluster_variables"] == 2


def test_verify_text_format(capsys):
    code, out, _ = _run(
        capsys, "verify", "extension", "--type", "A2", "--p", "2", "--format", "text"
    )
    assert code == EXIT_OK
    assert out.startswith("extension: ok (")


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = _run(
        capsys, "enumerate", "--type", "A1", "--out", str(target)
    )
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())["count"] == 2


def test_quiver_file_matches_builtin_type(tmp_path, capsys):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps({"vertices": 2, "arrows": [[1, 2]]}))
    _, out_file, _ = _run(capsys, "enumerate", "--quiver", str(path))
    _, out_type, _ = _run(capsys, "enumerate", "--type", "A2")
    assert json.loads(out_file)["variables"] == json.loads(out_type)["variables"]


def test_quiver_file_with_cycle_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": 2, "arrows": [[1, 2], [2, 1]]}))
    code, _, err = _run(capsys, "enumerate", "--quiver", str(path))
    assert code == EXIT_USAGE
    assert err.startswith("qcluster: ")


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "qcluster.cli", "enumerate", "--type", "A1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 2
