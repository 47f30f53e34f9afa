import json

import pytest

from zerolen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_lengths_command(capsys):
    code, payload = run_json(capsys, "lengths", "5", "(1)^5*(4)^5")
    assert code == 0
    assert payload == {"lengths": [2, 5], "delta": [3], "rho": "5/2", "min": 2, "max": 5}


def test_atoms_counts(capsys):
    code, payload = run_json(capsys, "atoms", "2x4")
    assert code == 0
    assert payload["counts"] == {"2": 5, "3": 9, "4": 16, "5": 8}
    assert payload["davenport"] == 5


def test_family_match_and_member(capsys):
    code, payload = run_json(capsys, "family", "match", "5", "--set", "2,5")
    assert code == 0 and payload["matches"]
    code, payload = run_json(capsys, "family", "member", "T46:L6", "--y", "0", "--k", "0")
    assert code == 0 and payload["member"] == [3, 5, 6]


def test_family_match_failure_exit_code(capsys):
    code, payload = run_json(capsys, "family", "match", "2x4", "--set", "2,5")
    assert code == 1 and payload["matches"] == []


def test_verify_pass(capsys):
    code, payload = run_json(capsys, "verify", "T46")
    assert code == 0
    assert payload["status"] == "pass"
    assert "seconds" not in payload  # suppressed under --json


def test_nm_commands(capsys):
    code, payload = run_json(capsys, "nm", "lengths", "2,3", "6")
    assert code == 0 and payload["lengths"] == [2, 3]
    code, payload = run_json(capsys, "nm", "invariants", "2,5")
    assert code == 0 and payload["elasticity"] == "5/2" and payload["min_delta"] == 3
    code, payload = run_json(capsys, "nm", "verify-57", "2,5", "--case", "b2")
    assert code == 1 and payload["status"] == "hypothesis-not-met"


def test_usage_errors(capsys):
    code = main(["lengths", "banana", "(1)"])
    assert code == 2
    code = main(["nope"])
    assert code == 2


def test_json_determinism(capsys):
    _, first = run(capsys, "system", "3", "--max-len", "8", "--json")
    _, second = run(capsys, "system", "3", "--max-len", "8", "--json")
    assert first == second


def test_threads_flag_does_not_change_reports(capsys):
    _, one = run(capsys, "verify", "T46", "--json", "--threads", "1")
    _, four = run(capsys, "verify", "T46", "--json", "--threads", "4")
    assert one == four
