import json
import shutil
import subprocess

import pytest

from golden_runner import run_command, sessions, transcript

SESSIONS = sessions()


def test_there_are_ten_sessions_covering_every_subcommand():
    assert len(SESSIONS) == 10
    text = "\n".join(s.read_text(encoding="utf-8") for s in SESSIONS)
    for command in ["ord-sum", "instances", "normalize", "eq", "decompose", "simple-sum", "sift", "shuffle-sum",
                    "encode", "decode", "check-table", "bicolor enum", "selftest"]:
        assert command in text, command


@pytest.mark.parametrize("session", SESSIONS, ids=lambda p: p.stem)
def test_golden_session(session):
    expected = session.with_suffix(".out").read_bytes()
    assert transcript(session).encode("utf-8") == expected


def test_spec_examples():
    assert run_command(["ord-sum", "--op", "hess", "w*3", "w*2"]) == ("w*5\n", "", 0)
    assert run_command(["eq", "w + w", "w*2"]) == ("true\n", "", 0)
    out, _, code = run_command(["instances", "w", "w"])
    assert out.splitlines()[:2] == ["w", "w*2"] and out.splitlines()[2].startswith("bounds:") and code == 0


def test_json_records():
    out, _, code = run_command(["--json", "instances", "w", "w"])
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert all(set(r) == {"v", "kind", "expr", "meta"} and r["v"] == 1 for r in records)
    assert [r["expr"] for r in records if r["kind"] == "instance"] == ["w", "w*2"]


def test_output_is_deterministic():
    argv = ["bicolor", "enum", "3", "3", "--list"]
    assert run_command(argv) == run_command(argv)


def test_capacity_override(monkeypatch):
    monkeypatch.setenv("ORDSUM_CAPACITY", "1,1")
    out, err, code = run_command(["instances", "w^3", "w"])
    assert code == 3 and out == "" and err.startswith("error: ")


def test_usage_errors_exit_2():
    assert run_command([])[2] == 2
    assert run_command(["bicolor"])[2] == 2
    assert run_command(["selftest", "nosuch"])[2] == 2


@pytest.mark.skipif(shutil.which("ordsum") is None, reason="console script not installed")
def test_installed_entry_point():
    done = subprocess.run(["ordsum", "normalize", "Q + 1 + Q"], capture_output=True, text=True, check=False)
    assert (done.stdout, done.returncode) == ("Q\n", 0)
