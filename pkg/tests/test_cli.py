"""Command-line interface: exit codes, output shapes, determinism."""

import hashlib
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "transcript_schema.json"


def run_cli(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run(
        [sys.executable, "-m", "ghzswap", *args],
        capture_output=True,
        text=True,
        env=merged,
    )


def test_swap_same_bell_pair():
    res = run_cli("swap", "2:0:+", "2:0:+")
    assert res.returncode == 0
    rows = [l for l in res.stdout.splitlines() if l.strip().startswith("2:")]
    assert len(rows) == 4
    assert all("0.250000" in row for row in rows)


def test_swap_opposite_signs_pairs_differ():
    res = run_cli("swap", "2:0:+", "2:0:-", "--json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["method"] == "closed_form"
    assert all(p["measured"] != p["residual"] for p in payload["pairs"])


def test_swap_bitstring_form_json():
    res = run_cli("swap", "GHZ(0101,+)", "GHZ(0101,+)", "--json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert len(payload["pairs"]) == 4
    assert all(p["measured"] == p["residual"] for p in payload["pairs"])


def test_swap_oracle_fallback_notice():
    res = run_cli("swap", "3:1:+", "3:1:+", "--cut", "1,1", "--json")
    assert res.returncode == 0
    assert "closed form unavailable" in res.stderr
    assert json.loads(res.stdout)["method"] == "oracle"


def test_parse_failure_exits_2():
    res = run_cli("swap", "garbage")
    assert res.returncode == 2
    assert "error" in res.stderr


def test_usage_failure_exits_2():
    res = run_cli("verify")
    assert res.returncode == 2


def test_resource_cap_exits_3():
    res = run_cli("verify", "--sghz", "14")
    assert res.returncode == 3


def test_verify_bell_exhaustive():
    res = run_cli("verify", "--bell-exhaustive")
    assert res.returncode == 0
    assert "verified 16 specs, 0 failures" in res.stdout


def test_verify_multi_bell_triples():
    res = run_cli("verify", "--multi", "3", "2")
    assert res.returncode == 0
    assert "verified 64 specs, 0 failures" in res.stdout


def test_verify_random_seeded():
    res = run_cli("verify", "--random", "20", "--seed", "7")
    assert res.returncode == 0
    assert "verified 20 specs, 0 failures" in res.stdout


def test_protocol_qpc_equal_exit_0():
    res = run_cli("protocol", "qpc", "--x", "6", "--y", "6", "--bits", "3", "--seed", "1")
    assert res.returncode == 0
    assert json.loads(res.stdout)["derived"]["verdict"] == "equal"


def test_protocol_qss_reconstructs():
    res = run_cli("protocol", "qss", "--parties", "4", "--seed", "1")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert payload["derived"]["reconstructed"] == payload["derived"]["secret"]


def test_protocol_qkd_eve_exit_4():
    res = run_cli("protocol", "qkd", "--n", "8", "--l", "2", "--eve", "1.0", "--seed", "1")
    assert res.returncode == 4
    assert json.loads(res.stdout)["checks"]["detected"]


def test_protocol_transcript_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA_PATH.read_text())
    res = run_cli("protocol", "qkd", "--n", "4", "--l", "1", "--seed", "9", "--decoy", "1")
    jsonschema.validate(json.loads(res.stdout), schema)


def test_env_var_default_seed():
    explicit = run_cli("protocol", "qss", "--parties", "3", "--seed", "17")
    via_env = run_cli("protocol", "qss", "--parties", "3", env={"GHZSWAP_SEED": "17"})
    assert explicit.stdout == via_env.stdout


def test_out_file(tmp_path):
    target = tmp_path / "t.json"
    res = run_cli("protocol", "qpc", "--x", "1", "--y", "1", "--bits", "2",
                  "--seed", "2", "--out", str(target))
    assert res.returncode == 0
    assert json.loads(target.read_text())["protocol"] == "qpc"


@pytest.mark.parametrize(
    "args",
    [
        ("swap", "GHZ(0101,+)", "GHZ(0101,-)", "--json"),
        ("verify", "--random", "10", "--seed", "3"),
        ("protocol", "qkd", "--n", "6", "--l", "2", "--seed", "5"),
        ("protocol", "qss", "--parties", "4", "--seed", "5", "--eve", "0.5"),
    ],
)
def test_byte_identical_reruns(args):
    first = run_cli(*args)
    second = run_cli(*args)
    digest = lambda s: hashlib.sha256(s.encode()).hexdigest()
    assert digest(first.stdout) == digest(second.stdout)
    assert first.returncode == second.returncode
