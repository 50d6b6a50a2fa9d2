"""Byte-exact golden tests for every CLI subcommand, including error paths.

Golden files are produced by tests/make_goldens.py; regenerate them only
when an output format change is intended and review the diff.
"""
import json
import os
import subprocess
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "data")
GOLD = os.path.join(HERE, "goldens")

with open(os.path.join(GOLD, "manifest.json"), "r", encoding="utf-8") as fh:
    MANIFEST = json.load(fh)


def run_cli(argv, input_path=None, stdin_text=None):
    cmd = [sys.executable, "-m", "sl2rat.cli", *argv]
    if input_path is not None:
        cmd += ["--input", input_path]
    return subprocess.run(cmd, capture_output=True, text=True, input=stdin_text)


@pytest.mark.parametrize("case", MANIFEST, ids=[c["name"] for c in MANIFEST])
def test_golden(case):
    in_path = os.path.join(DATA, f"{case['name']}.json")
    with open(os.path.join(GOLD, f"{case['name']}.out"), "r", encoding="utf-8") as fh:
        expected = fh.read()
    proc = run_cli(case["argv"], input_path=in_path)
    assert proc.returncode == case["exit"], proc.stderr
    assert proc.stdout == expected


def test_every_subcommand_has_a_golden():
    covered = {tuple(c["argv"][:2]) if c["argv"][0] in ("pic", "ext") else (c["argv"][0],) for c in MANIFEST}
    expected = {
        ("validate",), ("casimir",), ("minpoly",), ("levels",), ("filtration",),
        ("devissage",), ("tensor",), ("hom",), ("dual",), ("iso",),
        ("classify-rank1",), ("rationalize",), ("solve-add",), ("solve-mult",),
        ("orbit",),
        ("pic", "normalize"), ("pic", "mul"), ("pic", "inv"),
        ("ext", "build"), ("ext", "casimir"), ("ext", "class-eq"),
    }
    assert expected <= covered


def test_error_paths_covered():
    error_cases = [c for c in MANIFEST if c["exit"] == 1]
    kinds = set()
    for c in error_cases:
        with open(os.path.join(GOLD, f"{c['name']}.out"), "r", encoding="utf-8") as fh:
            kinds.add(json.loads(fh.read())["error"]["type"])
    assert {"NotARepresentation", "ZeroDenominator", "ParseError",
            "InputError", "InvalidExtensionData", "LevelOutsideBaseField"} <= kinds


def test_usage_errors_exit_2():
    proc = run_cli(["not-a-command"])
    assert proc.returncode == 2
    assert proc.stdout == "" and "usage" in proc.stderr

    proc = run_cli(["pic", "not-an-action"])
    assert proc.returncode == 2

    proc = run_cli(["minpoly"], input_path=os.path.join(DATA, "no_such_file.json"))
    assert proc.returncode == 2
    assert "cannot read input" in proc.stderr


def test_stdin_input():
    with open(os.path.join(DATA, "minpoly.json"), "r", encoding="utf-8") as fh:
        doc = fh.read()
    proc = run_cli(["minpoly"], stdin_text=doc)
    assert proc.returncode == 0
    assert proc.stdout == '{"minpoly":"t^2 - t"}\n'


def test_repeat_runs_are_byte_identical():
    in_path = os.path.join(DATA, "devissage_ext.json")
    outs = {run_cli(["devissage", "--seed", "0"], input_path=in_path).stdout for _ in range(3)}
    assert len(outs) == 1
