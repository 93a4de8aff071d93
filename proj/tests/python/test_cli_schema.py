import json
import os
import pathlib
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("DARBOUXKIT_CLI")

COMMANDS = [
    (["extactic", "fixtureA", "--n", "1"], 0),
    (["extactic", "linear2", "--n", "2", "--reduced"], 0),
    (["darboux", "fixtureA", "--max-degree", "1"], 0),
    (["darboux", "linear2", "--max-degree", "3"], 3),
    (["first-integral", "linear2", "--max-degree", "3"], 0),
    (["first-integral", "fixtureA", "--max-degree", "1"], 4),
    (["integrating-factor", "linear2", "--max-degree", "1"], 0),
    (["integrating-factor", "exponential3", "--max-degree", "3"], 0),
    (["inverse-integrating-factor", "linear2", "--degree", "2"], 0),
    (["bench", "exponential", "--d", "4", "--run", "--max-degree", "1"], 0),
]


@pytest.mark.skipif(not CLI, reason="DARBOUXKIT_CLI not set")
@pytest.mark.parametrize("args,status", COMMANDS)
def test_json_output_matches_schema(args, status):
    schema = json.loads((ROOT / "schema" / "result.schema.json").read_text())
    run = subprocess.run([CLI, "--json", *args], capture_output=True, text=True, cwd=ROOT)
    assert run.returncode == status
    doc = json.loads(run.stdout)
    jsonschema.validate(doc, schema)
    assert doc["exit_code"] == status
    assert doc["verify"] is not False


@pytest.mark.skipif(not CLI, reason="DARBOUXKIT_CLI not set")
def test_precondition_exit_code():
    run = subprocess.run([CLI, "darboux", "fixtureA", "--max-degree", "0"], capture_output=True, text=True)
    assert run.returncode == 2
