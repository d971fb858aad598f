import io
import json
import subprocess
import sys

import pytest

from supercrystal import verify
from supercrystal.cli import EXIT_BAD, EXIT_FAIL, EXIT_OK, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_component_dot():
    code, out = call("component", "--alphabet", "half:2", "--shape", "2,1")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'digraph "crystal" {' and lines[-1] == "}"
    assert lines[1] == '  N0[label="1 1/2 3/2"];'
    assert lines[9] == '  N0 -> N2[label="a[1/2]"];'
    assert out.count(" -> ") == 12


def test_component_json_matches_size():
    code, out = call("component", "--alphabet", "half:2", "--shape", "2,1", "--out", "json")
    data = json.loads(out)
    assert code == EXIT_OK and len(data["elements"]) == 8
    assert data["highest"] == ["1 1/2 3/2"]


def test_insert_text_golden():
    code, out = call("insert", "--word", "1 1/2 1 5/2 2 2", "--out", "text")
    assert code == EXIT_OK
    assert out == "P:\n1/2\n1 1\n2 2 5/2\nQ:\n2\n3 1\n6 5 4\n"


def test_enumerate_golden():
    code, out = call("enumerate", "--alphabet", "half:1", "--shape", "2", "--out", "text")
    assert (code, out) == (EXIT_OK, "1/2 1\n\n1 1\n")
    code, out = call("enumerate", "--alphabet", "half:1", "--shape", "2")
    assert len(json.loads(out)) == 2


def test_character_and_membership():
    code, out = call("character", "--alphabet", "half:1", "--shape", "2")
    assert (code, out) == (EXIT_OK, "z[1/2]*z[1] + z[1]^2\n")
    code, out = call("membership", "--poly", "z[1/2]*z[1] + z[1]^2", "--m", "0", "--n", "1")
    assert code == EXIT_OK and json.loads(out) == {"member": True, "witness": None}
    code, out = call("membership", "--poly", "z[1/2]", "--m", "0", "--n", "1")
    assert code == EXIT_OK and json.loads(out)["member"] is False


def test_decompose_tensor():
    code, out = call("decompose", "--alphabet", "half:2", "--shape", "1", "--times", "1", "--out", "text")
    assert (code, out) == (EXIT_OK, "1 x 1,1\n1 x 2\n")


def test_kite_decompose():
    code, out = call("decompose", "--alphabet", "mixed:1,2", "--body", "1", "--tail", "")
    assert code == EXIT_OK and json.loads(out)["components"] == [{"multiplicity": 1, "type": "(1|)"}]


def test_rsk_from_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"alphabet": "half:1", "entries": [["1", "1/2", 1], ["1/2", "1", 1]]}))
    code, out = call("rsk", "--matrix", str(path))
    data = json.loads(out)
    assert code == EXIT_OK and sum(data["shape"]) == 2
    assert data["P1"]["shape"] == data["P2"]["shape"] == data["shape"]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--alphabet", "nope:1", "--shape", "2"],
        ["enumerate", "--alphabet", "half:1"],
        ["enumerate", "--alphabet", "mn:2,1", "--shape", "1,2", "--kind", "ssyt"],
        ["insert", "--word", "1 7/3"],
        ["rsk", "--matrix", "/nonexistent.json"],
        ["component", "--alphabet", "half:3", "--word", "1/2 1/2 1 3/2", "--cap", "3"],
        ["membership", "--poly", "z[1"],
        ["verify", "--suite", "nope"],
        ["frobnicate"],
    ],
)
def test_bad_input_exits_2(argv):
    code, out = call(*argv)
    assert code == EXIT_BAD and out == ""


def test_verify_failure_exits_1(monkeypatch):
    def broken():
        res = verify.SuiteResult("broken")
        res.check(False, "always fails")
        return res

    monkeypatch.setitem(verify.SUITES, "broken", (broken, 1.0))
    code, out = call("verify", "--suite", "broken")
    assert code == EXIT_FAIL
    assert "FAIL" in out and "always fails" in out


def test_verify_pass():
    code, out = call("verify", "--suite", "fig2")
    assert code == EXIT_OK and "PASS" in out


def test_output_is_deterministic():
    argv = ["component", "--alphabet", "mixed:1,1", "--body", "1", "--tail", "1", "--out", "json"]
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "supercrystal", "character", "--alphabet", "half:1", "--shape", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "z[1/2] + z[1]\n"
