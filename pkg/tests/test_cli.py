import io
import json
import subprocess
import sys

import jsonschema
import pytest

from intvalg import alg_quaternion, builtin
from intvalg.cli import RESULT_SCHEMA, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--json", *argv)
    rec = json.loads(text)
    jsonschema.validate(rec, RESULT_SCHEMA)
    return code, rec


def test_phi():
    assert run("phi", "2", "2") == (0, "X^6 - X^5 - X^3 + X^2\n")
    assert run("phi", "2", "1") == (0, "X^2 - X\n")


def test_phi_error(capsys):
    code, _ = run("phi", "6", "1")
    assert code == 2
    assert "NotPrimePower" in capsys.readouterr().err


@pytest.mark.parametrize("name,expected", [
    ("matrix:2", "X^6 + X^5 + X^3 + X^2"),
    ("stabilizer:2,1", "X^4 + X^2"),
    ("centralizer:2,2", "X^4 + X"),
])
def test_nullideal(name, expected):
    code, text = run("nullideal", "--builtin", name, "--fq", "2,1")
    assert code == 0 and text.splitlines()[0] == expected


def test_nullideal_over_extension_field():
    code, text = run("nullideal", "--builtin", "matrix:1", "--fq", "2,2")
    assert code == 0 and text.splitlines()[0] == "X^4 + X"


def test_member():
    code, text = run("member", "--g", "X^2-X", "--d", "2", "--builtin", "matrix:2")
    assert code == 1
    lines = text.splitlines()
    assert lines[0] == "NOT MEMBER" and lines[1] == "counterexample: 0,1;0,0"
    code, text = run("member", "--g", "X^2-X", "--d", "2", "--builtin", "z")
    assert (code, text.splitlines()[0]) == (0, "MEMBER")
    code, text = run("member", "--phi", "2,2", "--d", "2", "--builtin", "matrix:2")
    assert (code, text.splitlines()[0]) == (0, "MEMBER")
    code, rec = run_json("member", "--g", "X^2-X", "--d", "2", "--builtin", "zi")
    assert code == 1 and rec["verdict"] == "NOT MEMBER" and rec["counterexample"] == "i"


def test_member_argument_errors():
    assert run("member", "--d", "2", "--builtin", "z")[0] == 2
    assert run("member", "--g", "X^^2", "--d", "2", "--builtin", "z")[0] == 2
    assert run("member", "--g", "X", "--d", "0", "--builtin", "z")[0] == 2
    assert run("member", "--g", "X", "--d", "2", "--builtin", "octonion")[0] == 2


def test_enumeration_cap():
    code, rec = run_json("--max-enum", "100", "member", "--g", "X", "--d", "2", "--builtin", "matrix:3")
    assert code == 3 and rec["verdict"] == "ENUMERATION CAP"
    code, _ = run("member", "--phi", "2,3", "--d", "2", "--builtin", "matrix:3", "--max-enum", "1000")
    assert code == 0


def test_witness():
    code, text = run("witness", "2", "1", "2")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "(X^6 - X^5 - X^3 + X^2)/2"
    assert lines[1] == "VERIFIED over 16 elements"
    code, text = run("witness", "3", "2", "2")
    assert code == 0 and "VERIFIED over 6561 elements" in text


def test_quatsplit():
    code, text = run("quatsplit", "13", "2")
    assert code == 0
    assert text.splitlines()[0] == "a=70, b=0"
    assert "ISOMORPHISM VERIFIED" in text
    assert run("quatsplit", "2", "1")[0] == 2


def test_split():
    code, text = run("split", "--builtin", "zi", "--p", "5")
    assert (code, text.splitlines()[0]) == (0, "SPLIT")
    code, text = run("split", "--builtin", "zi", "--p", "3")
    assert (code, text.splitlines()[0]) == (1, "NOT SPLIT")
    assert run("split", "--builtin", "zi", "--p", "4")[0] == 2


def test_compare():
    code, text = run("compare", "--a", "quaternion", "--b", "matrix:2", "--ds", "3,9", "--degree-bound", "12")
    assert code == 0 and text.count("EQUAL") == 2
    code, rec = run_json("compare", "--a", "matrix:2", "--b", "stabilizer:2,1", "--ds", "2")
    assert code == 1 and rec["verdict"] == "UNEQUAL" and rec["counterexample"] == "X^4 + X^2"
    assert run("compare", "--a", "quaternion", "--b", "matrix:2", "--ds", "9")[0] == 2


def test_nontrivial():
    code, text = run("nontrivial", "--builtin", "zi", "--p", "3")
    assert code == 0 and "certificate (X^9 - X)/3" in text
    code, rec = run_json("nontrivial", "--builtin", "centralizer:2,2", "--p", "2")
    assert code == 0 and rec["certificate_poly"] == "(X^4 + X)/2"


def test_spec_file_ingestion(tmp_path):
    path = tmp_path / "quat.json"
    path.write_text(alg_quaternion().dumps())
    code, text = run("member", "--phi", "3,2", "--d", "3", "--spec", str(path))
    assert (code, text.splitlines()[0]) == (0, "MEMBER")
    code, _ = run("compare", "--a", str(path), "--b", "matrix:2", "--ds", "3")
    assert code == 0
    code, text = run("nullideal", "--spec", str(path), "--fq", "3,1")
    assert text.splitlines()[0] == "X^12 + 2X^10 + 2X^4 + X^2"
    bad = tmp_path / "bad.json"
    bad.write_text('{"rank": 2, "ring": "Z", "unit": [1, 0], "constants": [[0, 0, 1, 1]]}')
    assert run("split", "--spec", str(bad), "--p", "2")[0] == 2
    assert run("split", "--spec", str(tmp_path / "missing.json"), "--p", "2")[0] == 2


def test_json_records_and_determinism():
    cmds = [
        ["phi", "3", "2"],
        ["nullideal", "--builtin", "matrix:2", "--fq", "2,1"],
        ["witness", "2", "2", "2"],
        ["split", "--builtin", "dsum:2", "--p", "3"],
        ["quatsplit", "5", "2"],
        ["nontrivial", "--builtin", "matrix:2", "--p", "2"],
        ["phi", "6", "1"],
    ]
    for argv in cmds:
        _, a = run_json(*argv, "--seed", "3")
        _, b = run_json(*argv, "--seed", "3")
        a.pop("wall_time_ms"), b.pop("wall_time_ms")
        assert a == b and a["op"] == argv[0]
        assert a["inputs"]["seed"] == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "intvalg", "phi", "3", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "X^3 - X\n"


def test_centralizer_builtin_over_z_uses_prime():
    code, _ = run("member", "--g", "X^4-X", "--d", "2", "--builtin", "centralizer:2,2")
    assert code == 0
    assert builtin("centralizer:2,2", prime=2).rank == 2
