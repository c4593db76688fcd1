import json
from pathlib import Path

import pytest

from bandforge import gen
from bandforge.cli import main
from bandforge.cone import save_cone

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def ex49_file():
    return GOLDEN / "example49.json"


@pytest.fixture
def cube_file():
    return GOLDEN / "cube_apex.json"


def test_validate(capsys, ex49_file, tmp_path):
    assert run(capsys, "validate", ex49_file)[:2] == (0, "valid\n")
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "unit": ["1", "1"], "functionals": [["1", "0"]]}')
    code, out, _ = run(capsys, "validate", bad)
    assert code == 1 and "rank 1 < 2" in out
    code, out, _ = run(capsys, "validate", "--json", bad)
    assert code == 1 and json.loads(out)["valid"] is False


def test_lambda(capsys, tmp_path):
    f = tmp_path / "red.json"
    spec = gen.example49()
    mid = tuple((a + b) / 2 for a, b in zip(spec.functionals[0], spec.functionals[1]))
    save_cone(type(spec)(4, spec.unit, list(spec.functionals) + [mid]), f)
    code, out, _ = run(capsys, "lambda", f)
    assert code == 0 and out.startswith("|Lambda| = 5 of 6 functionals")
    code, out, _ = run(capsys, "lambda", "--json", f)
    doc = json.loads(out)
    assert [e["source_index"] for e in doc["lambda"]] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("name", ["example49", "cube_apex"])
def test_bands_json_golden(capsys, name):
    code, out, _ = run(capsys, "bands", "--json", GOLDEN / f"{name}.json")
    assert code == 0
    assert out == (GOLDEN / f"{name}_report.json").read_text()


def test_bands_example49(capsys, ex49_file):
    code, out, _ = run(capsys, "bands", "--json", ex49_file)
    doc = json.loads(out)
    assert doc["schema"] == "bandforge.report/1"
    assert doc["counts"]["bands"] == 16
    assert doc["bound"] == {"dim": 4, "bound": "16384", "holds": True}
    code, out, _ = run(capsys, "bands", "--table", ex49_file)
    assert "16 bands" in out


def test_bands_lattice(capsys, tmp_path):
    f = tmp_path / "lat.json"
    assert run(capsys, "generate", "standard_lattice", "--n", 3, "-o", f)[0] == 0
    code, out, _ = run(capsys, "bands", f)
    assert code == 0 and "8 bands, 8 directed" in out


def test_bands_deterministic(capsys, cube_file):
    a = run(capsys, "bands", cube_file)
    b = run(capsys, "bands", cube_file)
    assert a == b


def test_saturated(capsys, ex49_file):
    code, out, _ = run(capsys, "saturated", ex49_file)
    assert code == 0 and out.startswith("24 saturated sets")
    code, out, _ = run(capsys, "saturated", "--bisaturated", "--json", ex49_file)
    doc = json.loads(out)
    assert doc["kind"] == "bisaturated" and doc["count"] == 16


def test_disjoint(capsys, ex49_file):
    code, out, _ = run(capsys, "disjoint", ex49_file, "--x=1,1,-1,-1", "--y=1,1,-1,-1")
    assert code == 0 and out.endswith("not disjoint\n")
    assert "phi5: phi(x) = 4, phi(y) = 4  both nonzero" in out
    code, out, _ = run(capsys, "disjoint", ex49_file, "--x=1,1,-1,-1", "--y=0,1,0,0")
    assert code == 0 and out.endswith("\ndisjoint\n")
    code, _, err = run(capsys, "disjoint", ex49_file, "--x=1,1", "--y=0,1,0,0")
    assert code == 2 and "parse error" in err


def test_extend(capsys, cube_file):
    code, out, _ = run(capsys, "extend", cube_file, "--n-set", "v1,v3,v5,v7,v9", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["proc_i"] == ["v2", "v4", "v6", "v8", "v9"]
    assert doc["proc_ii"] == ["v2", "v4", "v6", "v8"]
    code, out, _ = run(capsys, "extend", cube_file, "--n-set", "1,3,5,7,9")
    assert code == 0 and "procedure I  carrier: {v2, v4, v6, v8, v9}" in out
    code, out, _ = run(capsys, "extend", cube_file, "--n-set", "v1,v3")
    assert code == 1 and "not bisaturated" in out
    code, _, err = run(capsys, "extend", cube_file, "--n-set", "v42")
    assert code == 2


def test_generate_stdout_and_seed(capsys):
    code, out, _ = run(capsys, "generate", "general_position", "--n", 2, "--seed", 0)
    assert code == 0 and out == (GOLDEN / "general_position_n2_s0.json").read_text()
    code, _, err = run(capsys, "generate", "general_position", "--n", 0)
    assert code == 1


def test_check(capsys, ex49_file):
    code, out, _ = run(capsys, "check", ex49_file)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 8 and all(line.startswith("PASS") for line in lines)


def test_exit_codes(capsys, tmp_path, ex49_file):
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run(capsys, "bands", broken)[0] == 2
    assert run(capsys, "bands", tmp_path / "missing.json")[0] == 2
    line = tmp_path / "line.json"
    line.write_text('{"dim": 2, "unit": ["1", "1"], "functionals": [["1", "0"]]}')
    assert run(capsys, "bands", line)[0] == 1
    code, _, err = run(capsys, "bands", "--cap", 4, ex49_file)
    assert code == 3 and "cap" in err


def test_env_cap(capsys, monkeypatch, ex49_file):
    monkeypatch.setenv("BANDFORGE_CAP", "2")
    assert run(capsys, "bands", ex49_file)[0] == 3
    assert run(capsys, "check", ex49_file)[0] == 3
