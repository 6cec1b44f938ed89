import json
import subprocess
import sys

import pytest

from superlogic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "P + n(Q)", "--assign", "P=1", "--assign", "Q=1")
    assert code == 0 and out.strip() == "1+n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "a | b", "--assign", "a=1", "--assign", "b=0", "--json")
    data = json.loads(out)
    assert data == {"expression": "a | b", "semantics": "xor", "valuation": {"a": "1", "b": "0"}, "value": "1+n"}


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--semantics", "or", "eval", "n | n", "--json")
    assert json.loads(out)["value"] == "n"


def test_check_fails_with_witness(capsys):
    code, out, _ = run(capsys, "check", "x|(y&z)", "(x|y)&(x|z)")
    assert code == 1
    assert "x=0, y=1, z=1" in out and "lhs=1+n" in out


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", "!!x", "x", "--semantics", "or")
    assert code == 0 and out.startswith("holds")


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "x & x", "x", "--json")
    data = json.loads(out)
    assert data["holds"] is False and data["witness"] == {"x": "n"}


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "n(x)", "--json")
    data = json.loads(out)
    assert [r["out"] for r in data["rows"]] == ["0", "n", "0", "n"]


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "x & y")
    assert code == 0 and len(out.strip().splitlines()) == 18


def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "(P1 + n(Q12)) & (P2 + n(Q21))", "--semantics", "or")
    assert out.splitlines() == ["P: P1 & P2", "Q: P1 & Q21 | Q12 & P2"]
    code, out, _ = run(capsys, "canon", "x", "--split-atoms", "--json")
    assert json.loads(out)["q"] == "x_soul"


def test_laws_match_expectation(capsys):
    for sem in ("xor", "or"):
        code, out, _ = run(capsys, "laws", "--semantics", sem)
        assert code == 0 and "matches expectation: yes" in out


def test_laws_mismatch_exit_1(capsys, tmp_path):
    path = tmp_path / "exp.json"
    path.write_text(json.dumps({"xor": []}))
    code, _, _ = run(capsys, "laws", "--expect", str(path))
    assert code == 1


def test_laws_json_schema(capsys):
    code, out, _ = run(capsys, "laws", "--json")
    data = json.loads(out)
    assert data["semantics"] == "xor"
    assert all({"name", "holds", "witness"} <= set(r) for r in data["results"])


def test_chars(capsys):
    code, out, _ = run(capsys, "chars", "--json")
    assert json.loads(out)["count"] == 0
    code, out, _ = run(capsys, "chars", "--char-sum", "or", "--json")
    assert json.loads(out)["characters"] == [{"0": 0, "1": 1, "n": 0, "1+n": 1}]
    code, out, _ = run(capsys, "chars")
    assert code == 0 and "no characters" in out


def test_vfields(capsys):
    code, out, _ = run(capsys, "vfields", "--json")
    data = json.loads(out)
    assert data["candidates"] == 256 and data["count"] == len(data["fields"])
    assert set(data["closure"]) == {"not", "or", "and"}


def test_cohomology_generators(capsys):
    code, out, _ = run(capsys, "cohomology", "--generators", "unit", "--max-degree", "2", "--json")
    data = json.loads(out)
    assert data["dims"] == [1, 2, 4] and data["betti"][0] == 1 and data["top_degree_truncated"]


def test_cohomology_file(capsys, tmp_path):
    path = tmp_path / "cx.json"
    path.write_text(json.dumps({"dims": [2, 1], "differentials": [{"rows": 1, "cols": 2, "bits": [[1, 1]]}]}))
    code, out, _ = run(capsys, "cohomology", "--complex", str(path), "--json")
    assert json.loads(out)["betti"] == [1, 0]


def test_cohomology_rejects_bad_complex(capsys, tmp_path):
    path = tmp_path / "bad.json"
    bad = {"rows": 1, "cols": 1, "bits": [[1]]}
    path.write_text(json.dumps({"dims": [1, 1, 1], "differentials": [bad, bad]}))
    code, _, err = run(capsys, "cohomology", "--complex", str(path))
    assert code == 2 and "d_1 d_0" in err


def test_cohomology_save(capsys, tmp_path):
    path = tmp_path / "out.json"
    run(capsys, "cohomology", "--generators", "0101", "--max-degree", "1", "--save", str(path))
    assert json.loads(path.read_text())["dims"] == [1, 4]


def test_two_slit_json(capsys):
    code, out, _ = run(capsys, "demo", "two-slit", "--p1", "0.5", "--p2", "0.5", "--q12", "0.1", "--q21", "0.1", "--json")
    data = json.loads(out)
    assert data["body"] == pytest.approx(0.25, abs=1e-12)
    assert data["interference"] == pytest.approx(0.1, abs=1e-12)


def test_two_slit_range(capsys):
    with pytest.raises(SystemExit) as info:
        main(["demo", "two-slit", "--p1", "2", "--p2", "0", "--q12", "0", "--q21", "0"])
    assert info.value.code == 2


def test_epr_stub(capsys):
    code, _, err = run(capsys, "demo", "epr")
    assert code == 2 and "not implemented" in err


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "eval", "a &")
    assert code == 2 and "byte 3" in err and "grammar:" in err


def test_reserved_assignment(capsys):
    code, _, err = run(capsys, "eval", "n", "--assign", "n=1")
    assert code == 2


def test_unbound_atom(capsys):
    code, _, err = run(capsys, "eval", "a & b", "--assign", "a=1")
    assert code == 2 and "'b'" in err


def test_bad_value(capsys):
    code, _, _ = run(capsys, "eval", "a", "--assign", "a=2")
    assert code == 2


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "superlogic", "laws", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
