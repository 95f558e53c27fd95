"""End-to-end CLI runs through main(argv), checking output and exit codes."""

import json

from actkit.cli import main
from actkit.fileio import parse_act_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_act_fixture(capsys):
    code, out, _ = run(capsys, "analyze", "two_zero")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "act"
    assert obj["uniform"] is True
    assert obj["sdi"] is True
    assert obj["zeros"] == [0, 1]
    assert obj["structure"]["kind"] == "ZeroCoproductZero"


def test_analyze_semigroup_runs_monoid_extras(capsys):
    code, out, _ = run(capsys, "analyze", "m3")
    obj = json.loads(out)
    assert code == 0
    assert obj["kind"] == "semigroup"
    assert obj["regular_act"]["uniform"] is False
    assert obj["regular_act"]["witness"]["failing_subact"] == [0, 1]
    assert obj["monoid_case"]["case"] == "NotUniform"
    assert obj["two_zero_construction"] is None


def test_analyze_w4_classification(capsys):
    code, out, _ = run(capsys, "analyze", "w4")
    obj = json.loads(out)
    assert obj["monoid_case"]["case"] == "GroupPlusTwoLeftZeros"
    assert obj["two_zero_construction"] is not None


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "definitely_missing")
    assert code == 2
    assert "no such file" in err


def test_analyze_parse_error_reports_line(tmp_path, capsys):
    p = tmp_path / "bad.sgp"
    p.write_text("semigroup 2\n0 1\n9 9\n")
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2
    assert ":3:" in err


def test_verify_single_and_json_report(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "ex1", "--json", str(out_path))
    assert code == 0
    assert "ex1" in out and "verified" in out
    data = json.loads(out_path.read_text())
    assert data[0]["theorem_id"] == "ex1"
    assert data[0]["verdict"] == "verified"


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2
    assert "nope" in err


def test_verify_budget_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "pr1", "--max-s", "3", "--budget", "20")
    assert code == 3
    assert "budget" in out


def test_enumerate_semigroups_text(capsys):
    code, out, err = run(capsys, "enumerate", "semigroups", "2")
    assert code == 0
    assert out.count("semigroup") == 9  # 1 of order 1, 8 of order 2
    assert "count: 9" in err


def test_enumerate_semigroups_jsonl_and_manifest(tmp_path, capsys):
    man = tmp_path / "man.json"
    code, out, _ = run(
        capsys, "enumerate", "semigroups", "2", "--jsonl", "--manifest", str(man)
    )
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert len(lines) == 9
    assert all(o["kind"] == "semigroup" for o in lines)
    manifest = json.loads(man.read_text())
    assert manifest["count"] == 9
    assert len(manifest["sha256"]) == 64


def test_enumerate_acts(capsys):
    code, out, err = run(capsys, "enumerate", "acts", "r2", "2", "--jsonl")
    assert code == 0
    lines = [json.loads(l) for l in out.splitlines() if l.strip()]
    assert len(lines) == 5
    assert "count: 5" in err


def test_enumerate_guard(capsys):
    code, _, err = run(capsys, "enumerate", "semigroups", "6")
    assert code == 2
    assert "guard" in err


def test_construct_two_zero_roundtrip(capsys):
    code, out, _ = run(capsys, "construct", "two-zero", "l21")
    assert code == 0
    act = parse_act_text(out)
    assert act.size == 3
    assert len(act.zeros) == 2


def test_construct_two_zero_none(capsys):
    code, out, _ = run(capsys, "construct", "two-zero", "z2")
    assert code == 0
    assert json.loads(out) == {"found": False}


def test_construct_amalgam(capsys):
    code, out, _ = run(
        capsys, "construct", "amalgam", "rees_factor_l21", "--generators", "2"
    )
    assert code == 0
    glued = parse_act_text(out)
    # two copies of the 3-element act glued along all of it: no growth
    assert glued.size == 3


def test_construct_power_json(capsys):
    code, out, _ = run(capsys, "construct", "power", "z2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["action"]) == 4


def test_construct_power_guard_on_nonmonoid_still_works(capsys):
    # power construction is defined for any semigroup
    code, out, _ = run(capsys, "construct", "power", "r2")
    assert code == 0
    assert parse_act_text(out).size == 4
