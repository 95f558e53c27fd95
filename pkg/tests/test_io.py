"""Text and JSON parsing: happy paths, roundtrips, and error reporting."""

import json

import pytest

from actkit.acts import Act
from actkit.errors import MalformedInputError
from actkit.fileio import (
    act_to_obj,
    congruence_blocks,
    format_act,
    format_semigroup,
    load_file,
    parse_act_text,
    parse_json,
    parse_semigroup_text,
    semigroup_to_obj,
)
from actkit.fixtures import ACTS, SEMIGROUPS, load_act, load_semigroup
from actkit.semigroups import Semigroup

R2_TEXT = """\
semigroup 2
0 1
0 1
"""

Z2_TEXT = """\
semigroup 2
0 1
1 0
identity 0
"""


def test_parse_semigroup():
    s = parse_semigroup_text(R2_TEXT)
    assert s.size == 2
    assert s.identity is None
    z2 = parse_semigroup_text(Z2_TEXT)
    assert z2.identity == 0


def test_semigroup_roundtrip():
    for name in SEMIGROUPS:
        s = load_semigroup(name)
        again = parse_semigroup_text(format_semigroup(s))
        assert again.table == s.table
        assert again.identity == s.identity


def test_act_roundtrip_inline():
    for name in ACTS:
        a = load_act(name)
        again = parse_act_text(format_act(a, over="inline"))
        assert again.action == a.action
        assert again.semigroup.table == a.semigroup.table


def test_json_roundtrip():
    s = load_semigroup("m3")
    back = parse_json(json.dumps({"semigroup": semigroup_to_obj(s)}))
    assert isinstance(back, Semigroup)
    assert back.table == s.table

    a = load_act("two_zero")
    back_a = parse_json(json.dumps({"act": act_to_obj(a)}))
    assert isinstance(back_a, Act)
    assert back_a.action == a.action


def test_parse_errors_carry_line_numbers():
    bad = "semigroup 2\n0 1\n0 2\n"
    with pytest.raises(MalformedInputError) as ei:
        parse_semigroup_text(bad)
    assert ":3:" in str(ei.value)  # source:line: message


def test_wrong_row_count():
    with pytest.raises(MalformedInputError):
        parse_semigroup_text("semigroup 3\n0 1 2\n0 1 2\n")


def test_nonassociative_input_rejected_with_cells():
    bad = "semigroup 2\n1 0\n0 0\n"
    with pytest.raises(MalformedInputError) as ei:
        parse_semigroup_text(bad)
    assert "associative" in str(ei.value)


def test_identity_declaration_checked():
    with pytest.raises(MalformedInputError):
        parse_semigroup_text("semigroup 2\n0 1\n1 0\nidentity 1\n")


def test_act_over_reference(tmp_path):
    (tmp_path / "base.sgp").write_text(R2_TEXT)
    act_text = "act 3 over base.sgp\n0 1\n0 1\n0 1\n"
    p = tmp_path / "three.act"
    p.write_text(act_text)
    a = load_file(str(p))
    assert isinstance(a, Act)
    assert a.size == 3
    assert a.semigroup.table == ((0, 1), (0, 1))


def test_act_axiom_violations_rejected():
    # over Z2 the swap row must square to the identity column
    bad = "act 2 over inline\nsemigroup 2\n0 1\n1 0\nidentity 0\n0 0\n1 0\n"
    with pytest.raises(MalformedInputError):
        parse_act_text(bad)


def test_load_file_dispatches_by_content(tmp_path):
    p1 = tmp_path / "x.sgp"
    p1.write_text(Z2_TEXT)
    assert isinstance(load_file(str(p1)), Semigroup)
    p2 = tmp_path / "x.json"
    p2.write_text(json.dumps({"semigroup": semigroup_to_obj(load_semigroup("u3"))}))
    assert isinstance(load_file(str(p2)), Semigroup)


def test_congruence_blocks_canonical():
    assert congruence_blocks([0, 0, 2]) == [0, 0, 2]
    assert congruence_blocks([1, 1, 0]) == [0, 0, 2]


def test_fixture_corpus_loads_and_validates():
    for name in SEMIGROUPS:
        assert load_semigroup(name).size >= 2
    for name in ACTS:
        assert load_act(name).size >= 2
    with pytest.raises(MalformedInputError):
        load_semigroup("no_such_fixture")
