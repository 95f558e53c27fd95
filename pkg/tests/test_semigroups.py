import pytest

from actkit.errors import MalformedInputError
from actkit.fixtures import load_semigroup
from actkit.semigroups import (
    Semigroup,
    adjoin_identity,
    check_associativity,
    cyclic_group,
    find_associativity_violation,
    left_zero_semigroup,
    right_zero_semigroup,
    subgroups,
    unit_group,
)

import oracles


# frozen by scanning all 16 two-element tables: this one breaks (0*0)*1 = 0*(0*1)
NON_ASSOC = [[1, 0], [0, 0]]


def test_non_associative_table_rejected():
    assert find_associativity_violation(NON_ASSOC) is not None
    assert not check_associativity(NON_ASSOC)
    with pytest.raises(MalformedInputError):
        Semigroup(NON_ASSOC)


def test_the_frozen_nonassoc_example_really_is_the_only_check_needed():
    # cross-check the constant against the oracle scan of all 2x2 tables
    good = set(oracles.brute_semigroup_tables(2))
    assert tuple(tuple(r) for r in NON_ASSOC) not in good
    assert len(good) == 8


def test_ragged_and_out_of_range_tables_rejected():
    with pytest.raises(MalformedInputError):
        Semigroup([[0, 1], [0]])
    with pytest.raises(MalformedInputError):
        Semigroup([[0, 2], [0, 1]])


def test_identity_detection():
    z2 = load_semigroup("z2")
    assert z2.identity == 0
    assert z2.is_monoid
    r2 = load_semigroup("r2")
    assert r2.identity is None
    assert not r2.is_monoid


def test_declared_identity_must_match():
    with pytest.raises(MalformedInputError):
        Semigroup([[0, 1], [1, 0]], identity=1)


def test_r2_profile():
    r2 = load_semigroup("r2")
    p = r2.profile
    assert p.is_right_zero_semigroup
    assert not p.is_left_zero_semigroup
    assert p.idempotents == frozenset({0, 1})
    assert p.left_identities == frozenset({0, 1})
    assert p.right_zeros == frozenset({0, 1})
    assert p.is_regular
    assert p.is_left_reversible  # sS = S for every s in a right zero semigroup
    assert p.is_right_simple
    l2 = load_semigroup("l2")
    assert not l2.profile.is_left_reversible  # 0S = {0}, 1S = {1} are disjoint


def test_group_profiles():
    for name in ("z2", "k4"):
        g = load_semigroup(name)
        assert g.profile.is_group
        assert g.profile.is_left_cancellative
        assert g.profile.is_right_simple
        assert g.profile.unit_group == frozenset(g.elements)


def test_m3_is_adjoined_identity_of_r2():
    r2 = load_semigroup("r2")
    m3 = load_semigroup("m3")
    assert adjoin_identity(r2).table == m3.table
    assert m3.identity == 2


def test_adjoin_identity_is_a_no_op_on_monoids():
    # the S^1 convention: adjoin only when there is no identity yet
    z2 = load_semigroup("z2")
    assert adjoin_identity(z2) is z2


def test_mul_and_powers():
    z2 = load_semigroup("z2")
    assert z2.mul(1, 1) == 0
    assert z2.power(1, 2) == 0
    assert z2.power(1, 3) == 1
    assert set(z2.powers(1)) == {0, 1}


def test_right_ideals():
    m3 = load_semigroup("m3")
    # eS^1 = {e, f}: e*e=e, e*f=f, e*1=e
    assert m3.right_ideal(0) == frozenset({0, 1})
    assert m3.is_right_ideal({0, 1})
    assert not m3.is_right_ideal({0})  # 0*1... 0*f = f leaves {0}
    assert m3.right_ideal(0, with_generator=False) == frozenset({0, 1})


def test_unit_group_split():
    u3 = load_semigroup("u3")
    units, rest = unit_group(u3)
    assert units == frozenset({0, 1})
    assert rest == frozenset({2})


def test_subgroup_counts_match_subset_scan():
    for name, order in (("z2", 2), ("k4", 4)):
        g = load_semigroup(name)
        assert len(subgroups(g)) == oracles.subgroup_count(g.table, g.identity)
        assert g.size == order


def test_factories():
    assert right_zero_semigroup(2).table == load_semigroup("r2").table
    assert left_zero_semigroup(2).table == load_semigroup("l2").table
    assert cyclic_group(2).table == load_semigroup("z2").table
    assert cyclic_group(4).profile.is_group


def test_inverse_of():
    k4 = load_semigroup("k4")
    for x in k4.elements:
        assert k4.mul(x, k4.inverse_of(x)) == k4.identity
