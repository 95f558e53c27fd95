import itertools

import pytest

from actkit.enumeration import (
    Budget,
    EnumerationScope,
    act_tables,
    canonical_act_table,
    canonical_form,
    canonical_semigroup_table,
    enumerate_acts,
    enumerate_semigroups,
    semigroup_tables,
)
from actkit.errors import BudgetExceededError, MalformedInputError, SizeGuardError
from actkit.fixtures import load_semigroup
from actkit.semigroups import Semigroup, check_associativity

import oracles


def test_labeled_semigroup_counts():
    # n=1..3 against the brute table scan, n=4 against the frozen census
    for n in (1, 2, 3):
        got = sum(1 for _ in semigroup_tables(n))
        want = sum(1 for _ in oracles.brute_semigroup_tables(n))
        assert got == want
    assert sum(1 for _ in semigroup_tables(4)) == 3492


def test_iso_class_counts():
    assert sum(1 for _ in semigroup_tables(2, up_to_iso=True)) == 5
    assert sum(1 for _ in semigroup_tables(3, up_to_iso=True)) == 24


def test_monoid_counts():
    for n, want in ((2, 4), (3, 33), (4, 624)):
        got = sum(1 for _ in semigroup_tables(n, monoids_only=True))
        assert got == want
        for t in itertools.islice(semigroup_tables(n, monoids_only=True), 5):
            assert Semigroup(t).identity is not None


def test_orbit_sum_consistency():
    # sum of orbit sizes over iso classes equals the labeled count
    import itertools as it

    for n in (2, 3):
        labeled = set(semigroup_tables(n))
        classes = list(semigroup_tables(n, up_to_iso=True))
        total = 0
        for t in classes:
            orbit = set()
            for perm in it.permutations(range(n)):
                inv = [0] * n
                for old, new in enumerate(perm):
                    inv[new] = old
                orbit.add(
                    tuple(
                        tuple(perm[t[inv[i]][inv[j]]] for j in range(n))
                        for i in range(n)
                    )
                )
            assert orbit <= labeled
            total += len(orbit)
        assert total == len(labeled)


def test_every_emitted_table_is_associative():
    for t in semigroup_tables(3):
        assert check_associativity(t)


def test_act_counts_match_brute_scan():
    for name in ("r2", "z2", "m3"):
        s = load_semigroup(name)
        for m in (2, 3):
            got = sum(1 for _ in act_tables(s, m))
            want = sum(1 for _ in oracles.brute_act_tables(s, m))
            assert got == want, (name, m)


def test_trivial_monoid_has_one_act_per_size():
    one = Semigroup([[0]])
    for m in (1, 2, 3, 4):
        assert sum(1 for _ in act_tables(one, m)) == 1


def test_act_frozen_counts():
    r2 = load_semigroup("r2")
    assert sum(1 for _ in act_tables(r2, 2)) == 5
    z2 = load_semigroup("z2")
    assert sum(1 for _ in act_tables(z2, 2)) == 2


def test_act_iso_dedup_consistency():
    # every labeled table canonicalizes to exactly one emitted class
    z2 = load_semigroup("z2")
    labeled = set(act_tables(z2, 3))
    classes = list(act_tables(z2, 3, up_to_iso=True))
    canon = {canonical_act_table(t) for t in labeled}
    assert canon == set(classes)
    assert len(classes) == len(set(classes))


def test_canonical_semigroup_forms():
    z2a = ((0, 1), (1, 0))  # identity first
    z2b = ((1, 0), (0, 1))  # identity second
    assert canonical_semigroup_table(z2a) == canonical_semigroup_table(z2b)
    l2 = ((0, 0), (1, 1))
    r2 = ((0, 1), (0, 1))
    assert canonical_semigroup_table(l2) != canonical_semigroup_table(r2)


def test_canonical_form_bytes():
    z2 = load_semigroup("z2")
    b = canonical_form(z2)
    assert isinstance(b, bytes)
    assert b == canonical_form(Semigroup(((1, 0), (0, 1))))


def test_canonical_form_guard():
    big = Semigroup([[min(i, 7)] * 8 for i in range(8)])
    with pytest.raises(SizeGuardError):
        canonical_form(big)


def test_scope_guards():
    with pytest.raises(SizeGuardError):
        EnumerationScope(max_semigroup_order=5)
    EnumerationScope(max_semigroup_order=5, allow_order_5=True)
    with pytest.raises(SizeGuardError):
        EnumerationScope(max_semigroup_order=2, max_act_order=7)
    with pytest.raises(MalformedInputError):
        EnumerationScope(max_semigroup_order=2, filter="bogus")
    with pytest.raises(MalformedInputError):
        EnumerationScope(max_semigroup_order=0)


def test_scope_filters():
    scope = EnumerationScope(max_semigroup_order=3, filter="group")
    groups = list(enumerate_semigroups(scope))
    assert all(g.profile.is_group for g in groups)
    # 1 trivial + 2 labelings of Z2 + 3 of Z3
    assert len(groups) == 6


def test_enumerate_semigroups_deterministic():
    scope = EnumerationScope(max_semigroup_order=3)
    a = [s.table for s in enumerate_semigroups(scope)]
    b = [s.table for s in enumerate_semigroups(scope)]
    assert a == b


def test_budget_exhaustion():
    with pytest.raises(BudgetExceededError):
        list(semigroup_tables(3, budget=Budget(10)))
    r2 = load_semigroup("r2")
    with pytest.raises(BudgetExceededError):
        list(act_tables(r2, 4, budget=Budget(5)))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("ACTKIT_BUDGET", "123")
    assert Budget.from_env().limit == 123
    assert Budget.from_env(77).limit == 77
    monkeypatch.delenv("ACTKIT_BUDGET")
    assert Budget.from_env(None).limit is not None


def test_enumerate_acts_yields_valid_acts():
    m3 = load_semigroup("m3")
    for a in enumerate_acts(m3, 3):
        assert a.size == 3
        # identity column untouched
        assert all(a.action[x][m3.identity] == x for x in range(3))
