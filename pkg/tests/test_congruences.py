"""Closure, the lattice operations, and the full-lattice builders, each
checked against a slow independent recomputation."""

import itertools

import pytest

from actkit.acts import regular_act
from actkit.congruences import (
    Congruence,
    all_congruences,
    all_monocyclics,
    congruence_closure,
    congruences_by_partition_filter,
    diagonal,
    full,
    group_congruence_bijection,
    is_right_congruence,
    join,
    kernel_congruence,
    meet,
    monocyclic,
    normalize_labels,
    rees_congruence,
    set_partitions,
)
from actkit.errors import InvariantViolationError, MalformedInputError
from actkit.fixtures import load_act, load_semigroup
from actkit.semigroups import cyclic_group

import oracles


@pytest.fixture(scope="module")
def m3_reg():
    return regular_act(load_semigroup("m3"))


@pytest.fixture(scope="module")
def tz():
    return load_act("two_zero")


def test_normalize_labels():
    assert normalize_labels([5, 5, 7]) == (0, 0, 2)
    assert normalize_labels([0, 1, 2]) == (0, 1, 2)
    assert normalize_labels([2, 1, 2]) == (0, 1, 0)


def test_diagonal_and_full(m3_reg):
    d = diagonal(m3_reg)
    f = full(m3_reg)
    assert d.is_diagonal and not d.is_full
    assert f.is_full and not f.is_diagonal
    assert d.n_blocks == 3 and f.n_blocks == 1
    assert d.le(f)


def test_congruence_validation(m3_reg):
    # on L21 = {a,b,1}: merging {a,1} but not b breaks at right translation
    # by b, since a*b = a while 1*b = b
    l21_reg = regular_act(load_semigroup("l21"))
    with pytest.raises(InvariantViolationError):
        Congruence(l21_reg, [0, 1, 0], check=True)
    assert not is_right_congruence(l21_reg, [0, 1, 0])
    # every partition of the M3 carrier happens to be right compatible
    assert len(all_congruences(m3_reg).members) == 5


def test_closure_equals_chain_oracle_on_fixtures(m3_reg, tz):
    for act in (m3_reg, tz, regular_act(load_semigroup("l21"))):
        pairs = list(itertools.combinations(range(act.size), 2))
        # single seeds and a couple of two-seed combinations
        seedsets = [[p] for p in pairs] + [
            [pairs[0], pairs[-1]],
            pairs[:2],
        ]
        for seeds in seedsets:
            got = congruence_closure(act, seeds)
            want = oracles.chain_congruence_labels(act, seeds)
            assert got.labels == want


def test_monocyclic_m3(m3_reg):
    # rho(e,f) only merges the ideal: e*s and f*s stay inside {e,f}
    assert monocyclic(m3_reg, 0, 1).labels == (0, 0, 2)
    # rho(e,1) drags in f: (e*f, 1*f) = (f, f) fine, but (e,1) forces e~1
    # then e*f=f ~ 1*f=f; closure of {(e,1)} over translations
    assert monocyclic(m3_reg, 0, 2).labels == oracles.chain_congruence_labels(
        m3_reg, [(0, 2)]
    )


def test_all_monocyclics_cover_pairs(m3_reg):
    mono = all_monocyclics(m3_reg)
    assert len(mono) <= m3_reg.size * (m3_reg.size - 1) // 2
    for r in mono:
        assert not r.is_diagonal


def test_rees_congruence(m3_reg):
    rho = rees_congruence(m3_reg, {0, 1})
    assert rho.labels == (0, 0, 2)
    with pytest.raises(MalformedInputError):
        rees_congruence(m3_reg, {2})  # not closed


def test_meet_join_lattice_laws(tz):
    cons = all_congruences(tz).members
    for r, s in itertools.product(cons, repeat=2):
        assert meet(r, s).labels == meet(s, r).labels
        assert join(r, s).labels == join(s, r).labels
        # absorption
        assert meet(r, join(r, s)).labels == r.labels
        assert join(r, meet(r, s)).labels == r.labels
    for r, s, t in itertools.product(cons, repeat=3):
        assert meet(meet(r, s), t).labels == meet(r, meet(s, t)).labels
        assert join(join(r, s), t).labels == join(r, join(s, t)).labels


def test_join_agrees_with_closure_of_union(m3_reg, tz):
    for act in (m3_reg, tz):
        cons = all_congruences(act).members
        for r, s in itertools.product(cons, repeat=2):
            pairs = [(i, r.labels[i]) for i in range(act.size)]
            pairs += [(i, s.labels[i]) for i in range(act.size)]
            assert join(r, s).labels == congruence_closure(act, pairs).labels


def test_set_partitions_count():
    # Bell numbers
    for m, bell in ((1, 1), (2, 2), (3, 5), (4, 15), (5, 52)):
        assert sum(1 for _ in set_partitions(m)) == bell


def test_all_congruences_equals_partition_filter(m3_reg, tz):
    for act in (m3_reg, tz, regular_act(load_semigroup("k4"))):
        got = {c.labels for c in all_congruences(act).members}
        want = {c.labels for c in congruences_by_partition_filter(act)}
        assert got == want
        oracle = set(oracles.congruence_partitions(act))
        assert got == oracle


def test_m3_congruence_count(m3_reg):
    assert len(all_congruences(m3_reg).members) == 5


def test_kernel_congruence(m3_reg):
    rho = kernel_congruence(m3_reg, [0, 0, 1])
    assert rho.labels == (0, 0, 2)


def test_group_congruence_bijection():
    for n in (2, 3, 4):
        g = cyclic_group(n)
        pairs = group_congruence_bijection(g)
        assert len(pairs) == oracles.subgroup_count(g.table, g.identity)
    k4 = load_semigroup("k4")
    assert len(group_congruence_bijection(k4)) == 5
    with pytest.raises(MalformedInputError):
        group_congruence_bijection(load_semigroup("r2"))


def test_congruence_comparisons(tz):
    cons = all_congruences(tz).members
    d = diagonal(tz)
    f = full(tz)
    for c in cons:
        assert d.le(c) and c.le(f)
        assert c.le(c)
