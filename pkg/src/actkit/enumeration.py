"""Exhaustive generation of small semigroups and of bounded acts over a
fixed semigroup, with optional canonicalization up to isomorphism.

Tables are filled depth-first with incremental constraint pruning, so a
completed table is already associative (resp. compatible); emitted
semigroups are still re-validated by the constructor, and acts are
re-validated when ACTKIT_DEBUG is set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator

from .acts import Act
from .errors import BudgetExceededError, MalformedInputError, SizeGuardError
from .semigroups import Semigroup, Table

DEFAULT_BUDGET = 50_000_000  # search-tree nodes; ACTKIT_BUDGET overrides


class Budget:
    """Shared counter of search-tree nodes; raises once the limit is hit."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit < 1:
            raise MalformedInputError("budget must be positive")
        self.limit = limit
        self.used = 0

    def charge(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(
                f"search budget of {self.limit} nodes exhausted"
            )

    @classmethod
    def from_env(cls, override: int | None = None) -> "Budget":
        if override is not None:
            return cls(override)
        raw = os.environ.get("ACTKIT_BUDGET", "")
        return cls(int(raw) if raw else DEFAULT_BUDGET)


def _filter_right_zero(s: Semigroup) -> bool:
    return s.profile.is_right_zero_semigroup


def _filter_left_zero(s: Semigroup) -> bool:
    return s.profile.is_left_zero_semigroup


FILTERS: dict[str, Callable[[Semigroup], bool]] = {
    "right_zero": _filter_right_zero,
    "left_zero": _filter_left_zero,
    "regular": lambda s: s.profile.is_regular,
    "group": lambda s: s.profile.is_group,
    "non_group": lambda s: not s.profile.is_group,
    "monoid": lambda s: s.is_monoid,
    "left_reversible": lambda s: s.profile.is_left_reversible,
    "non_left_reversible": lambda s: not s.profile.is_left_reversible,
}


@dataclass(frozen=True)
class EnumerationScope:
    max_semigroup_order: int
    max_act_order: int = 0
    up_to_iso: bool = False
    monoids_only: bool = False
    filter: str | None = None
    allow_order_5: bool = False

    def __post_init__(self):
        if self.max_semigroup_order < 1:
            raise MalformedInputError("semigroup order must be at least 1")
        if self.max_act_order < 0:
            raise MalformedInputError("act order must not be negative")
        limit = 5 if self.allow_order_5 else 4
        if self.max_semigroup_order > limit:
            raise SizeGuardError(
                f"semigroup order {self.max_semigroup_order} exceeds the "
                f"enumeration guard ({limit})"
            )
        if self.max_act_order > 6:
            raise SizeGuardError(
                f"act order {self.max_act_order} exceeds the enumeration guard (6)"
            )
        if self.filter is not None and self.filter not in FILTERS:
            raise MalformedInputError(
                f"unknown filter {self.filter!r}; valid: {', '.join(sorted(FILTERS))}"
            )


def _table_consistent(t: list[list[int]], i: int, j: int, n: int) -> bool:
    # all associativity triples whose last undetermined product is (i, j)
    v = t[i][j]
    for k in range(n):
        u = t[j][k]
        if u >= 0:
            lhs = t[v][k]
            rhs = t[i][u]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
        u = t[k][i]
        if u >= 0:
            lhs = t[u][j]
            rhs = t[k][v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    for a in range(n):
        row = t[a]
        for b in range(n):
            if row[b] == i:
                u = t[b][j]
                if u >= 0 and t[a][u] >= 0 and t[a][u] != v:
                    return False
            if row[b] == j:
                u = t[i][a]
                if u >= 0 and t[u][b] >= 0 and t[u][b] != v:
                    return False
    return True


def _fill_tables(
    t: list[list[int]], cells: list[tuple[int, int]], n: int, budget: Budget | None
) -> Iterator[Table]:
    if not cells:
        yield tuple(tuple(row) for row in t)
        return
    stack = [0]  # next value to try at depth len(stack)-1
    depth = 0
    total = len(cells)
    while depth >= 0:
        i, j = cells[depth]
        v = stack[depth]
        if v >= n:
            t[i][j] = -1
            stack.pop()
            depth -= 1
            if depth >= 0:
                stack[depth] += 1
            continue
        if budget is not None:
            budget.charge()
        t[i][j] = v
        if _table_consistent(t, i, j, n):
            if depth + 1 == total:
                yield tuple(tuple(row) for row in t)
                stack[depth] += 1
            else:
                depth += 1
                stack.append(0)
        else:
            stack[depth] += 1
    for i, j in cells:
        t[i][j] = -1


def semigroup_tables(
    n: int,
    *,
    monoids_only: bool = False,
    up_to_iso: bool = False,
    budget: Budget | None = None,
) -> Iterator[Table]:
    """All associative n x n tables in deterministic order; with
    up_to_iso only tables that are lexicographically minimal in their
    relabeling orbit are emitted."""
    if n < 1:
        raise MalformedInputError("order must be at least 1")

    def keep(table: Table) -> bool:
        return not up_to_iso or table == canonical_semigroup_table(table)

    if monoids_only:
        for e in range(n):
            t = [[-1] * n for _ in range(n)]
            for x in range(n):
                t[e][x] = x
                t[x][e] = x
            cells = [
                (i, j) for i in range(n) for j in range(n) if i != e and j != e
            ]
            for table in _fill_tables(t, cells, n, budget):
                if keep(table):
                    yield table
        return
    t = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    for table in _fill_tables(t, cells, n, budget):
        if keep(table):
            yield table


def enumerate_semigroups(
    scope: EnumerationScope, *, budget: Budget | None = None
) -> Iterator[Semigroup]:
    """Semigroups of every order up to scope.max_semigroup_order, in
    ascending order and deterministic within each order."""
    pred = FILTERS[scope.filter] if scope.filter else None
    for n in range(1, scope.max_semigroup_order + 1):
        for table in semigroup_tables(
            n,
            monoids_only=scope.monoids_only,
            up_to_iso=scope.up_to_iso,
            budget=budget,
        ):
            s = Semigroup(table)
            if pred is None or pred(s):
                yield s


def act_tables(
    s: Semigroup,
    m: int,
    *,
    up_to_iso: bool = False,
    budget: Budget | None = None,
) -> Iterator[Table]:
    """All m x n action tables compatible with s, filled column-major.

    Each assignment propagates its consequences through the
    compatibility constraint a*(s1 t1) = (a*s1)*t1: whenever two of the
    three entries of an instance are known the third is forced, so dead
    branches are cut as soon as they arise. The identity column is fixed
    first for monoids.
    """
    if m < 1:
        raise MalformedInputError("act order must be at least 1")
    if m > 6:
        raise SizeGuardError(f"act order {m} exceeds the enumeration guard (6)")
    n = s.size
    tbl = s.table
    # preimages[u] lists the products (s1, t1) with s1*t1 == u
    preimages: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for s1 in range(n):
        for t1 in range(n):
            preimages[tbl[s1][t1]].append((s1, t1))

    act = [[-1] * n for _ in range(m)]
    users: list[list[tuple[int, int]]] = [[] for _ in range(m)]
    trail: list[tuple[int, int]] = []
    queue: list[tuple[int, int]] = []

    def set_cell(a: int, col: int, v: int) -> bool:
        cur = act[a][col]
        if cur >= 0:
            return cur == v
        act[a][col] = v
        users[v].append((a, col))
        trail.append((a, col))
        queue.append((a, col))
        return True

    def propagate() -> bool:
        pos = 0
        while pos < len(queue):
            a, col = queue[pos]
            pos += 1
            v = act[a][col]
            # this cell as a*s1 of an instance (a, col, t1)
            for t1 in range(n):
                u = tbl[col][t1]
                x = act[a][u]
                if x >= 0:
                    if not set_cell(v, t1, x):
                        return False
                else:
                    y = act[v][t1]
                    if y >= 0 and not set_cell(a, u, y):
                        return False
            # this cell as (w)*t1 where w is the value of another cell
            for a0, s1 in list(users[a]):
                if not set_cell(a0, tbl[s1][col], v):
                    return False
            # this cell as a*(s1 t1) with col = s1*t1
            for s1, t1 in preimages[col]:
                w = act[a][s1]
                if w >= 0 and not set_cell(w, t1, v):
                    return False
        del queue[:]
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            a, col = trail.pop()
            users[act[a][col]].pop()
            act[a][col] = -1
        del queue[:]

    def keep(table: Table) -> bool:
        return not up_to_iso or table == canonical_act_table(table)

    if s.identity is not None:
        for a in range(m):
            set_cell(a, s.identity, a)
        if not propagate():
            return

    order = [(a, col) for col in range(n) for a in range(m)]

    def search(pos: int) -> Iterator[Table]:
        while pos < len(order) and act[order[pos][0]][order[pos][1]] >= 0:
            pos += 1
        if pos == len(order):
            table = tuple(tuple(row) for row in act)
            if keep(table):
                yield table
            return
        a, col = order[pos]
        for v in range(m):
            if budget is not None:
                budget.charge()
            mark = len(trail)
            if set_cell(a, col, v) and propagate():
                yield from search(pos + 1)
            undo(mark)

    yield from search(0)


def _debug_checks() -> bool:
    return os.environ.get("ACTKIT_DEBUG", "") not in ("", "0")


def enumerate_acts(
    s: Semigroup,
    m: int,
    up_to_iso: bool = False,
    *,
    budget: Budget | None = None,
) -> Iterator[Act]:
    check = _debug_checks()
    for table in act_tables(s, m, up_to_iso=up_to_iso, budget=budget):
        yield Act(s, table, check=check)


def canonical_semigroup_table(table: Table) -> Table:
    """Lexicographically minimal relabeling of a multiplication table;
    equal results characterize isomorphic semigroups."""
    n = len(table)
    if n > 7:
        raise SizeGuardError(f"canonicalization guard: order {n} > 7")
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        candidate = tuple(
            tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
        )
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_act_table(table: Table) -> Table:
    """Lexicographically minimal relabeling of an action table over the
    act's own elements (the semigroup stays fixed)."""
    m = len(table)
    if m > 7:
        raise SizeGuardError(f"canonicalization guard: order {m} > 7")
    best = None
    for perm in permutations(range(m)):
        inv = [0] * m
        for old, new in enumerate(perm):
            inv[new] = old
        candidate = tuple(
            tuple(perm[v] for v in table[inv[a]]) for a in range(m)
        )
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_form(x: Semigroup | Act) -> bytes:
    """Canonical table flattened to bytes; equal bytes mean isomorphic
    (semigroups under element relabeling, acts under act-element
    relabeling with the semigroup fixed)."""
    if isinstance(x, Semigroup):
        tab = canonical_semigroup_table(x.table)
    elif isinstance(x, Act):
        tab = canonical_act_table(x.action)
    else:
        raise MalformedInputError(f"cannot canonicalize {type(x).__name__}")
    return bytes(v for row in tab for v in row)
