"""Finite semigroups as dense multiplication tables.

Elements are the indices 0..n-1 and the table is row major:
``table[i][j]`` is the product i*j. A structural profile (idempotents,
zeros, identities, regularity, reversibility, group structure) is computed
eagerly at construction and cached on the instance, since the classifiers
consult it constantly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MalformedInputError

Table = tuple[tuple[int, ...], ...]


def _freeze_table(table: Sequence[Sequence[int]]) -> Table:
    rows = tuple(tuple(int(x) for x in row) for row in table)
    n = len(rows)
    if n == 0:
        raise MalformedInputError("empty multiplication table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedInputError(
                f"row {i} has {len(row)} entries, expected {n}"
            )
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedInputError(
                    f"table entry ({i},{j}) = {v} out of range [0,{n})"
                )
    return rows


def find_associativity_violation(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Return the first triple (i,j,k) with (i*j)*k != i*(j*k), or None."""
    n = len(table)
    for i in range(n):
        ti = table[i]
        for j in range(n):
            row_ij = table[ti[j]]
            tj = table[j]
            for k in range(n):
                if row_ij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def check_associativity(table: Sequence[Sequence[int]]) -> bool:
    """True iff the table is associative.

    Raises MalformedInputError if the table is ragged or has an
    out-of-range entry.
    """
    return find_associativity_violation(_freeze_table(table)) is None


@dataclass(frozen=True)
class SemigroupProfile:
    """Structural facts about a semigroup, all by direct quantifier scan.

    ``unit_group``/``non_units`` are populated for monoids only: the unit
    group is {x : exists y, x*y = 1}. Two-sidedness of those inverses is a
    theorem about uniform monoids, not part of this definition.
    """

    idempotents: frozenset[int]
    left_zeros: frozenset[int]
    right_zeros: frozenset[int]
    left_identities: frozenset[int]
    is_group: bool
    is_right_zero_semigroup: bool
    is_left_zero_semigroup: bool
    is_regular: bool
    is_left_reversible: bool
    is_left_cancellative: bool
    is_right_simple: bool
    unit_group: frozenset[int] | None
    non_units: frozenset[int] | None


class Semigroup:
    """Immutable finite semigroup.

    Attributes:
        table: n x n tuple-of-tuples, table[i][j] = i*j.
        size: n.
        identity: the two-sided identity index, or None.
        profile: SemigroupProfile, computed at construction.
    """

    def __init__(self, table: Sequence[Sequence[int]], identity: int | None = None):
        self.table: Table = _freeze_table(table)
        self.size: int = len(self.table)
        bad = find_associativity_violation(self.table)
        if bad is not None:
            i, j, k = bad
            raise MalformedInputError(
                f"table is not associative: ({i}*{j})*{k} != {i}*({j}*{k})"
            )
        detected = self._detect_identity()
        if identity is not None and identity != detected:
            raise MalformedInputError(
                f"declared identity {identity} but table identity is {detected}"
            )
        self.identity: int | None = detected
        self.profile: SemigroupProfile = self._build_profile()

    # -- basic queries ----------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, x: int, k: int) -> int:
        """x**k for k >= 1."""
        if k < 1:
            raise ValueError("power requires k >= 1")
        acc = x
        for _ in range(k - 1):
            acc = self.table[acc][x]
        return acc

    def powers(self, x: int) -> frozenset[int]:
        """All distinct powers x, x^2, x^3, ... (finite, eventually cyclic)."""
        seen = {x}
        cur = x
        while True:
            cur = self.table[cur][x]
            if cur in seen:
                return frozenset(seen)
            seen.add(cur)

    def right_ideal(self, a: int, with_generator: bool = True) -> frozenset[int]:
        """aS^1 = {a} + aS by default; pass with_generator=False for plain aS."""
        ideal = {self.table[a][s] for s in range(self.size)}
        if with_generator:
            ideal.add(a)
        return frozenset(ideal)

    def is_right_ideal(self, members: Iterable[int]) -> bool:
        ms = set(members)
        return bool(ms) and all(
            self.table[a][s] in ms for a in ms for s in range(self.size)
        )

    def inverse_of(self, x: int) -> int:
        """Group inverse; only meaningful when the profile says is_group."""
        e = self.identity
        if e is None:
            raise MalformedInputError("inverse_of requires a monoid")
        for y in range(self.size):
            if self.table[x][y] == e and self.table[y][x] == e:
                return y
        raise MalformedInputError(f"element {x} has no two-sided inverse")

    # -- construction internals -------------------------------------------

    def _detect_identity(self) -> int | None:
        n, t = self.size, self.table
        for e in range(n):
            if all(t[e][i] == i and t[i][e] == i for i in range(n)):
                return e
        return None

    def _build_profile(self) -> SemigroupProfile:
        n, t = self.size, self.table
        rng = range(n)
        idem = frozenset(x for x in rng if t[x][x] == x)
        # Left zero: z*x = z for all x; right zero: x*z = z for all x.
        lz = frozenset(z for z in rng if all(t[z][x] == z for x in rng))
        rz = frozenset(z for z in rng if all(t[x][z] == z for x in rng))
        lid = frozenset(e for e in rng if all(t[e][x] == x for x in rng))
        regular = all(any(t[t[a][x]][a] == a for x in rng) for a in rng)
        # aS-based pairwise intersection scan; equivalent to the aS^1 form
        # because a in bS already forces aS and bS to intersect.
        ideals = [set(t[a][s] for s in rng) for a in rng]
        left_rev = all(
            ideals[a] & ideals[b] for a in rng for b in range(a + 1, n)
        )
        left_canc = all(len(set(t[a])) == n for a in rng)
        right_simple = all(len(ideals[a]) == n for a in rng)
        e = self.identity
        if e is not None:
            units = frozenset(x for x in rng if any(t[x][y] == e for y in rng))
            non_units = frozenset(rng) - units
        else:
            units = None
            non_units = None
        is_group = e is not None and all(
            any(t[x][y] == e and t[y][x] == e for y in rng) for x in rng
        )
        return SemigroupProfile(
            idempotents=idem,
            left_zeros=lz,
            right_zeros=rz,
            left_identities=lid,
            is_group=is_group,
            is_right_zero_semigroup=all(t[x][y] == y for x in rng for y in rng),
            is_left_zero_semigroup=all(t[x][y] == x for x in rng for y in rng),
            is_regular=regular,
            is_left_reversible=left_rev,
            is_left_cancellative=left_canc,
            is_right_simple=right_simple,
            unit_group=units,
            non_units=non_units,
        )

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Semigroup) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        extra = f", identity={self.identity}" if self.identity is not None else ""
        return f"Semigroup(size={self.size}{extra})"


def adjoin_identity(s: Semigroup) -> Semigroup:
    """S^1: return s itself if it is a monoid, else append a two-sided
    identity as the new largest index."""
    if s.identity is not None:
        return s
    n = s.size
    rows = [list(row) + [i] for i, row in enumerate(s.table)]
    rows.append(list(range(n + 1)))
    return Semigroup(rows, identity=n)


def unit_group(s: Semigroup) -> tuple[frozenset[int], frozenset[int]]:
    """(G, I) with G = {x : exists y, x*y = 1} and I = S \\ G.

    Raises MalformedInputError for non-monoids. Whether I is a two-sided
    ideal is a property of uniform monoids, checked by the harness.
    """
    if s.identity is None:
        raise MalformedInputError("unit_group requires a monoid")
    assert s.profile.unit_group is not None and s.profile.non_units is not None
    return s.profile.unit_group, s.profile.non_units


def subgroups(g: Semigroup) -> list[frozenset[int]]:
    """All subgroups of a group that share its identity, as element sets.

    Sorted by (size, elements) for determinism. Brute subset scan; fine for
    the group orders this package enumerates.
    """
    if not g.profile.is_group:
        raise MalformedInputError("subgroups requires a group")
    if g.size > 12:
        raise MalformedInputError("subgroup scan is limited to order <= 12")
    e = g.identity
    inv = [g.inverse_of(x) for x in g.elements]
    found = []
    n = g.size
    for mask in range(1 << n):
        if not mask & (1 << e):
            continue
        members = [x for x in range(n) if mask & (1 << x)]
        ok = all(
            g.table[x][y] in members and inv[x] in members
            for x in members
            for y in members
        )
        if ok:
            found.append(frozenset(members))
    found.sort(key=lambda h: (len(h), sorted(h)))
    return found


# -- small factories used by tests and the CLI ---------------------------


def right_zero_semigroup(n: int) -> Semigroup:
    """x*y = y on n elements."""
    return Semigroup([[j for j in range(n)] for _ in range(n)])


def left_zero_semigroup(n: int) -> Semigroup:
    """x*y = x on n elements."""
    return Semigroup([[i] * n for i in range(n)])


def cyclic_group(n: int) -> Semigroup:
    """Z_n with identity 0."""
    return Semigroup([[(i + j) % n for j in range(n)] for i in range(n)])


def iter_elements(s: Semigroup) -> Iterator[int]:
    return iter(range(s.size))
