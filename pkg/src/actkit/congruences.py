"""Right congruences on finite acts.

A right congruence is an equivalence relation on act elements that is
compatible with the action: a ~ b implies a*s ~ b*s. Partitions are stored
as canonical per-element labels (each element labelled by the smallest
index in its block), so congruence equality is tuple equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .errors import InvariantViolationError, MalformedInputError, SizeGuardError

if TYPE_CHECKING:  # pragma: no cover - typing only, avoids an import cycle
    from .acts import Act
    from .semigroups import Semigroup

Labels = tuple[int, ...]


def normalize_labels(raw: Sequence[int]) -> Labels:
    """Relabel an arbitrary block labelling so labels[i] = min of i's block."""
    first: dict[int, int] = {}
    out = []
    for i, lab in enumerate(raw):
        out.append(first.setdefault(lab, i))
    return tuple(out)


def is_right_congruence(act: "Act", labels: Sequence[int]) -> bool:
    """Check right compatibility of a partition given by labels."""
    m = act.size
    n = act.semigroup.size
    action = act.action
    for a in range(m):
        for b in range(a + 1, m):
            if labels[a] != labels[b]:
                continue
            ra, rb = action[a], action[b]
            for s in range(n):
                if labels[ra[s]] != labels[rb[s]]:
                    return False
    return True


class Congruence:
    """A right congruence, canonically labelled.

    Equality and hashing use the label tuple only; comparing congruences
    from different acts is the caller's bug.
    """

    __slots__ = ("act", "labels")

    def __init__(self, act: "Act", labels: Sequence[int], *, check: bool = False):
        self.act = act
        self.labels: Labels = normalize_labels(labels)
        if len(self.labels) != act.size:
            raise MalformedInputError(
                f"label array of length {len(self.labels)} on act of size {act.size}"
            )
        if check and not is_right_congruence(act, self.labels):
            raise InvariantViolationError(
                f"partition {list(self.labels)} is not right compatible"
            )

    @property
    def is_diagonal(self) -> bool:
        return all(lab == i for i, lab in enumerate(self.labels))

    @property
    def is_full(self) -> bool:
        return all(lab == 0 for lab in self.labels)

    @property
    def n_blocks(self) -> int:
        return len(set(self.labels))

    def block_of(self, a: int) -> int:
        return self.labels[a]

    def related(self, a: int, b: int) -> bool:
        return self.labels[a] == self.labels[b]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        by_label: dict[int, list[int]] = {}
        for i, lab in enumerate(self.labels):
            by_label.setdefault(lab, []).append(i)
        return tuple(tuple(block) for _, block in sorted(by_label.items()))

    def le(self, other: "Congruence") -> bool:
        """Relation inclusion: every block of self lies inside a block of other."""
        rep: dict[int, int] = {}
        for i, lab in enumerate(self.labels):
            o = other.labels[i]
            if rep.setdefault(lab, o) != o:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Congruence) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Congruence({list(self.labels)})"


def diagonal(act: "Act") -> Congruence:
    return Congruence(act, range(act.size))

def full(act: "Act") -> Congruence:
    return Congruence(act, [0] * act.size)


def congruence_closure(act: "Act", seed_pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least right congruence containing all seed pairs.

    Union-find with a work queue: whenever two blocks merge through the
    pair (a, b), the pairs (a*s, b*s) are enqueued for every s.
    """
    m = act.size
    n = act.semigroup.size
    action = act.action
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue: deque[tuple[int, int]] = deque()
    for a, b in seed_pairs:
        if not (0 <= a < m and 0 <= b < m):
            raise MalformedInputError(f"seed pair ({a},{b}) out of range [0,{m})")
        queue.append((a, b))
    while queue:
        a, b = queue.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        rowa, rowb = action[a], action[b]
        for s in range(n):
            if find(rowa[s]) != find(rowb[s]):
                queue.append((rowa[s], rowb[s]))
    return Congruence(act, [find(i) for i in range(m)])


def monocyclic(act: "Act", a: int, b: int) -> Congruence:
    """The least right congruence relating a and b."""
    cache = act._cache.setdefault("monocyclic", {})
    key = (a, b) if a <= b else (b, a)
    got = cache.get(key)
    if got is None:
        got = cache[key] = congruence_closure(act, [key])
    return got


def all_monocyclics(act: "Act") -> tuple[Congruence, ...]:
    """Distinct nondiagonal monocyclics rho(x, y) over x < y, in order of
    first appearance."""
    got = act._cache.get("all_monocyclics")
    if got is None:
        seen: dict[Labels, Congruence] = {}
        for x in range(act.size):
            for y in range(x + 1, act.size):
                c = monocyclic(act, x, y)
                seen.setdefault(c.labels, c)
        got = act._cache["all_monocyclics"] = tuple(seen.values())
    return got


def rees_congruence(act: "Act", members: Iterable[int]) -> Congruence:
    """rho_B: one block is the subact B, everything else is a singleton."""
    ms = frozenset(members)
    if not ms:
        raise MalformedInputError("Rees congruence of an empty subset")
    if not act.is_closed_subset(ms):
        raise MalformedInputError(f"{sorted(ms)} is not action-closed")
    lead = min(ms)
    return Congruence(act, [lead if i in ms else i for i in range(act.size)])


def meet(r: Congruence, s: Congruence) -> Congruence:
    """Blockwise intersection; always a right congruence."""
    _require_same_act(r, s)
    first: dict[tuple[int, int], int] = {}
    out = []
    for i, key in enumerate(zip(r.labels, s.labels)):
        out.append(first.setdefault(key, i))
    return Congruence(r.act, out)


def join(r: Congruence, s: Congruence) -> Congruence:
    """Least right congruence containing both.

    The action is a family of unary maps, so the transitive closure of the
    union of two right congruences is itself right compatible: push any
    alternating chain forward through the map.  A plain union-find over the
    two labellings therefore suffices, with no action re-closure.
    """
    _require_same_act(r, s)
    n = len(r.labels)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rl, sl = r.labels, s.labels
    for i in range(n):
        for other in (rl[i], sl[i]):
            ri, ro = find(i), find(other)
            if ri != ro:
                parent[max(ri, ro)] = min(ri, ro)
    return Congruence(r.act, [find(i) for i in range(n)])


def combine(op: str, r: Congruence, s: Congruence) -> Congruence:
    if op == "meet":
        return meet(r, s)
    if op == "join":
        return join(r, s)
    raise MalformedInputError(f"unknown lattice operation {op!r}")


def _require_same_act(r: Congruence, s: Congruence) -> None:
    if r.act is not s.act and r.act.size != s.act.size:
        raise MalformedInputError("congruences over different acts")


@dataclass(frozen=True)
class CongruenceSet:
    """All right congruences of one act, deduplicated and sorted."""

    act: "Act"
    members: tuple[Congruence, ...]
    monocyclic_labels: frozenset[Labels]

    def __iter__(self) -> Iterator[Congruence]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def is_monocyclic(self, c: Congruence) -> bool:
        return c.labels in self.monocyclic_labels

    def nondiagonal(self) -> Iterator[Congruence]:
        return (c for c in self.members if not c.is_diagonal)


def set_partitions(m: int) -> Iterator[Labels]:
    """All partitions of {0..m-1} as canonical min-element labels.

    Iterative restricted-growth-string enumeration; Bell(m) outputs.
    """
    if m == 0:
        return
    rgs = [0] * m
    maxes = [0] * m
    while True:
        first: dict[int, int] = {}
        yield tuple(first.setdefault(v, i) for i, v in enumerate(rgs))
        i = m - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for j in range(i + 1, m):
            rgs[j] = 0
            maxes[j] = maxes[i]


def congruences_by_partition_filter(act: "Act") -> list[Congruence]:
    """Every right congruence, by filtering all set partitions.

    Bell-number growth; guarded at |A| <= 8. This is the slow cross-check
    route for all_congruences.
    """
    if act.size > 8:
        raise SizeGuardError(
            f"partition filtering is limited to acts of size <= 8, got {act.size}"
        )
    out = []
    for labels in set_partitions(act.size):
        if is_right_congruence(act, labels):
            out.append(Congruence(act, labels))
    return out


def all_congruences(
    act: "Act", *, max_size: int = 12, cross_check: bool | None = None
) -> CongruenceSet:
    """Con(A): every right congruence on the act.

    Strategy: every right congruence is the join of the monocyclics it
    contains, so closing {diagonal} + monocyclics under binary joins is
    exhaustive. When cross_check is on (default for |A| <= 8) the result is
    compared against brute partition filtering.
    """
    cached = act._cache.get("all_congruences")
    if cached is not None:
        return cached
    if act.size > max_size:
        raise SizeGuardError(
            f"congruence lattice guard: act size {act.size} > {max_size}"
        )
    seen: dict[Labels, Congruence] = {}
    diag = diagonal(act)
    seen[diag.labels] = diag
    monos = all_monocyclics(act)
    for c in monos:
        seen.setdefault(c.labels, c)
    frontier = list(seen.values())
    while frontier:
        fresh: list[Congruence] = []
        snapshot = list(seen.values())
        for r in frontier:
            for t in snapshot:
                j = join(r, t)
                if j.labels not in seen:
                    seen[j.labels] = j
                    fresh.append(j)
        frontier = fresh
    members = tuple(sorted(seen.values(), key=lambda c: c.labels))
    if cross_check is None:
        cross_check = act.size <= 8
    if cross_check:
        brute = sorted(congruences_by_partition_filter(act), key=lambda c: c.labels)
        if [c.labels for c in brute] != [c.labels for c in members]:
            raise InvariantViolationError(
                "join-closure and partition filtering disagree on Con(A)"
            )
    result = CongruenceSet(
        act=act,
        members=members,
        monocyclic_labels=frozenset(c.labels for c in monos),
    )
    act._cache["all_congruences"] = result
    return result


def kernel_congruence(act: "Act", mapping: Sequence[int]) -> Congruence:
    """ker f for an equivariant map out of act: blocks are the fibers."""
    first: dict[int, int] = {}
    out = []
    for i, v in enumerate(mapping):
        out.append(first.setdefault(v, i))
    return Congruence(act, out)


def group_congruence_bijection(
    g: "Semigroup",
) -> list[tuple[frozenset[int], Congruence]]:
    """For a group G: the pairing H -> rho_H = {(x,y) : x*y^-1 in H}.

    Builds the pairing for every subgroup H, then verifies it is an
    order-preserving bijection onto all right congruences of the regular
    act, raising InvariantViolationError otherwise.
    """
    from .acts import regular_act
    from .semigroups import subgroups

    if not g.profile.is_group:
        raise MalformedInputError("group_congruence_bijection requires a group")
    act = regular_act(g)
    inv = [g.inverse_of(x) for x in g.elements]
    pairs: list[tuple[frozenset[int], Congruence]] = []
    for h in subgroups(g):
        labels = [min(y for y in g.elements if g.table[x][inv[y]] in h) for x in g.elements]
        rho = Congruence(act, labels, check=True)
        pairs.append((h, rho))
    con = all_congruences(act)
    image = {rho.labels for _, rho in pairs}
    if len(image) != len(pairs):
        raise InvariantViolationError("subgroup pairing is not injective")
    if image != {c.labels for c in con}:
        raise InvariantViolationError(
            "subgroup pairing is not onto the congruence lattice"
        )
    for h1, r1 in pairs:
        for h2, r2 in pairs:
            if (h1 <= h2) != r1.le(r2):
                raise InvariantViolationError(
                    f"pairing does not preserve order on {sorted(h1)} vs {sorted(h2)}"
                )
    return pairs
