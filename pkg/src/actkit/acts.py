"""Finite right acts over a finite semigroup.

An act is an m-by-n table: action[a][s] is the element a*s, satisfying
a*(st) = (a*s)*t, and a*1 = a when the semigroup has an identity. Acts
carry a private cache that derived computations (congruences, subact
lattices, profiles) share; the cache is dropped on pickling.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import congruences as cg
from .errors import MalformedInputError, NotApplicableError, SizeGuardError
from .semigroups import Semigroup, adjoin_identity

Rows = tuple[tuple[int, ...], ...]


def _debug_checks() -> bool:
    return os.environ.get("ACTKIT_DEBUG", "") not in ("", "0")


def _freeze_action(action: Sequence[Sequence[int]], n: int) -> Rows:
    rows = tuple(tuple(r) for r in action)
    if not rows:
        raise MalformedInputError("an act needs at least one element")
    m = len(rows)
    for a, row in enumerate(rows):
        if len(row) != n:
            raise MalformedInputError(
                f"action row {a} has {len(row)} entries, semigroup has {n}"
            )
        for s, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < m:
                raise MalformedInputError(
                    f"action[{a}][{s}] = {v!r} outside element range [0,{m})"
                )
    return rows


def find_act_violation(semigroup: Semigroup, action: Sequence[Sequence[int]]) -> str | None:
    """First broken act axiom as a message, or None if the table is an act."""
    rows = _freeze_action(action, semigroup.size)
    table = semigroup.table
    for a, row in enumerate(rows):
        for s in range(semigroup.size):
            a_s = row[s]
            for t in range(semigroup.size):
                if rows[a][table[s][t]] != rows[a_s][t]:
                    return (
                        f"compatibility fails at a={a}, s={s}, t={t}: "
                        f"a*(s*t)={rows[a][table[s][t]]} but (a*s)*t={rows[a_s][t]}"
                    )
    e = semigroup.identity
    if e is not None:
        for a, row in enumerate(rows):
            if row[e] != a:
                return f"identity axiom fails at a={a}: a*1={row[e]}"
    return None


def check_act(semigroup: Semigroup, action: Sequence[Sequence[int]]) -> bool:
    return find_act_violation(semigroup, action) is None


class Act:
    """A finite right act over a fixed semigroup."""

    __slots__ = ("semigroup", "size", "action", "_cache")

    def __init__(
        self,
        semigroup: Semigroup,
        action: Sequence[Sequence[int]],
        *,
        check: bool = True,
    ):
        self.semigroup = semigroup
        self.action: Rows = _freeze_action(action, semigroup.size)
        self.size = len(self.action)
        self._cache: dict = {}
        if check or _debug_checks():
            bad = find_act_violation(semigroup, self.action)
            if bad is not None:
                raise MalformedInputError(bad)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    @property
    def elements(self) -> range:
        return range(self.size)

    def one_step(self, a: int) -> frozenset[int]:
        """The orbit set aS (without a itself unless reached)."""
        return frozenset(self.action[a])

    def cyclic_subact(self, a: int) -> frozenset[int]:
        """aS1 = {a} with everything reachable; aS is already closed."""
        return frozenset((a,)) | frozenset(self.action[a])

    def is_closed_subset(self, members: Iterable[int]) -> bool:
        ms = set(members)
        if not ms or not all(0 <= a < self.size for a in ms):
            return False
        return all(v in ms for a in ms for v in self.action[a])

    @property
    def zeros(self) -> frozenset[int]:
        got = self._cache.get("zeros")
        if got is None:
            got = self._cache["zeros"] = frozenset(
                a for a in range(self.size) if all(v == a for v in self.action[a])
            )
        return got

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Act)
            and self.action == other.action
            and self.semigroup.table == other.semigroup.table
        )

    def __hash__(self) -> int:
        return hash((self.semigroup.table, self.action))

    def __getstate__(self):
        return (self.semigroup, self.action)

    def __setstate__(self, state):
        self.semigroup, self.action = state
        self.size = len(self.action)
        self._cache = {}

    def __repr__(self) -> str:
        return f"Act(m={self.size} over n={self.semigroup.size})"


@dataclass(frozen=True)
class SubactMask:
    """An action-closed nonempty subset, tagged with its cyclic generators."""

    act: Act = field(repr=False, compare=False)
    members: frozenset[int] = field(compare=True)
    generators: tuple[int, ...] = field(compare=False)
    is_zero_subact: bool = field(compare=False)

    @property
    def cardinality(self) -> int:
        return len(self.members)

    @property
    def is_cyclic(self) -> bool:
        return bool(self.generators)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class ActProfile:
    zeros: frozenset[int]
    is_zero_act: bool
    is_simple: bool
    is_theta_simple: bool
    is_cocyclic: bool
    monolith: SubactMask | None
    components: tuple[tuple[int, ...], ...]


class ActHom:
    """An equivariant map between acts over the same semigroup."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source: Act, target: Act, mapping: Sequence[int], *, check: bool = True):
        self.source = source
        self.target = target
        self.map: tuple[int, ...] = tuple(mapping)
        if len(self.map) != source.size:
            raise MalformedInputError(
                f"map of length {len(self.map)} from an act of size {source.size}"
            )
        if any(not 0 <= v < target.size for v in self.map):
            raise MalformedInputError("map image outside the target act")
        if source.semigroup.table != target.semigroup.table:
            raise MalformedInputError("homomorphism between acts over different semigroups")
        if check or _debug_checks():
            for a in range(source.size):
                fa = self.map[a]
                for s in range(source.semigroup.size):
                    if self.map[source.action[a][s]] != target.action[fa][s]:
                        raise MalformedInputError(
                            f"map is not equivariant at a={a}, s={s}"
                        )

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == self.source.size

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def kernel(self) -> cg.Congruence:
        return cg.kernel_congruence(self.source, self.map)

    def compose(self, inner: "ActHom") -> "ActHom":
        """self after inner: (self.compose(g))(a) = self(g(a))."""
        if inner.target is not self.source and inner.target != self.source:
            raise MalformedInputError("composition through mismatched acts")
        return ActHom(
            inner.source, self.target, [self.map[v] for v in inner.map], check=False
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ActHom)
            and self.map == other.map
            and self.source == other.source
            and self.target == other.target
        )

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"ActHom({list(self.map)})"


def identity_hom(a: Act) -> ActHom:
    return ActHom(a, a, range(a.size), check=False)


# ---------------------------------------------------------------------------
# constructions


def regular_act(s: Semigroup) -> Act:
    """S acting on itself by right multiplication."""
    return Act(s, s.table, check=False)


def s1_act(s: Semigroup) -> Act:
    """The carrier S1 (identity adjoined if missing) acted on by S."""
    if s.is_monoid:
        return regular_act(s)
    big = adjoin_identity(s)
    return Act(s, [row[: s.size] for row in big.table], check=False)


def zero_act(s: Semigroup) -> Act:
    """The one-element act."""
    return Act(s, [[0] * s.size], check=False)


def coproduct(*acts: Act) -> Act:
    """Disjoint union; blocks keep their internal order, left to right."""
    if not acts:
        raise MalformedInputError("coproduct of no acts")
    s = acts[0].semigroup
    for a in acts[1:]:
        if a.semigroup.table != s.table:
            raise MalformedInputError("coproduct of acts over different semigroups")
    rows: list[list[int]] = []
    offset = 0
    for a in acts:
        rows.extend([v + offset for v in row] for row in a.action)
        offset += a.size
    return Act(s, rows, check=False)


def _coproduct_with_inclusions(acts: Sequence[Act]) -> tuple[Act, list[ActHom]]:
    cop = coproduct(*acts)
    incs = []
    offset = 0
    for a in acts:
        incs.append(ActHom(a, cop, range(offset, offset + a.size), check=False))
        offset += a.size
    return cop, incs


def product_act(*acts: Act) -> Act:
    """Componentwise action on tuples; index = row-major tuple order."""
    if not acts:
        raise MalformedInputError("product of no acts")
    s = acts[0].semigroup
    for a in acts[1:]:
        if a.semigroup.table != s.table:
            raise MalformedInputError("product of acts over different semigroups")
    sizes = [a.size for a in acts]
    total = 1
    for m in sizes:
        total *= m
    if total > 4096:
        raise SizeGuardError(f"product act would have {total} elements")

    def unrank(i: int) -> list[int]:
        coords = []
        for m in reversed(sizes):
            coords.append(i % m)
            i //= m
        return coords[::-1]

    def rank(coords: Sequence[int]) -> int:
        i = 0
        for c, m in zip(coords, sizes):
            i = i * m + c
        return i

    rows = []
    for i in range(total):
        coords = unrank(i)
        rows.append(
            [
                rank([a.action[c][t] for a, c in zip(acts, coords)])
                for t in range(s.size)
            ]
        )
    return Act(s, rows, check=False)


def quotient_act(a: Act, rho: cg.Congruence) -> tuple[Act, ActHom]:
    """A/rho with the canonical surjection; kernel of the map is rho."""
    if len(rho.labels) != a.size:
        raise MalformedInputError("congruence over a different act")
    if not cg.is_right_congruence(a, rho.labels):
        raise MalformedInputError("quotient by a partition that is not a congruence")
    reps = sorted(set(rho.labels))
    index_of = {lab: i for i, lab in enumerate(reps)}
    proj = [index_of[lab] for lab in rho.labels]
    rows = [
        [proj[a.action[rep][s]] for s in range(a.semigroup.size)] for rep in reps
    ]
    q = Act(a.semigroup, rows, check=False)
    return q, ActHom(a, q, proj, check=False)


def adjoin_zero(a: Act) -> Act:
    """A with a zero adjoined; returns A itself if it already has one."""
    if a.zeros:
        return a
    m = a.size
    rows = [list(row) for row in a.action] + [[m] * a.semigroup.size]
    return Act(a.semigroup, rows, check=False)


def rees_factor(s: Semigroup, ideals: Sequence[Iterable[int]]) -> Act:
    """The regular act with each listed right ideal collapsed to a point.

    The ideals must be nonempty, pairwise disjoint right ideals; each
    becomes a zero of the factor act.
    """
    base = regular_act(s)
    sets = [frozenset(i) for i in ideals]
    if not sets:
        raise MalformedInputError("rees_factor needs at least one ideal")
    taken: set[int] = set()
    for ms in sets:
        if not ms:
            raise MalformedInputError("rees_factor of an empty ideal")
        if not s.is_right_ideal(ms):
            raise NotApplicableError(f"{sorted(ms)} is not a right ideal")
        if taken & ms:
            raise MalformedInputError("rees_factor ideals must be pairwise disjoint")
        taken |= ms
    labels = list(range(s.size))
    for ms in sets:
        lead = min(ms)
        for x in ms:
            labels[x] = lead
    q, _ = quotient_act(base, cg.Congruence(base, labels))
    return q


def power01_act(s: Semigroup) -> Act:
    """{0,1}^S: functions as bitmasks (bit t of f = f(t)), (f*s)(t) = f(st)."""
    n = s.size
    if n > 20:
        raise SizeGuardError(f"power act over {n} elements would have 2^{n} elements")
    table = s.table
    rows = []
    for f in range(1 << n):
        row = []
        for v in range(n):
            g = 0
            for t in range(n):
                if (f >> table[v][t]) & 1:
                    g |= 1 << t
            row.append(g)
        rows.append(row)
    return Act(s, rows, check=False)


@dataclass(frozen=True)
class AmalgamResult:
    act: Act
    map1: ActHom
    map2: ActHom


def amalgam(x1: Act, x2: Act, u: Act, j1: ActHom, j2: ActHom) -> AmalgamResult:
    """Glue x1 and x2 along the common subact u.

    Quotient of the disjoint union by the congruence generated by the
    pairs (j1(u), j2(u)); returns the glued act with the two canonical
    maps from x1 and x2.
    """
    for j, x in ((j1, x1), (j2, x2)):
        if j.source != u or j.target != x:
            raise MalformedInputError("amalgam legs must map the common subact in")
        if not j.is_injective:
            raise NotApplicableError("amalgam legs must be monomorphisms")
    cop, (inc1, inc2) = _coproduct_with_inclusions([x1, x2])
    seeds = [(inc1.map[j1.map[uu]], inc2.map[j2.map[uu]]) for uu in range(u.size)]
    nu = cg.congruence_closure(cop, seeds)
    q, proj = quotient_act(cop, nu)
    return AmalgamResult(
        act=q,
        map1=proj.compose(inc1),
        map2=proj.compose(inc2),
    )


def restrict(a: Act, members: Iterable[int]) -> tuple[Act, ActHom]:
    """A subact as a standalone act, plus its inclusion map."""
    ms = sorted(set(members))
    if not a.is_closed_subset(ms):
        raise MalformedInputError(f"{ms} is not action-closed")
    index_of = {x: i for i, x in enumerate(ms)}
    rows = [
        [index_of[a.action[x][s]] for s in range(a.semigroup.size)] for x in ms
    ]
    sub = Act(a.semigroup, rows, check=False)
    return sub, ActHom(sub, a, ms, check=False)


_BUILDERS = {
    "regular": regular_act,
    "coproduct": coproduct,
    "product": product_act,
    "adjoin_zero": adjoin_zero,
    "rees_factor": rees_factor,
    "power01": power01_act,
}


def build_act(kind: str, *args, **kwargs):
    """Uniform entry point for the named constructions."""
    if kind == "quotient":
        return quotient_act(*args, **kwargs)[0]
    builder = _BUILDERS.get(kind)
    if builder is None:
        raise MalformedInputError(
            f"unknown construction {kind!r}; expected one of "
            f"{sorted(_BUILDERS) + ['quotient']}"
        )
    return builder(*args, **kwargs)


# ---------------------------------------------------------------------------
# subacts and profile


def subact_lattice(a: Act) -> tuple[SubactMask, ...]:
    """Every action-closed nonempty subset.

    Cyclic subacts first, then closure under pairwise unions; every
    subact is the union of the cyclic subacts of its elements, so this
    is exhaustive.
    """
    got = a._cache.get("subact_lattice")
    if got is not None:
        return got
    if a.size > 24:
        raise SizeGuardError(f"subact lattice guard: act size {a.size} > 24")
    cyclic: dict[frozenset[int], list[int]] = {}
    for x in range(a.size):
        cyclic.setdefault(a.cyclic_subact(x), []).append(x)
    seen: set[frozenset[int]] = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        fresh = []
        for ms in frontier:
            for base in list(seen):
                u = ms | base
                if u not in seen:
                    seen.add(u)
                    fresh.append(u)
        frontier = fresh
    masks = []
    for ms in sorted(seen, key=lambda m: (len(m), sorted(m))):
        gens = tuple(x for x in cyclic.get(ms, ()) if a.cyclic_subact(x) == ms)
        masks.append(
            SubactMask(
                act=a,
                members=ms,
                generators=gens,
                is_zero_subact=len(ms) == 1,
            )
        )
    got = tuple(masks)
    a._cache["subact_lattice"] = got
    return got


def components(a: Act) -> tuple[tuple[int, ...], ...]:
    """Indecomposable components: connected classes of the a to a*s graph."""
    parent = list(range(a.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(a.size):
        for v in a.action[x]:
            rx, rv = find(x), find(v)
            if rx != rv:
                parent[max(rx, rv)] = min(rx, rv)
    blocks: dict[int, list[int]] = {}
    for x in range(a.size):
        blocks.setdefault(find(x), []).append(x)
    return tuple(tuple(b) for _, b in sorted(blocks.items()))


def act_profile(a: Act) -> ActProfile:
    got = a._cache.get("act_profile")
    if got is not None:
        return got
    lattice = subact_lattice(a)
    by_members = {m.members: m for m in lattice}
    non_zero = [m.members for m in lattice if len(m.members) >= 2]
    if non_zero:
        inter = frozenset.intersection(*non_zero)
    else:
        inter = frozenset(range(a.size))
    cocyclic = len(inter) >= 2
    got = ActProfile(
        zeros=a.zeros,
        is_zero_act=a.size == 1,
        is_simple=len(lattice) == 1,
        is_theta_simple=all(
            len(m.members) == 1 for m in lattice if len(m.members) < a.size
        ),
        is_cocyclic=cocyclic,
        monolith=by_members[inter] if cocyclic else None,
        components=components(a),
    )
    a._cache["act_profile"] = got
    return got


# ---------------------------------------------------------------------------
# homomorphism search

_HOM_MODES = ("all", "monomorphisms", "isomorphisms", "first_embedding", "endomorphisms")


def homomorphisms(a: Act, b: Act, mode: str = "all") -> list[ActHom]:
    """Equivariant maps from a to b, found by propagation-pruned search.

    Branches on elements in a fixed order (small components first,
    within a component the elements with the largest cyclic subacts);
    every choice is propagated through the action before the next branch.
    Results are sorted by their map tuples.
    """
    if mode not in _HOM_MODES:
        raise MalformedInputError(f"unknown mode {mode!r}; expected one of {_HOM_MODES}")
    if a.semigroup.table != b.semigroup.table:
        raise MalformedInputError("homomorphisms between acts over different semigroups")
    if mode == "endomorphisms" and a != b:
        raise MalformedInputError("endomorphisms mode needs both acts equal")
    injective = mode in ("monomorphisms", "isomorphisms", "first_embedding")
    if mode == "isomorphisms" and a.size != b.size:
        return []
    if injective and a.size > b.size:
        return []

    comp_of = {}
    comp_sizes = {}
    for block in components(a):
        for x in block:
            comp_of[x] = block[0]
            comp_sizes[x] = len(block)
    order = sorted(
        range(a.size),
        key=lambda x: (comp_sizes[x], comp_of[x], -len(a.cyclic_subact(x)), x),
    )

    n = a.semigroup.size
    arows = a.action
    brows = b.action
    image = [-1] * a.size
    used = [0] * b.size
    results: list[ActHom] = []

    def propagate(x: int, v: int, trail: list[int]) -> bool:
        queue = [(x, v)]
        while queue:
            y, w = queue.pop()
            cur = image[y]
            if cur != -1:
                if cur != w:
                    return False
                continue
            if injective and used[w]:
                return False
            image[y] = w
            used[w] += 1
            trail.append(y)
            ry, rw = arows[y], brows[w]
            for s in range(n):
                queue.append((ry[s], rw[s]))
        return True

    def undo(trail: list[int]) -> None:
        for y in trail:
            used[image[y]] -= 1
            image[y] = -1

    def dfs(pos: int) -> bool:
        while pos < a.size and image[order[pos]] != -1:
            pos += 1
        if pos == a.size:
            results.append(ActHom(a, b, list(image), check=False))
            return mode == "first_embedding"
        x = order[pos]
        for v in range(b.size):
            if injective and used[v]:
                continue
            trail: list[int] = []
            if propagate(x, v, trail) and dfs(pos + 1):
                return True
            undo(trail)
        return False

    dfs(0)
    if mode == "isomorphisms":
        results = [h for h in results if h.is_bijective]
    results.sort(key=lambda h: h.map)
    return results


def endomorphisms(a: Act) -> list[ActHom]:
    return homomorphisms(a, a, "all")
