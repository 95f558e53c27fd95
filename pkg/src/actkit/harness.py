"""Verification engine: quantifies each supported statement over an
enumerated scope of semigroups and acts, collecting machine-checkable
counterexamples.

Work fans out per semigroup (acts are re-enumerated inside each worker,
which is cheaper than shipping them); aggregation is deterministic by
semigroup ordinal. Every reported counterexample is re-validated from
its serialized tables before the report is returned.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Callable

from . import acts as ac
from . import classifiers as cl
from . import congruences as cg
from .enumeration import (
    Budget,
    EnumerationScope,
    enumerate_acts,
    enumerate_semigroups,
)
from .errors import (
    BudgetExceededError,
    InvariantViolationError,
    MalformedInputError,
)
from .semigroups import Semigroup


@dataclass(frozen=True)
class VerificationReport:
    theorem_id: str
    claim: str
    scope: EnumerationScope
    instances_checked: int
    counterexamples: tuple[dict, ...]
    notes: tuple[str, ...]
    elapsed: float
    verdict: str  # verified | falsified | skipped: <reason>

    def to_obj(self) -> dict:
        # elapsed is deliberately left out so reports over identical
        # scopes are byte-identical across runs
        return {
            "theorem_id": self.theorem_id,
            "claim": self.claim,
            "scope": asdict(self.scope),
            "instances_checked": self.instances_checked,
            "counterexamples": list(self.counterexamples),
            "notes": list(self.notes),
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True)


class ActContext:
    """Per-act lazy cache shared by all checks run against one act."""

    def __init__(self, act: ac.Act):
        self.act = act
        self._sub: dict[frozenset[int], tuple[bool, bool]] = {}
        self._large: dict[frozenset[int], cl.LargenessVerdict] = {}

    @cached_property
    def profile(self) -> ac.ActProfile:
        return ac.act_profile(self.act)

    @cached_property
    def uniform(self) -> cl.UniformityVerdict:
        # sweeps skip the per-act lattice cross-check; the acceptance suite
        # compares the reduction against the exhaustive definition separately
        return cl.is_uniform(self.act, cross_check=False)

    @cached_property
    def irr(self) -> cl.IrreducibilityReport:
        return cl.irreducibility_report(self.act)

    @cached_property
    def masks(self) -> tuple[ac.SubactMask, ...]:
        return ac.subact_lattice(self.act)

    @cached_property
    def nonzero_masks(self) -> tuple[ac.SubactMask, ...]:
        return tuple(m for m in self.masks if m.cardinality >= 2)

    @cached_property
    def endos(self) -> list[cl.EndoReport]:
        return cl.endomorphism_report(self.act)

    def large(self, members: frozenset[int]) -> cl.LargenessVerdict:
        if members not in self._large:
            self._large[members] = cl.is_large(self.act, members, cross_check=False)
        return self._large[members]

    def sub_verdict(self, members: frozenset[int]) -> tuple[bool, bool]:
        """(uniform, sdi) of the subact on members, as a standalone act."""
        if members not in self._sub:
            sub, _ = ac.restrict(self.act, members)
            self._sub[members] = (
                cl.is_uniform(sub, cross_check=False).is_uniform,
                cl.irreducibility_report(sub).is_sdi,
            )
        return self._sub[members]

    def sub_profile(self, members: frozenset[int]) -> ac.ActProfile:
        sub, _ = ac.restrict(self.act, members)
        return ac.act_profile(sub)


PASS = True
ActCheck = Callable[[Semigroup, ac.Act, ActContext], object]
_ACT_CHECKS: dict[str, ActCheck] = {}
_SGP_CHECKS: dict[str, Callable] = {}
CLAIMS: dict[str, str] = {}
# default quantification bounds per check: (semigroup order, act order)
DEFAULT_BOUNDS: dict[str, tuple[int, int]] = {}


def _act_check(check_id: str, claim: str, max_s: int, max_a: int):
    def wrap(fn: ActCheck) -> ActCheck:
        _ACT_CHECKS[check_id] = fn
        CLAIMS[check_id] = claim
        DEFAULT_BOUNDS[check_id] = (max_s, max_a)
        return fn

    return wrap


def _sgp_check(check_id: str, claim: str, max_s: int, max_a: int = 0):
    def wrap(fn):
        _SGP_CHECKS[check_id] = fn
        CLAIMS[check_id] = claim
        DEFAULT_BOUNDS[check_id] = (max_s, max_a)
        return fn

    return wrap


def _blocks(c: cg.Congruence) -> list[list[int]]:
    return [list(b) for b in c.blocks()]


# ---------------------------------------------------------------------------
# act-level checks (fused sweep: S <= 3 with acts <= 4, shape checks <= 5)


@_act_check("pr1", "every subdirectly irreducible act is uniform", 3, 4)
def _chk_pr1(s, a, c):
    if a.size < 2 or not c.irr.is_sdi:
        return None
    if c.uniform.is_uniform:
        return PASS
    return {
        "detail": "subdirectly irreducible but not uniform",
        "subact": sorted(c.uniform.failing_subact),
        "congruence": _blocks(c.uniform.witness),
    }


@_act_check("co2", "two non-zero subacts of a uniform act share two elements", 3, 4)
def _chk_co2(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform:
        return None
    masks = c.nonzero_masks
    for i, b in enumerate(masks):
        for d in masks[i + 1 :]:
            if len(b.members & d.members) < 2:
                return {
                    "detail": "non-zero subacts with small intersection",
                    "subact": sorted(b.members),
                    "other_subact": sorted(d.members),
                }
    return PASS


@_act_check("co5", "a uniform act has at most two zeros", 3, 4)
def _chk_co5(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform:
        return None
    if len(a.zeros) <= 2:
        return PASS
    return {"detail": f"uniform act with {len(a.zeros)} zeros"}


@_act_check("co8", "a uniform act with two zeros is subdirectly irreducible", 3, 4)
def _chk_co8(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform or len(a.zeros) != 2:
        return None
    if c.irr.is_sdi:
        return PASS
    return {"detail": "uniform with two zeros but not subdirectly irreducible"}


@_act_check("co18", "zeros lie inside or outside each non-zero subact together", 3, 4)
def _chk_co18(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform or not a.zeros:
        return None
    z = a.zeros
    for b in c.nonzero_masks:
        if not (z <= b.members or not (z & b.members)):
            return {
                "detail": "a non-zero subact splits the zero set",
                "subact": sorted(b.members),
                "zeros": sorted(z),
            }
    return PASS


@_act_check("pr9", "a decomposable uniform act is a zero pair or B plus a zero", 3, 4)
def _chk_pr9(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform:
        return None
    comps = c.profile.components
    if len(comps) < 2:
        return None
    bad = {"detail": "", "components": [list(x) for x in comps]}
    if len(comps) != 2:
        bad["detail"] = f"uniform act with {len(comps)} components"
        return bad
    sizes = sorted(len(x) for x in comps)
    if sizes == [1, 1]:
        return PASS
    if sizes[0] != 1:
        bad["detail"] = "decomposable uniform act with no zero component"
        return bad
    b = frozenset(max(comps, key=len))
    if b & a.zeros:
        bad["detail"] = "the non-singleton component has a zero"
        return bad
    if not c.sub_verdict(b)[0]:
        bad["detail"] = "the non-singleton component is not uniform"
        return bad
    return PASS


@_act_check("pr4", "adjoining a zero to a zero-free act preserves both verdicts", 3, 4)
def _chk_pr4(s, a, c):
    if a.size < 2 or a.zeros:
        return None
    az = ac.adjoin_zero(a)
    u0, u1 = c.uniform.is_uniform, cl.is_uniform(az, cross_check=False).is_uniform
    s0, s1 = c.irr.is_sdi, cl.irreducibility_report(az).is_sdi
    if u0 == u1 and s0 == s1:
        return PASS
    return {
        "detail": f"uniform {u0}->{u1}, sdi {s0}->{s1} after adjoining a zero",
    }


@_act_check("le1", "the five uniformity conditions agree when zeros are scarce", 3, 4)
def _chk_le1(s, a, c):
    if a.size < 2 or len(a.zeros) > 1:
        return None
    i1 = c.uniform.is_uniform
    i2 = all(c.large(b.members).is_large for b in c.nonzero_masks)
    cyclic = {
        frozenset(a.cyclic_subact(x)) for x in range(a.size) if x not in a.zeros
    }
    i3 = all(c.large(b).is_large for b in cyclic)
    i4 = all(
        c.large(b.members).is_large
        for b in c.nonzero_masks
        if len(ac.components(ac.restrict(a, b.members)[0])) == 1
    )
    i5 = all(c.sub_verdict(b.members)[0] for b in c.nonzero_masks)
    if i1 == i2 == i3 == i4 == i5:
        return PASS
    return {
        "detail": f"conditions diverge: uniform={i1}, all-large={i2}, "
        f"cyclic-large={i3}, indecomposable-large={i4}, all-uniform={i5}",
    }


@_act_check("le3", "uniformity and irreducibility pass to subacts and back from large ones", 3, 4)
def _chk_le3(s, a, c):
    if a.size < 2:
        return None
    au, asdi = c.uniform.is_uniform, c.irr.is_sdi
    for b in c.nonzero_masks:
        bu, bsdi = c.sub_verdict(b.members)
        if au and not bu:
            return {"detail": "subact of a uniform act is not uniform",
                    "subact": sorted(b.members)}
        if asdi and not bsdi:
            return {"detail": "subact of a subdirectly irreducible act is not",
                    "subact": sorted(b.members)}
        if c.large(b.members).is_large:
            if bu and not au:
                return {"detail": "large uniform subact inside a non-uniform act",
                        "subact": sorted(b.members)}
            if bsdi and not asdi:
                return {"detail": "large subdirectly irreducible subact inside "
                                  "a reducible act",
                        "subact": sorted(b.members)}
    return PASS


@_act_check("th1", "subdirect irreducibility is carried by a large minimal subact", 3, 4)
def _chk_th1(s, a, c):
    if a.size < 2:
        return None
    witness_exists = False
    for b in c.nonzero_masks:
        if not c.large(b.members).is_large:
            continue
        p = c.sub_profile(b.members)
        if not (p.is_simple or p.is_theta_simple):
            continue
        if c.sub_verdict(b.members)[1]:
            witness_exists = True
            break
    if witness_exists == c.irr.is_sdi:
        return PASS
    return {
        "detail": f"sdi={c.irr.is_sdi} but large (theta-)simple sdi subact "
        f"exists={witness_exists}",
    }


@_act_check("co1", "sdi means uniform, cocyclic, with sdi monolith", 3, 4)
def _chk_co1(s, a, c):
    if a.size < 2:
        return None
    rhs = False
    if c.uniform.is_uniform and c.profile.is_cocyclic:
        rhs = c.sub_verdict(c.profile.monolith.members)[1]
    if rhs == c.irr.is_sdi:
        return PASS
    return {"detail": f"sdi={c.irr.is_sdi} but uniform+cocyclic+sdi-monolith={rhs}"}


@_act_check("pr10", "an element moved by a left identity lies in every non-zero subact", 3, 4)
def _chk_pr10(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform:
        return None
    ids = sorted(s.profile.left_identities)
    movers = [
        (x, e) for x in range(a.size) for e in ids if a.action[x][e] != x
    ]
    if not movers:
        return None
    for x, e in movers:
        if any(x not in b.members for b in c.nonzero_masks):
            return {"detail": f"element {x} moved by left identity {e} misses "
                              f"a non-zero subact"}
    if not c.profile.is_cocyclic:
        return {"detail": "act with a moved element is not cocyclic"}
    if len(a.zeros) > 1:
        return {"detail": f"{len(a.zeros)} zeros despite a moved element"}
    orbits = {frozenset(a.cyclic_subact(x)) for x, _ in movers}
    if len(orbits) > 1:
        return {"detail": "moved elements generate distinct cyclic subacts"}
    return PASS


@_act_check("pr5", "some power of an endomorphism splits kernel from image", 3, 4)
def _chk_pr5(s, a, c):
    if a.size < 2:
        return None
    for r in c.endos:
        if r.stabilization_n is None or r.stabilization_n > a.size:
            return {
                "detail": f"stabilization {r.stabilization_n} outside 1..{a.size}",
                "endomorphism": list(r.endo.map),
            }
        if r.endo.is_surjective and not r.endo.is_bijective:
            return {
                "detail": "surjective endomorphism that is not bijective",
                "endomorphism": list(r.endo.map),
            }
    return PASS


@_act_check("pr11", "on uniform acts, monomorphism equals non-nilpotent", 3, 4)
def _chk_pr11(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform:
        return None
    for r in c.endos:
        if r.is_mono == r.is_nilpotent:
            return {
                "detail": f"mono={r.is_mono}, nilpotent={r.is_nilpotent}",
                "endomorphism": list(r.endo.map),
            }
    return PASS


@_act_check("pr12", "a fat fiber over a zero forces a constant power", 3, 4)
def _chk_pr12(s, a, c):
    if a.size < 2 or not c.uniform.is_uniform or not a.zeros:
        return None
    for r in c.endos:
        for theta, m in r.nilpotency:
            fiber = sum(1 for v in r.endo.map if v == theta)
            if (fiber >= 2) != (m is not None):
                return {
                    "detail": f"fiber over {theta} has {fiber} elements but "
                    f"constant exponent is {m}",
                    "endomorphism": list(r.endo.map),
                }
    return PASS


@_act_check("rm2", "endomorphisms of a zero-free uniform act are isomorphisms", 3, 4)
def _chk_rm2(s, a, c):
    if a.size < 2 or a.zeros or not c.uniform.is_uniform:
        return None
    for r in c.endos:
        if not r.endo.is_bijective:
            return {
                "detail": "non-bijective endomorphism",
                "endomorphism": list(r.endo.map),
            }
    return PASS


@_act_check("th2", "over right zero semigroups sdi acts are pairs or B plus zero", 3, 5)
def _chk_th2(s, a, c):
    if a.size < 2 or not s.profile.is_right_zero_semigroup:
        return None
    comps = c.profile.components
    shape = a.size == 2
    if not shape and len(comps) == 2:
        sizes = sorted(comps, key=len)
        if len(sizes[0]) == 1 and len(sizes[1]) == 2:
            b = frozenset(sizes[1])
            shape = not (b & a.zeros) and c.sub_profile(b).is_simple
    if shape == c.irr.is_sdi:
        return PASS
    return {
        "detail": f"sdi={c.irr.is_sdi}, two-element-or-simple-pair-plus-zero={shape}",
        "components": [list(x) for x in comps],
    }


@_act_check("co13", "uniform acts over right zero semigroups match three shapes", 3, 5)
def _chk_co13(s, a, c):
    if a.size < 2 or not s.profile.is_right_zero_semigroup:
        return None
    if not c.uniform.is_uniform:
        return None
    if not c.profile.is_cocyclic:
        return {"detail": "uniform act over a right zero semigroup, not cocyclic"}
    comps = c.profile.components
    if len(comps) == 2 and all(len(x) == 1 for x in comps):
        return PASS
    cyclic_members = None
    if len(comps) == 1:
        if any(a.cyclic_subact(x) == frozenset(range(a.size)) for x in range(a.size)):
            cyclic_members = frozenset(range(a.size))
        tag = "whole"
    elif len(comps) == 2:
        small, big = sorted(comps, key=len)
        if len(small) == 1 and small[0] in a.zeros:
            bm = frozenset(big)
            if any(a.cyclic_subact(x) == bm for x in bm):
                cyclic_members = bm
        tag = "plus zero"
    else:
        return {"detail": f"uniform act with {len(comps)} components"}
    if cyclic_members is None:
        return {"detail": f"{tag}: carrier is not cyclic",
                "components": [list(x) for x in comps]}
    if len(a.zeros) > 1:
        return {"detail": f"{len(a.zeros)} zeros in a cyclic-shape uniform act"}
    p = c.sub_profile(cyclic_members)
    if not (p.is_simple or p.is_theta_simple):
        return {"detail": "cyclic part neither simple nor theta-simple",
                "subact": sorted(cyclic_members)}
    return PASS


@_act_check("pr8", "the translation criterion decides uniformity on monoid acts", 3, 5)
def _chk_pr8(s, a, c):
    if a.size < 2 or not s.is_monoid or len(a.zeros) > 1:
        return None
    got = cl.is_uniform_pr8(a)
    want = c.uniform.is_uniform
    if got == want:
        return PASS
    return {"detail": f"criterion says {got}, direct verdict is {want}"}


@_act_check("co9", "uniform two-zero acts embed in the function act", 3, 5)
def _chk_co9(s, a, c):
    if a.size < 2 or len(a.zeros) != 2 or not c.uniform.is_uniform:
        return None
    if a.size > (1 << s.size):
        return {"detail": f"size {a.size} exceeds 2^{s.size}"}
    emb = cl.embed_in_power_act(a)
    if emb is None:
        return {"detail": "no embedding into the function act"}
    return PASS


# ---------------------------------------------------------------------------
# semigroup-level checks


def _uniform_semigroup(s: Semigroup) -> bool:
    return s.size >= 2 and cl.is_uniform(ac.regular_act(s), cross_check=False).is_uniform


@_sgp_check("pr6", "exactly the non-groups admit indecomposable non-uniform acts", 3, 4)
def _chk_pr6(s, m_bound, budget):
    if s.profile.is_group:
        for m in range(2, m_bound + 1):
            for a in enumerate_acts(s, m, budget=budget):
                if len(ac.components(a)) > 1:
                    continue
                if not cl.is_uniform(a, cross_check=False).is_uniform:
                    return True, {
                        "detail": "indecomposable non-uniform act over a group",
                        "act": [list(r) for r in a.action],
                    }
        return True, None
    found = cl.indecomposable_nonuniform_witness(s)
    if found is None:
        return True, {
            "detail": "no amalgam witness for a non-group semigroup",
        }
    return True, None


@_sgp_check("ex1", "subgroups correspond to congruences of the regular act", 4)
def _chk_ex1(s, m_bound, budget):
    if not s.profile.is_group:
        return False, None
    try:
        cg.group_congruence_bijection(s)
    except InvariantViolationError as e:
        return True, {"detail": str(e)}
    return True, None


@_sgp_check("th3", "uniform regular monoids are groups with up to two tails", 4)
def _chk_th3(s, m_bound, budget):
    if not s.is_monoid or not s.profile.is_regular or s.size < 2:
        return False, None
    c = cl.classify_regular_uniform_monoid(s)
    shape = c.case in ("Group", "GroupPlusZero", "GroupPlusTwoLeftZeros")
    if c.regular_act_uniform == shape == c.cyclic_acts_all_uniform:
        return True, None
    return True, {
        "detail": f"case={c.case}, regular act uniform={c.regular_act_uniform}, "
        f"all cyclic acts uniform={c.cyclic_acts_all_uniform}",
    }


@_sgp_check("pr7", "two-zero uniform acts exist exactly off left reversibility", 4, 5)
def _chk_pr7(s, m_bound, budget):
    if not s.is_monoid:
        return False, None
    try:
        q = cl.construct_two_zero_uniform(s)
    except InvariantViolationError as e:
        return True, {"detail": f"construction failed certification: {e}"}
    if not s.profile.is_left_reversible:
        if q is None:
            return True, {"detail": "construction failed on a non-left-reversible monoid"}
        ok = (
            q.size >= 3
            and len(q.zeros) == 2
            and cl.is_uniform(q, cross_check=False).is_uniform
            and cl.irreducibility_report(q).is_sdi
        )
        if not ok:
            return True, {
                "detail": "constructed act fails re-validation",
                "act": [list(r) for r in q.action],
            }
        return True, None
    if q is not None:
        return True, {
            "detail": "construction produced an act over a left-reversible monoid",
            "act": [list(r) for r in q.action],
        }
    for m in range(3, m_bound + 1):
        for a in enumerate_acts(s, m, budget=budget):
            if len(a.zeros) == 2 and cl.is_uniform(a, cross_check=False).is_uniform:
                return True, {
                    "detail": "uniform two-zero act over a left-reversible monoid",
                    "act": [list(r) for r in a.action],
                }
    return True, None


@_sgp_check("lem-idem", "idempotents of uniform semigroups are left zeros or left identities", 4)
def _chk_lem_idem(s, m_bound, budget):
    if not _uniform_semigroup(s):
        return False, None
    for e in sorted(s.profile.idempotents):
        left_zero = all(s.table[e][x] == e for x in s.elements)
        left_identity = all(s.table[e][x] == x for x in s.elements)
        if not (left_zero or left_identity):
            return True, {"detail": f"idempotent {e} is neither"}
    return True, None


@_sgp_check("co15", "uniform semigroups without left zeros cancel on the left", 4)
def _chk_co15(s, m_bound, budget):
    if not _uniform_semigroup(s) or s.profile.left_zeros:
        return False, None
    p = s.profile
    if not (p.is_left_cancellative and p.is_right_simple):
        return True, {
            "detail": f"left cancellative={p.is_left_cancellative}, "
            f"right simple={p.is_right_simple}",
        }
    if s.is_monoid and not p.is_group:
        return True, {"detail": "uniform monoid without left zeros is not a group"}
    return True, None


@_sgp_check("co16", "products falling onto left zeros force a nilpotent-like power", 4)
def _chk_co16(s, m_bound, budget):
    if not _uniform_semigroup(s) or not s.profile.left_zeros:
        return False, None
    lz = s.profile.left_zeros
    tested = False
    for x in s.elements:
        for y in s.elements:
            if y in lz or s.table[x][y] not in lz:
                continue
            tested = True
            if not (s.powers(x) & lz):
                return True, {
                    "detail": f"{x}*{y} is a left zero, y is not, but no power "
                    f"of {x} is",
                }
    return tested, None


@_sgp_check("le4", "power-separating elements over large ideals are left identities", 4)
def _chk_le4(s, m_bound, budget):
    if s.size < 2:
        return False, None
    reg = ac.regular_act(s)
    tested = False
    for mask in ac.subact_lattice(reg):
        ideal = mask.members
        if len(ideal) < 2 or not cl.is_large(reg, ideal, cross_check=False).is_large:
            continue
        items = sorted(ideal)
        for x in s.elements:
            pows = s.powers(x)
            images = {i: {s.table[p][i] for p in pows} for i in items}
            separated = all(
                not (images[i] & images[j])
                for k, i in enumerate(items)
                for j in items[k + 1 :]
            )
            if not separated:
                continue
            tested = True
            if any(s.table[x][t] != t for t in s.elements):
                return True, {
                    "detail": f"{x} separates the large ideal {items} through "
                    f"all powers yet is not a left identity",
                }
    return tested, None


@_sgp_check("co11", "absorbing products in uniform monoids pin the identity", 4)
def _chk_co11(s, m_bound, budget):
    if not s.is_monoid or not _uniform_semigroup(s):
        return False, None
    lz = s.profile.left_zeros
    e = s.identity
    for x in s.elements:
        for y in s.elements:
            if s.table[x][y] == y and x != e and y not in lz:
                return True, {"detail": f"{x}*{y}={y} with x not 1, y not a left zero"}
    return True, None


@_sgp_check("co17", "unit translates of non-zeros keep the unit count", 4)
def _chk_co17(s, m_bound, budget):
    if not s.is_monoid or not _uniform_semigroup(s):
        return False, None
    units = s.profile.unit_group
    lz = s.profile.left_zeros
    for t in s.elements:
        if t in lz:
            continue
        orbit = {s.table[g][t] for g in units}
        if len(orbit) != len(units):
            return True, {
                "detail": f"|G|={len(units)} but |G*{t}|={len(orbit)}",
            }
    return True, None


@_sgp_check("prop-GI", "uniform monoids split into units and a two-sided ideal", 4)
def _chk_prop_gi(s, m_bound, budget):
    if not s.is_monoid or not _uniform_semigroup(s):
        return False, None
    right_invertible = frozenset(
        x for x in s.elements
        if any(s.table[x][y] == s.identity for y in s.elements)
    )
    units = s.profile.unit_group
    if right_invertible != units:
        return True, {
            "detail": f"right invertibles {sorted(right_invertible)} differ "
            f"from units {sorted(units)}",
        }
    ideal = s.profile.non_units
    for i in ideal:
        for x in s.elements:
            if s.table[i][x] not in ideal or s.table[x][i] not in ideal:
                return True, {"detail": f"non-units not an ideal at {i},{x}"}
    n = s.size
    for bits in range(1, 1 << n):
        sub = [x for x in range(n) if bits >> x & 1]
        if s.identity not in sub:
            continue
        if any(s.table[x][y] not in sub for x in sub for y in sub):
            continue
        if all(any(s.table[x][y] == s.identity for y in sub) for x in sub):
            if not (set(sub) <= units):
                return True, {
                    "detail": f"subgroup {sub} with the monoid identity escapes "
                    f"the unit group",
                }
    return True, None


ALL_CHECK_IDS = tuple(
    sorted(list(_ACT_CHECKS) + list(_SGP_CHECKS))
)


# ---------------------------------------------------------------------------
# sweep engine


def _run_semigroup_task(payload):
    """Evaluate the given checks against one semigroup (and its acts).

    Returns {check_id: [instances, [counterexamples], [notes], budget_hit]}.
    """
    table, act_checks, sgp_checks, strict_pr8, budget_limit = payload
    s = Semigroup(table)
    budget = Budget(budget_limit) if budget_limit else None
    out = {
        cid: [0, [], [], False]
        for cid, _ in act_checks + sgp_checks
    }
    sgp_obj = [list(r) for r in table]
    try:
        if act_checks:
            max_m = max(m for _, m in act_checks)
            for m in range(1, max_m + 1):
                for a in enumerate_acts(s, m, budget=budget):
                    ctx = ActContext(a)
                    for cid, bound in act_checks:
                        if a.size > bound:
                            continue
                        slot = out[cid]
                        got = _ACT_CHECKS[cid](s, a, ctx)
                        if got is None:
                            continue
                        slot[0] += 1
                        if got is not PASS:
                            got.setdefault("act", [list(r) for r in a.action])
                            cex = {
                                "semigroup": sgp_obj,
                                "act": got.pop("act"),
                                "witness": got,
                            }
                            if cid == "pr8" and not strict_pr8:
                                slot[2].append(
                                    f"semigroup {sgp_obj} act {cex['act']}: "
                                    + got["detail"]
                                )
                            elif len(slot[1]) < 3:
                                slot[1].append(cex)
        for cid, bound in sgp_checks:
            slot = out[cid]
            tested, witness = _SGP_CHECKS[cid](s, bound, budget)
            if tested:
                slot[0] += 1
            if witness is not None:
                act_obj = witness.pop("act", None)
                slot[1].append(
                    {"semigroup": sgp_obj, "act": act_obj, "witness": witness}
                )
    except BudgetExceededError:
        for slot in out.values():
            slot[3] = True
    return out


def _revalidate(cid: str, cex: dict, m_bound: int) -> bool:
    """Re-run the check on the serialized counterexample; True when the
    violation reproduces."""
    s = Semigroup(tuple(tuple(r) for r in cex["semigroup"]))
    if cid in _ACT_CHECKS:
        a = ac.Act(s, tuple(tuple(r) for r in cex["act"]))
        got = _ACT_CHECKS[cid](s, a, ActContext(a))
        return got is not None and got is not PASS
    tested, witness = _SGP_CHECKS[cid](s, m_bound, None)
    return tested and witness is not None


def verify_many(
    ids: list[str],
    *,
    max_s: int | None = None,
    max_a: int | None = None,
    up_to_iso: bool = False,
    jobs: int | None = None,
    budget: int | None = None,
    strict_pr8: bool = False,
) -> list[VerificationReport]:
    for cid in ids:
        if cid not in CLAIMS:
            raise MalformedInputError(
                f"unknown check id {cid!r}; known: {', '.join(ALL_CHECK_IDS)}"
            )
    bounds = {
        cid: (
            max_s if max_s is not None else DEFAULT_BOUNDS[cid][0],
            max_a if max_a is not None else DEFAULT_BOUNDS[cid][1],
        )
        for cid in ids
    }
    sweep_s = max(b[0] for b in bounds.values())
    scope_of = {
        cid: EnumerationScope(
            max_semigroup_order=bounds[cid][0],
            max_act_order=bounds[cid][1],
            up_to_iso=up_to_iso,
        )
        for cid in ids
    }
    budget_limit = budget if budget is not None else Budget.from_env().limit

    t0 = time.time()
    payloads = []
    outer = EnumerationScope(max_semigroup_order=sweep_s, up_to_iso=up_to_iso)
    for s in enumerate_semigroups(outer):
        act_checks = [
            (cid, bounds[cid][1])
            for cid in ids
            if cid in _ACT_CHECKS and s.size <= bounds[cid][0]
        ]
        sgp_checks = [
            (cid, bounds[cid][1])
            for cid in ids
            if cid in _SGP_CHECKS and s.size <= bounds[cid][0]
        ]
        if act_checks or sgp_checks:
            payloads.append(
                (s.table, act_checks, sgp_checks, strict_pr8, budget_limit)
            )

    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_semigroup_task, payloads, chunksize=4))
    else:
        results = [_run_semigroup_task(p) for p in payloads]

    merged = {cid: [0, [], [], False] for cid in ids}
    for res in results:
        for cid, (inst, cexs, notes, hit) in res.items():
            slot = merged[cid]
            slot[0] += inst
            slot[1].extend(cexs)
            slot[2].extend(notes)
            slot[3] = slot[3] or hit
    elapsed = time.time() - t0

    reports = []
    for cid in ids:
        inst, cexs, notes, hit = merged[cid]
        for cex in cexs:
            if not _revalidate(cid, cex, bounds[cid][1]):
                raise InvariantViolationError(
                    f"counterexample for {cid} does not re-validate"
                )
        if cexs:
            verdict = "falsified"
        elif hit:
            verdict = "skipped: search budget exceeded"
        elif inst == 0:
            verdict = "skipped: no instances in scope"
        else:
            verdict = "verified"
        reports.append(
            VerificationReport(
                theorem_id=cid,
                claim=CLAIMS[cid],
                scope=scope_of[cid],
                instances_checked=inst,
                counterexamples=tuple(cexs),
                notes=tuple(notes[:20]),
                elapsed=elapsed,
                verdict=verdict,
            )
        )
    return reports


def verify(theorem_id: str, **kwargs) -> VerificationReport:
    return verify_many([theorem_id], **kwargs)[0]


def verify_all(**kwargs) -> list[VerificationReport]:
    return verify_many(list(ALL_CHECK_IDS), **kwargs)
