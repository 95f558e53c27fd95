"""Classification of acts: largeness, uniformity, irreducibility, structure.

Verdicts carry machine-checkable witnesses (a congruence or a subset)
wherever a property fails, so callers can re-validate independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import acts as ac
from . import congruences as cg
from .errors import (
    InvariantViolationError,
    MalformedInputError,
    NotApplicableError,
)
from .semigroups import Semigroup


@dataclass(frozen=True)
class LargenessVerdict:
    is_large: bool
    witness: cg.Congruence | None  # nondiagonal, meets the Rees congruence in the diagonal


def _as_members(b) -> frozenset[int]:
    if isinstance(b, ac.SubactMask):
        return b.members
    return frozenset(b)


def is_large(a: ac.Act, b, *, cross_check: bool | None = None) -> LargenessVerdict:
    """Whether the subact b leaves no nondiagonal congruence meeting rho_b
    in the diagonal.

    Reduction: it is enough to test monocyclic congruences, since every
    nondiagonal congruence contains one and meets only shrink. With
    cross_check (default for acts of size <= 8) the verdict is compared
    against a scan of the full congruence lattice.
    """
    members = _as_members(b)
    if not a.is_closed_subset(members):
        raise MalformedInputError(f"{sorted(members)} is not a subact")
    if len(members) < 2:
        raise NotApplicableError("largeness is only asked of non-zero subacts")
    rho_b = cg.rees_congruence(a, members)
    verdict = LargenessVerdict(True, None)
    for c in cg.all_monocyclics(a):
        if cg.meet(c, rho_b).is_diagonal:
            verdict = LargenessVerdict(False, c)
            break
    if cross_check is None:
        cross_check = a.size <= 8
    if cross_check:
        brute = not any(
            cg.meet(c, rho_b).is_diagonal
            for c in cg.all_congruences(a).nondiagonal()
        )
        if brute != verdict.is_large:
            raise InvariantViolationError(
                "monocyclic largeness reduction disagrees with the full lattice"
            )
    return verdict


@dataclass(frozen=True)
class UniformityVerdict:
    is_uniform: bool
    failing_subact: frozenset[int] | None
    witness: cg.Congruence | None


def is_uniform(a: ac.Act, *, cross_check: bool | None = None) -> UniformityVerdict:
    """Whether every non-zero subact is large.

    Tested on non-zero cyclic subacts plus, when there are exactly two
    zeros, the zero pair: any other non-zero subact contains one of
    these, and largeness is upward closed. Three or more zeros fail
    immediately with the two-zero subset as witness.
    """
    if a.size < 2:
        raise NotApplicableError("uniformity is defined for acts with at least 2 elements")
    zeros = sorted(a.zeros)
    if len(zeros) > 2:
        bad = frozenset(zeros[:2])
        return UniformityVerdict(False, bad, cg.monocyclic(a, zeros[0], zeros[2]))
    tested: set[frozenset[int]] = set()
    for x in range(a.size):
        if x in a.zeros:
            continue
        cs = a.cyclic_subact(x)
        if cs in tested:
            continue
        tested.add(cs)
        verdict = is_large(a, cs, cross_check=cross_check)
        if not verdict.is_large:
            return UniformityVerdict(False, cs, verdict.witness)
    if len(zeros) == 2:
        zs = frozenset(zeros)
        verdict = is_large(a, zs, cross_check=cross_check)
        if not verdict.is_large:
            return UniformityVerdict(False, zs, verdict.witness)
    return UniformityVerdict(True, None, None)


def is_uniform_pr8(a: ac.Act) -> bool:
    """Translation-based uniformity test over a monoid, at most one zero.

    True iff for every non-zero element a0 and every pair x != y some
    s, t act-separate a0 inside the monocyclic congruence of (x, y):
    (a0*s, a0*t) related with a0*s != a0*t.
    """
    if not a.semigroup.is_monoid:
        raise NotApplicableError("this test needs a monoid action")
    if len(a.zeros) > 1:
        raise NotApplicableError("this test needs at most one zero")
    if a.size < 2:
        raise NotApplicableError("uniformity is defined for acts with at least 2 elements")
    n = a.semigroup.size
    for a0 in range(a.size):
        if a0 in a.zeros:
            continue
        row = a.action[a0]
        for x in range(a.size):
            for y in range(x + 1, a.size):
                rho = cg.monocyclic(a, x, y)
                if not any(
                    row[s] != row[t] and rho.related(row[s], row[t])
                    for s in range(n)
                    for t in range(n)
                ):
                    return False
    return True


@dataclass(frozen=True)
class IrreducibilityReport:
    is_irreducible: bool
    is_sdi: bool
    least_nondiagonal: cg.Congruence | None


def irreducibility_report(a: ac.Act) -> IrreducibilityReport:
    """Subdirect irreducibility (least nondiagonal congruence exists) and
    irreducibility (pairwise meets of nondiagonal congruences are
    nondiagonal); for finite acts the two must agree.
    """
    if a.size < 2:
        raise NotApplicableError("irreducibility is defined for acts with at least 2 elements")
    monos = cg.all_monocyclics(a)
    total = reduce(cg.meet, monos)
    sdi = not total.is_diagonal
    irreducible = True
    for i, c in enumerate(monos):
        for d in monos[i + 1 :]:
            if cg.meet(c, d).is_diagonal:
                irreducible = False
                break
        if not irreducible:
            break
    if sdi != irreducible:
        raise InvariantViolationError(
            "subdirect irreducibility and irreducibility disagree on a finite act"
        )
    return IrreducibilityReport(
        is_irreducible=irreducible,
        is_sdi=sdi,
        least_nondiagonal=total if sdi else None,
    )


@dataclass(frozen=True)
class StructureTag:
    kind: str  # one of _TAG_KINDS
    components: tuple[tuple[int, ...], ...]
    b_members: frozenset[int] | None = None  # the non-zero component of B + zero shapes
    is_simple: bool | None = None
    detail: str = ""


_TAG_KINDS = (
    "ZeroCoproductZero",
    "IndecomposableCoproductZero",
    "Indecomposable",
    "TwoElement",
    "RzsSimplePlusZero",
    "NotUniform",
    "ShapeViolation",
)


def classify_structure(
    a: ac.Act, uniformity: UniformityVerdict | None = None
) -> StructureTag:
    """Shape of a uniform act.

    Decomposable uniform acts must be a zero pair or an indecomposable
    zero-free act plus a zero; over a right zero semigroup the latter is
    refined when the non-zero part is a simple cyclic subact; over a
    group the non-zero shapes must be simple. Any uniform act violating
    these shapes is tagged ShapeViolation, which verification treats as
    a counterexample.
    """
    if uniformity is None:
        uniformity = is_uniform(a)
    profile = ac.act_profile(a)
    comps = profile.components
    if not uniformity.is_uniform:
        return StructureTag("NotUniform", comps)
    sgp = a.semigroup
    if len(comps) == 1:
        kind = "TwoElement" if a.size == 2 else "Indecomposable"
        if sgp.profile.is_group and not profile.is_simple:
            return StructureTag(
                "ShapeViolation", comps,
                detail="uniform indecomposable act over a group is not simple",
            )
        return StructureTag(kind, comps, is_simple=profile.is_simple)
    if len(comps) > 2:
        return StructureTag(
            "ShapeViolation", comps,
            detail=f"uniform act splits into {len(comps)} components",
        )
    first, second = comps
    if len(first) == 1 and len(second) == 1:
        return StructureTag("ZeroCoproductZero", comps)
    if len(first) == 1 or len(second) == 1:
        b = frozenset(second if len(first) == 1 else first)
        if b & a.zeros:
            return StructureTag(
                "ShapeViolation", comps, b_members=b,
                detail="the non-singleton component of a uniform act has a zero",
            )
        sub, _ = ac.restrict(a, b)
        sub_simple = ac.act_profile(sub).is_simple
        if sgp.profile.is_group and not sub_simple:
            return StructureTag(
                "ShapeViolation", comps, b_members=b,
                detail="over a group the non-zero component is not simple",
            )
        if (
            sgp.profile.is_right_zero_semigroup
            and sub_simple
            and any(a.cyclic_subact(x) == b for x in b)
        ):
            return StructureTag(
                "RzsSimplePlusZero", comps, b_members=b, is_simple=sub_simple
            )
        return StructureTag(
            "IndecomposableCoproductZero", comps, b_members=b, is_simple=sub_simple
        )
    return StructureTag(
        "ShapeViolation", comps,
        detail="uniform act decomposes into two non-singleton components",
    )


@dataclass(frozen=True)
class MonoidClassification:
    case: str  # Group | GroupPlusZero | GroupPlusTwoLeftZeros | NotUniform | NotRegularMonoid
    group_members: frozenset[int] | None = None
    zero_members: frozenset[int] | None = None
    regular_act_uniform: bool | None = None
    cyclic_acts_all_uniform: bool | None = None


def _structure_case(s: Semigroup) -> tuple[str, frozenset[int] | None, frozenset[int] | None]:
    profile = s.profile
    if profile.is_group:
        return "Group", frozenset(s.elements), frozenset()
    units = profile.unit_group
    non_units = profile.non_units
    assert units is not None and non_units is not None
    if len(non_units) == 1:
        (theta,) = non_units
        two_sided_zero = all(
            s.table[theta][x] == theta and s.table[x][theta] == theta
            for x in s.elements
        )
        if two_sided_zero:
            return "GroupPlusZero", units, non_units
    if len(non_units) == 2 and non_units <= profile.left_zeros:
        t1, t2 = sorted(non_units)
        e = s.identity
        twisted = all(
            s.table[g][t1] == t2 and s.table[g][t2] == t1
            for g in units
            if g != e
        )
        if twisted:
            return "GroupPlusTwoLeftZeros", units, non_units
    return "NotUniform", None, None


def classify_regular_uniform_monoid(s: Semigroup) -> MonoidClassification:
    """Match a regular monoid against the three uniform structures: a
    group, a group with a zero, or a group with two swapped left zeros.

    Also records whether the regular act is uniform and whether every
    cyclic act (every at-least-two-element quotient of the regular act)
    is, so callers can assert the expected equivalences.
    """
    if not s.is_monoid:
        raise NotApplicableError("classification requires a monoid")
    if not s.profile.is_regular:
        return MonoidClassification("NotRegularMonoid")
    case, group, zeros = _structure_case(s)
    if s.size < 2:
        return MonoidClassification(case, group, zeros)
    reg = ac.regular_act(s)
    uniform = is_uniform(reg).is_uniform
    cyclic_ok = True
    for rho in cg.all_congruences(reg):
        q, _ = ac.quotient_act(reg, rho)
        if q.size >= 2 and not is_uniform(q).is_uniform:
            cyclic_ok = False
            break
    return MonoidClassification(case, group, zeros, uniform, cyclic_ok)


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class EndoReport:
    endo: ac.ActHom
    is_mono: bool
    is_nilpotent: bool  # some power has a one-element image
    nilpotency: tuple[tuple[int, int | None], ...]  # (zero, least m with f^m constant there)
    stabilization_n: int | None  # least n with meet(ker f^n, rho_Im f^n) diagonal


def endomorphism_report(a: ac.Act) -> list[EndoReport]:
    if a.size < 2:
        raise NotApplicableError("endomorphism analysis needs at least 2 elements")
    reports = []
    for f in ac.endomorphisms(a):
        powers = []
        cur = f.map
        for _ in range(a.size):
            powers.append(cur)
            cur = tuple(cur[v] for v in f.map)
        stab = None
        for k, p in enumerate(powers, start=1):
            ker = cg.kernel_congruence(a, p)
            rho_im = cg.rees_congruence(a, frozenset(p))
            if cg.meet(ker, rho_im).is_diagonal:
                stab = k
                break
        nil = []
        for theta in sorted(a.zeros):
            m = next(
                (k for k, p in enumerate(powers, start=1) if set(p) == {theta}), None
            )
            nil.append((theta, m))
        reports.append(
            EndoReport(
                endo=f,
                is_mono=f.is_injective,
                is_nilpotent=any(len(set(p)) == 1 for p in powers),
                nilpotency=tuple(nil),
                stabilization_n=stab,
            )
        )
    return reports


def endo_violations(a: ac.Act, reports: list[EndoReport] | None = None) -> list[str]:
    """Endomorphism laws that hold on every finite act or every finite
    uniform act; returns human-readable violations (empty = all hold)."""
    if reports is None:
        reports = endomorphism_report(a)
    out = []
    for r in reports:
        if r.stabilization_n is None:
            out.append(f"no power of {list(r.endo.map)} separates kernel from image")
        elif r.stabilization_n > a.size:
            out.append(f"stabilization of {list(r.endo.map)} exceeds the act size")
        surjective = r.endo.is_surjective
        if surjective != r.endo.is_bijective:
            out.append(f"{list(r.endo.map)} is surjective but not bijective")
    uniform = a.size >= 2 and is_uniform(a).is_uniform
    if uniform:
        for r in reports:
            if r.is_mono == r.is_nilpotent:
                out.append(
                    f"{list(r.endo.map)}: monomorphism and nilpotency must exclude "
                    f"each other on a uniform act"
                )
            for theta, m in r.nilpotency:
                fiber = sum(1 for v in r.endo.map if v == theta)
                if (fiber >= 2) != (m is not None):
                    out.append(
                        f"{list(r.endo.map)}: fiber over zero {theta} has size {fiber} "
                        f"but constant power exponent is {m}"
                    )
        if not a.zeros:
            for r in reports:
                if not r.endo.is_bijective:
                    out.append(
                        f"{list(r.endo.map)}: endomorphism of a zero-free uniform act "
                        f"is not an isomorphism"
                    )
    return out


# ---------------------------------------------------------------------------
# constructions tied to uniformity


def construct_two_zero_uniform(s: Semigroup) -> ac.Act | None:
    """Build a nontrivial uniform act with two zeros over a monoid, or
    return None when none can exist (all pairs of principal right ideals
    intersect).

    Collapses two disjoint right ideals aS, bS of the regular act, then
    greedily joins monocyclic congruences that keep the classes of a and
    b distinct (they stay zeros automatically); the result of the
    maximal congruence is quotiented out and certified uniform, SDI, and
    two-zero. Certification failure raises, so a returned act is always
    a valid witness.
    """
    if not s.is_monoid:
        raise NotApplicableError("the construction needs a monoid")
    pair = None
    for x in s.elements:
        xs = s.right_ideal(x, with_generator=False)
        for y in range(x + 1, s.size):
            if not (xs & s.right_ideal(y, with_generator=False)):
                pair = (x, y)
                break
        if pair:
            break
    if pair is None:
        if not s.profile.is_left_reversible:
            raise InvariantViolationError(
                "no disjoint principal right ideals in a non-left-reversible semigroup"
            )
        return None
    x, y = pair
    reg = ac.regular_act(s)
    cur = cg.join(
        cg.rees_congruence(reg, s.right_ideal(x, with_generator=False)),
        cg.rees_congruence(reg, s.right_ideal(y, with_generator=False)),
    )
    if cur.related(x, y):
        raise InvariantViolationError("disjoint ideals collapsed together")
    for c in cg.all_monocyclics(reg):
        j = cg.join(cur, c)
        if not j.related(x, y):
            cur = j
    for c in cg.all_monocyclics(reg):
        j = cg.join(cur, c)
        if j.labels != cur.labels and not j.related(x, y):
            raise InvariantViolationError("greedy congruence is not maximal")
    q, proj = ac.quotient_act(reg, cur)
    problems = []
    if q.size < 3:
        problems.append(f"quotient has {q.size} elements")
    if q.zeros != {proj.map[x], proj.map[y]} or len(q.zeros) != 2:
        problems.append(f"zeros are {sorted(q.zeros)}")
    if not is_uniform(q).is_uniform:
        problems.append("quotient is not uniform")
    if not irreducibility_report(q).is_sdi:
        problems.append("quotient is not subdirectly irreducible")
    if problems:
        raise InvariantViolationError(
            "two-zero construction failed certification: " + "; ".join(problems)
        )
    return q


def embed_in_power_act(a: ac.Act) -> ac.ActHom | None:
    """A monomorphism from a into {0,1}^S, or None.

    None is immediate when |A| > 2^|S| (no injection exists at all).
    """
    n = a.semigroup.size
    if n <= 30 and a.size > (1 << n):
        return None
    pw = ac.power01_act(a.semigroup)
    found = ac.homomorphisms(a, pw, "first_embedding")
    return found[0] if found else None


def indecomposable_nonuniform_witness(s: Semigroup) -> tuple[ac.Act, str] | None:
    """For a non-group semigroup, an indecomposable act that is not
    uniform, built by gluing two copies of a regular-act extension.

    Tries each proper principal right ideal as the gluing subact first;
    for semigroups without identity falls back to gluing two copies of
    the identity-adjoined carrier along the original semigroup. Every
    candidate is verified before being returned; None means no candidate
    survived (for a group, immediately).
    """
    if s.profile.is_group:
        return None

    def verified(cand: ac.Act) -> bool:
        return (
            len(ac.components(cand)) == 1
            and cand.size >= 2
            and not is_uniform(cand).is_uniform
        )

    reg = ac.regular_act(s)
    full = frozenset(s.elements)
    for x in s.elements:
        ideal = s.right_ideal(x, with_generator=False)
        if ideal == full:
            continue
        u, inc = ac.restrict(reg, ideal)
        cand = ac.amalgam(reg, reg, u, inc, inc).act
        if verified(cand):
            return (
                cand,
                f"two copies of the regular act glued along the right ideal of {x}",
            )
    if not s.is_monoid:
        s1 = ac.s1_act(s)
        u, inc = ac.restrict(s1, range(s.size))
        cand = ac.amalgam(s1, s1, u, inc, inc).act
        if verified(cand):
            return (
                cand,
                "two copies of the identity-adjoined carrier glued along the semigroup",
            )
    return None
