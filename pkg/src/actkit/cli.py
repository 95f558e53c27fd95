"""Command-line front end.

Subcommands: analyze (classify a semigroup or act file), verify (run
claim checks over enumeration scopes), enumerate (stream semigroups or
acts), construct (named act constructions). Exit codes: 0 success or
all verified, 1 a check falsified, 2 input or usage error, 3 search
budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import acts as ac
from . import classifiers as cl
from . import fileio
from . import fixtures
from .enumeration import (
    FILTERS,
    Budget,
    EnumerationScope,
    enumerate_acts,
    enumerate_semigroups,
)
from .errors import (
    BudgetExceededError,
    MalformedInputError,
    NotApplicableError,
    SizeGuardError,
)
from .harness import ALL_CHECK_IDS, verify_many
from .semigroups import Semigroup


def _load_any(ref: str):
    """A path to a .sgp/.act/JSON file, or a bundled fixture name."""
    if not os.path.exists(ref):
        if ref in fixtures.SEMIGROUPS:
            return fixtures.load_semigroup(ref)
        if ref in fixtures.ACTS:
            return fixtures.load_act(ref)
        raise MalformedInputError(f"no such file or fixture: {ref!r}")
    return fileio.load_file(ref)


def _load_semigroup(ref: str) -> Semigroup:
    got = _load_any(ref)
    if isinstance(got, ac.Act):
        raise MalformedInputError(f"{ref!r} holds an act, expected a semigroup")
    return got


def _load_act(ref: str) -> ac.Act:
    got = _load_any(ref)
    if isinstance(got, Semigroup):
        raise MalformedInputError(f"{ref!r} holds a semigroup, expected an act")
    return got


def _blocks(con) -> list[int] | None:
    return None if con is None else fileio.congruence_blocks(con.labels)


def _act_verdict(a: ac.Act) -> dict:
    prof = ac.act_profile(a)
    uni = cl.is_uniform(a)
    irr = cl.irreducibility_report(a)
    tag = cl.classify_structure(a, uniformity=uni)
    structure: dict = {
        "kind": tag.kind,
        "components": [sorted(c) for c in tag.components],
    }
    if tag.b_members is not None:
        structure["b_members"] = sorted(tag.b_members)
    if tag.is_simple is not None:
        structure["b_is_simple"] = tag.is_simple
    if tag.detail:
        structure["detail"] = tag.detail

    witness: dict | None = None
    if not uni.is_uniform and uni.failing_subact is not None:
        witness = {
            "failing_subact": sorted(uni.failing_subact),
            "separating_congruence": _blocks(uni.witness),
        }
    elif irr.least_nondiagonal is not None:
        witness = {"monolith": _blocks(irr.least_nondiagonal)}

    return {
        "size": a.size,
        "zeros": sorted(a.zeros),
        "uniform": uni.is_uniform,
        "sdi": irr.is_sdi,
        "irreducible": irr.is_irreducible,
        "cocyclic": prof.is_cocyclic,
        "structure": structure,
        "witness": witness,
    }


def _semigroup_verdict(s: Semigroup) -> dict:
    prof = s.profile
    out = {
        "size": s.size,
        "monoid": s.is_monoid,
        "group": prof.is_group,
        "regular": prof.is_regular,
        "left_reversible": prof.is_left_reversible,
        "idempotents": list(prof.idempotents),
        "left_zeros": list(prof.left_zeros),
        "regular_act": _act_verdict(ac.regular_act(s)),
    }
    if s.is_monoid:
        mc = cl.classify_regular_uniform_monoid(s)
        out["monoid_case"] = {
            "case": mc.case,
            "group_members": (
                None if mc.group_members is None else sorted(mc.group_members)
            ),
            "zero_members": (
                None if mc.zero_members is None else sorted(mc.zero_members)
            ),
            "regular_act_uniform": mc.regular_act_uniform,
            "cyclic_acts_all_uniform": mc.cyclic_acts_all_uniform,
        }
        built = cl.construct_two_zero_uniform(s)
        out["two_zero_construction"] = (
            None
            if built is None
            else {
                "size": built.size,
                "zeros": sorted(built.zeros),
                "table": [list(r) for r in built.action],
            }
        )
    return out


def _cmd_analyze(args) -> int:
    got = _load_any(args.file)
    if isinstance(got, Semigroup):
        obj = {"kind": "semigroup", **_semigroup_verdict(got)}
    else:
        obj = {"kind": "act", **_act_verdict(got)}
    print(json.dumps(obj, indent=2, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    ids = list(ALL_CHECK_IDS) if "all" in args.ids else args.ids
    reports = verify_many(
        ids,
        max_s=args.max_s,
        max_a=args.max_a,
        up_to_iso=args.up_to_iso,
        jobs=args.jobs,
        budget=args.budget,
        strict_pr8=args.strict_pr8,
    )
    for r in reports:
        print(
            f"{r.theorem_id:<10s} {r.verdict:<36s} "
            f"instances={r.instances_checked} "
            f"counterexamples={len(r.counterexamples)} "
            f"({r.elapsed:.1f}s)"
        )
        for note in r.notes:
            print(f"    note: {note}")
        for cex in r.counterexamples[:1]:
            print(f"    witness: {json.dumps(cex, sort_keys=True)}")
    if args.json:
        payload = json.dumps([r.to_obj() for r in reports], indent=2, sort_keys=True)
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if any(r.verdict == "falsified" for r in reports):
        return 1
    if any(r.verdict.startswith("skipped: search budget") for r in reports):
        return 3
    return 0


def _stream(args, items, fmt_text, fmt_obj) -> int:
    count = 0
    digest = hashlib.sha256()
    for x in items:
        if args.jsonl:
            line = json.dumps(fmt_obj(x), sort_keys=True)
        else:
            line = fmt_text(x)
        digest.update(line.encode("utf-8") + b"\n")
        print(line)
        if not args.jsonl:
            print()
        count += 1
    if args.manifest:
        manifest = {
            "scope": args.scope_desc,
            "count": count,
            "sha256": digest.hexdigest(),
        }
        with open(args.manifest, "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"count: {count}", file=sys.stderr)
    return 0


def _cmd_enumerate_semigroups(args) -> int:
    scope = EnumerationScope(
        max_semigroup_order=args.max_order,
        up_to_iso=args.up_to_iso,
        monoids_only=args.monoids_only,
        filter=args.filter,
        allow_order_5=args.allow_order_5,
    )
    args.scope_desc = {
        "kind": "semigroups",
        "max_order": args.max_order,
        "up_to_iso": args.up_to_iso,
        "monoids_only": args.monoids_only,
        "filter": args.filter,
    }
    budget = Budget.from_env(args.budget)
    return _stream(
        args,
        enumerate_semigroups(scope, budget=budget),
        fileio.format_semigroup,
        lambda s: {"kind": "semigroup", "table": [list(r) for r in s.table]},
    )


def _cmd_enumerate_acts(args) -> int:
    s = _load_semigroup(args.over)
    args.scope_desc = {
        "kind": "acts",
        "over": args.over,
        "act_order": args.size,
        "up_to_iso": args.up_to_iso,
    }
    budget = Budget.from_env(args.budget)
    return _stream(
        args,
        enumerate_acts(s, args.size, args.up_to_iso, budget=budget),
        lambda a: fileio.format_act(a, over="inline"),
        lambda a: {"kind": "act", "table": [list(r) for r in a.action]},
    )


def _print_act(a: ac.Act, as_json: bool) -> None:
    if as_json:
        print(json.dumps(fileio.act_to_obj(a), indent=2, sort_keys=True))
    else:
        print(fileio.format_act(a, over="inline"))


def _cmd_construct_two_zero(args) -> int:
    s = _load_semigroup(args.over)
    built = cl.construct_two_zero_uniform(s)
    if built is None:
        print(json.dumps({"found": False}))
        return 0
    _print_act(built, args.json)
    return 0


def _cmd_construct_amalgam(args) -> int:
    a = _load_act(args.act)
    gens = [int(tok) for tok in args.generators.split(",") if tok.strip()]
    if not gens:
        raise MalformedInputError("need at least one generator index")
    members: set[int] = set()
    for g in gens:
        if not 0 <= g < a.size:
            raise MalformedInputError(f"generator {g} out of range for size {a.size}")
        members |= a.cyclic_subact(g)
    u, inc = ac.restrict(a, members)
    glued = ac.amalgam(a, a, u, inc, inc)
    _print_act(glued.act, args.json)
    return 0


def _cmd_construct_power(args) -> int:
    s = _load_semigroup(args.over)
    _print_act(ac.power01_act(s), args.json)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="actkit",
        description="finite semigroup acts: classification and claim checking",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="classify a semigroup or act file")
    pa.add_argument("file", help="path to a .sgp/.act/JSON file, or a fixture name")
    pa.set_defaults(fn=_cmd_analyze)

    pv = sub.add_parser("verify", help="run claim checks over enumeration scopes")
    pv.add_argument(
        "ids",
        nargs="+",
        metavar="ID",
        help=f"claim ids or 'all'; known: {', '.join(ALL_CHECK_IDS)}",
    )
    pv.add_argument("--max-s", type=int, default=None, help="semigroup order cap")
    pv.add_argument("--max-a", type=int, default=None, help="act order cap")
    pv.add_argument("--up-to-iso", action="store_true")
    pv.add_argument("--jobs", type=int, default=None, help="worker processes")
    pv.add_argument("--budget", type=int, default=None, help="search node cap")
    pv.add_argument("--json", metavar="PATH", help="write the full report list here")
    pv.add_argument(
        "--strict-pr8",
        action="store_true",
        help="count pr8 mismatches as counterexamples instead of notes",
    )
    pv.set_defaults(fn=_cmd_verify)

    pe = sub.add_parser("enumerate", help="stream semigroups or acts")
    esub = pe.add_subparsers(dest="what", required=True)

    pes = esub.add_parser("semigroups")
    pes.add_argument("max_order", type=int)
    pes.add_argument("--monoids-only", action="store_true")
    pes.add_argument("--up-to-iso", action="store_true")
    pes.add_argument("--filter", choices=sorted(FILTERS), default=None)
    pes.add_argument("--allow-order-5", action="store_true")
    pes.add_argument("--jsonl", action="store_true", help="one JSON object per line")
    pes.add_argument("--manifest", metavar="PATH", help="write scope/count/hash here")
    pes.add_argument("--budget", type=int, default=None)
    pes.set_defaults(fn=_cmd_enumerate_semigroups)

    pea = esub.add_parser("acts")
    pea.add_argument("over", help="semigroup file or fixture name")
    pea.add_argument("size", type=int, help="act order")
    pea.add_argument("--up-to-iso", action="store_true")
    pea.add_argument("--jsonl", action="store_true")
    pea.add_argument("--manifest", metavar="PATH")
    pea.add_argument("--budget", type=int, default=None)
    pea.set_defaults(fn=_cmd_enumerate_acts)

    pc = sub.add_parser("construct", help="named act constructions")
    csub = pc.add_subparsers(dest="what", required=True)

    pct = csub.add_parser("two-zero", help="uniform two-zero act over a monoid")
    pct.add_argument("over", help="monoid file or fixture name")
    pct.add_argument("--json", action="store_true")
    pct.set_defaults(fn=_cmd_construct_two_zero)

    pcam = csub.add_parser("amalgam", help="glue an act to itself along a subact")
    pcam.add_argument("act", help="act file or fixture name")
    pcam.add_argument(
        "--generators", required=True, help="comma-separated element indices"
    )
    pcam.add_argument("--json", action="store_true")
    pcam.set_defaults(fn=_cmd_construct_amalgam)

    pcp = csub.add_parser("power", help="the {0,1}-function act over a semigroup")
    pcp.add_argument("over", help="semigroup file or fixture name")
    pcp.add_argument("--json", action="store_true")
    pcp.set_defaults(fn=_cmd_construct_power)

    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (MalformedInputError, NotApplicableError, SizeGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
