"""Bundled example semigroups and acts, loadable by short name."""

from __future__ import annotations

from importlib.resources import files

from ..acts import Act
from ..errors import MalformedInputError
from ..fileio import parse_act_text, parse_semigroup_text
from ..semigroups import Semigroup

SEMIGROUPS = ("r2", "l2", "z2", "m3", "l21", "k4", "u3", "w4")
ACTS = ("r2_plus_theta", "two_zero", "rees_factor_l21")


def _read(filename: str) -> str:
    res = files(__package__).joinpath(filename)
    if not res.is_file():
        raise MalformedInputError(f"no bundled fixture file {filename!r}")
    return res.read_text(encoding="utf-8")


def _resolve(ref: str) -> Semigroup:
    got = parse_semigroup_text(_read(ref), source=f"fixtures/{ref}")
    return got


def load_semigroup(name: str) -> Semigroup:
    if name not in SEMIGROUPS:
        raise MalformedInputError(
            f"unknown semigroup fixture {name!r}; have {SEMIGROUPS}"
        )
    return parse_semigroup_text(_read(f"{name}.sgp"), source=f"fixtures/{name}.sgp")


def load_act(name: str) -> Act:
    if name not in ACTS:
        raise MalformedInputError(f"unknown act fixture {name!r}; have {ACTS}")
    return parse_act_text(
        _read(f"{name}.act"), resolver=_resolve, source=f"fixtures/{name}.act"
    )


def available() -> dict[str, tuple[str, ...]]:
    return {"semigroups": SEMIGROUPS, "acts": ACTS}
