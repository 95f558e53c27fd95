"""Reading and writing semigroups and acts.

Two formats, auto-detected: a line-oriented text format and a JSON
mirror of it. Text parse errors carry the 1-based line number.

Text, semigroup::

    # optional comments anywhere
    semigroup 2
    0 1
    0 1
    identity 0      # optional

Text, act (semigroup by reference or inline)::

    act 3 over r2.sgp          |  act 3 over inline
    ...m rows of n entries...  |  semigroup 2
                               |  0 1
                               |  0 1
                               |  ...m rows of n entries...

JSON files hold ``{"semigroup": {"table": ..., "identity": ...}}`` or
``{"act": {"action": ..., "over": path-or-semigroup-object}}``.
"""

from __future__ import annotations

import json
import os
from typing import Callable, Sequence

from .acts import Act
from .congruences import normalize_labels
from .errors import MalformedInputError
from .semigroups import Semigroup

Resolver = Callable[[str], Semigroup]


def _fail(line_no: int, msg: str, source: str) -> MalformedInputError:
    return MalformedInputError(f"{source}:{line_no}: {msg}")


def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _parse_int_row(
    line_no: int, line: str, width: int, source: str, bound: int | None = None
) -> list[int]:
    parts = line.split()
    if len(parts) != width:
        raise _fail(line_no, f"expected {width} entries, got {len(parts)}", source)
    try:
        row = [int(p) for p in parts]
    except ValueError:
        raise _fail(line_no, f"non-integer entry in {line!r}", source) from None
    limit = width if bound is None else bound
    for col, v in enumerate(row):
        if not 0 <= v < limit:
            raise _fail(
                line_no, f"entry {v} in column {col} out of range [0,{limit})", source
            )
    return row


def _parse_semigroup_block(
    lines: list[tuple[int, str]], pos: int, source: str
) -> tuple[Semigroup, int]:
    line_no, head = lines[pos]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "semigroup":
        raise _fail(line_no, f"expected 'semigroup <n>', got {head!r}", source)
    try:
        n = int(parts[1])
    except ValueError:
        raise _fail(line_no, f"bad size {parts[1]!r}", source) from None
    if n < 1:
        raise _fail(line_no, f"size must be positive, got {n}", source)
    pos += 1
    table = []
    for _ in range(n):
        if pos >= len(lines):
            raise _fail(line_no, f"expected {n} table rows, file ended early", source)
        row_no, row_line = lines[pos]
        table.append(_parse_int_row(row_no, row_line, n, source))
        pos += 1
    identity = None
    if pos < len(lines):
        id_no, id_line = lines[pos]
        parts = id_line.split()
        if parts[0] == "identity":
            if len(parts) != 2:
                raise _fail(id_no, f"expected 'identity <k>', got {id_line!r}", source)
            try:
                identity = int(parts[1])
            except ValueError:
                raise _fail(id_no, f"bad identity {parts[1]!r}", source) from None
            pos += 1
    try:
        sgp = Semigroup(table, identity=identity)
    except MalformedInputError as e:
        raise _fail(line_no, str(e), source) from None
    return sgp, pos


def parse_semigroup_text(text: str, *, source: str = "<string>") -> Semigroup:
    lines = _meaningful_lines(text)
    if not lines:
        raise _fail(1, "empty input", source)
    sgp, pos = _parse_semigroup_block(lines, 0, source)
    if pos != len(lines):
        raise _fail(lines[pos][0], f"unexpected trailing content {lines[pos][1]!r}", source)
    return sgp


def parse_act_text(
    text: str, *, resolver: Resolver | None = None, source: str = "<string>"
) -> Act:
    lines = _meaningful_lines(text)
    if not lines:
        raise _fail(1, "empty input", source)
    line_no, head = lines[0]
    parts = head.split(maxsplit=3)
    if len(parts) < 4 or parts[0] != "act" or parts[2] != "over":
        raise _fail(line_no, f"expected 'act <m> over <ref>', got {head!r}", source)
    try:
        m = int(parts[1])
    except ValueError:
        raise _fail(line_no, f"bad size {parts[1]!r}", source) from None
    if m < 1:
        raise _fail(line_no, f"size must be positive, got {m}", source)
    ref = parts[3]
    pos = 1
    if ref == "inline":
        if pos >= len(lines):
            raise _fail(line_no, "inline semigroup block missing", source)
        sgp, pos = _parse_semigroup_block(lines, pos, source)
    else:
        if resolver is None:
            raise _fail(line_no, f"no resolver for semigroup reference {ref!r}", source)
        sgp = resolver(ref)
    action = []
    for _ in range(m):
        if pos >= len(lines):
            raise _fail(line_no, f"expected {m} action rows, file ended early", source)
        row_no, row_line = lines[pos]
        action.append(_parse_int_row(row_no, row_line, sgp.size, source, bound=m))
        pos += 1
    if pos != len(lines):
        raise _fail(lines[pos][0], f"unexpected trailing content {lines[pos][1]!r}", source)
    try:
        return Act(sgp, action)
    except MalformedInputError as e:
        raise _fail(line_no, str(e), source) from None


# ---------------------------------------------------------------------------
# JSON mirror


def semigroup_to_obj(s: Semigroup) -> dict:
    obj: dict = {"table": [list(r) for r in s.table]}
    if s.identity is not None:
        obj["identity"] = s.identity
    return obj


def act_to_obj(a: Act, *, over: str | None = None) -> dict:
    obj: dict = {"action": [list(r) for r in a.action]}
    if over is not None:
        obj["over"] = over
    else:
        obj["over"] = semigroup_to_obj(a.semigroup)
    return obj


def obj_to_semigroup(obj, *, source: str = "<json>") -> Semigroup:
    if not isinstance(obj, dict) or "table" not in obj:
        raise MalformedInputError(f"{source}: semigroup object needs a 'table' key")
    try:
        return Semigroup(obj["table"], identity=obj.get("identity"))
    except (MalformedInputError, TypeError) as e:
        raise MalformedInputError(f"{source}: {e}") from None


def obj_to_act(obj, *, resolver: Resolver | None = None, source: str = "<json>") -> Act:
    if not isinstance(obj, dict) or "action" not in obj:
        raise MalformedInputError(f"{source}: act object needs an 'action' key")
    over = obj.get("over", obj.get("semigroup"))
    if isinstance(over, str):
        if resolver is None:
            raise MalformedInputError(
                f"{source}: no resolver for semigroup reference {over!r}"
            )
        sgp = resolver(over)
    elif over is not None:
        sgp = obj_to_semigroup(over, source=source)
    else:
        raise MalformedInputError(f"{source}: act object needs 'over' or 'semigroup'")
    try:
        return Act(sgp, obj["action"])
    except (MalformedInputError, TypeError) as e:
        raise MalformedInputError(f"{source}: {e}") from None


def parse_json(text: str, *, resolver: Resolver | None = None, source: str = "<json>"):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    if isinstance(obj, dict) and "semigroup" in obj:
        return obj_to_semigroup(obj["semigroup"], source=source)
    if isinstance(obj, dict) and "act" in obj:
        return obj_to_act(obj["act"], resolver=resolver, source=source)
    raise MalformedInputError(f"{source}: top-level 'semigroup' or 'act' key required")


# ---------------------------------------------------------------------------
# formatting


def format_semigroup(s: Semigroup) -> str:
    lines = [f"semigroup {s.size}"]
    lines += [" ".join(map(str, row)) for row in s.table]
    if s.identity is not None:
        lines.append(f"identity {s.identity}")
    return "\n".join(lines) + "\n"


def format_act(a: Act, *, over: str = "inline") -> str:
    lines = [f"act {a.size} over {over}"]
    if over == "inline":
        lines.append(format_semigroup(a.semigroup).rstrip("\n"))
    lines += [" ".join(map(str, row)) for row in a.action]
    return "\n".join(lines) + "\n"


def congruence_blocks(labels: Sequence[int]) -> list[int]:
    """Serialized block form: each element mapped to the least member of
    its block, whatever labelling came in."""
    return list(normalize_labels(labels))


# ---------------------------------------------------------------------------
# file-level entry points


def _looks_like_json(text: str) -> bool:
    for ch in text:
        if not ch.isspace():
            return ch == "{"
    return False


def _path_resolver(base_dir: str) -> Resolver:
    def resolve(ref: str) -> Semigroup:
        target = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        loaded = load_file(target)
        if not isinstance(loaded, Semigroup):
            raise MalformedInputError(f"{target}: expected a semigroup file")
        return loaded

    return resolve


def load_file(path: str) -> Semigroup | Act:
    """Load a semigroup or act from a text or JSON file (auto-detected)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise MalformedInputError(f"{path}: {e.strerror or e}") from None
    resolver = _path_resolver(os.path.dirname(os.path.abspath(path)))
    if _looks_like_json(text):
        return parse_json(text, resolver=resolver, source=path)
    lines = _meaningful_lines(text)
    if not lines:
        raise _fail(1, "empty input", path)
    word = lines[0][1].split()[0]
    if word == "semigroup":
        return parse_semigroup_text(text, source=path)
    if word == "act":
        return parse_act_text(text, resolver=resolver, source=path)
    raise _fail(lines[0][0], f"expected 'semigroup' or 'act', got {word!r}", path)


def load_semigroup(path: str) -> Semigroup:
    got = load_file(path)
    if not isinstance(got, Semigroup):
        raise MalformedInputError(f"{path}: expected a semigroup file, found an act")
    return got


def load_act(path: str) -> Act:
    got = load_file(path)
    if not isinstance(got, Act):
        raise MalformedInputError(f"{path}: expected an act file, found a semigroup")
    return got
