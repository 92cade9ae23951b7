"""Line-delimited trace files.

One JSON object per line: a header, then one row per stage in order.  All
unbounded integers (elements, d, b, c) travel as decimal strings so no
consumer needs big-int JSON; the stage index k stays a plain number.
Serialization is canonical (sorted keys, fixed separators, trailing
newline), so identical traces produce byte-identical files.
"""

from __future__ import annotations

import json
import sys

from .construction import BasisTrace, ConstructionStep
from .intset import IntSet

FORMAT_NAME = "urbasis-trace"
FORMAT_VERSION = "1"

# The whole format is decimal strings of unbounded magnitude; the default
# int<->str guard (4300 digits) is far too small for slow-growth traces.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)


class TraceFormatError(ValueError):
    """The text is not a well-formed trace file."""


def _dump_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def serialize(trace: BasisTrace) -> str:
    header = {"format": FORMAT_NAME, "version": FORMAT_VERSION, "mode": trace.mode}
    lines = [_dump_line(header)]
    for s in trace.steps:
        row = {
            "k": s.k,
            "elements": [str(a) for a in s.basis.elements],
            "d": str(s.radius),
            "b": str(s.gap),
            "branch": "positive" if s.positive_branch else "negative",
        }
        if s.reach is not None:
            row["c"] = str(s.reach)
        lines.append(_dump_line(row))
    return "\n".join(lines) + "\n"


def _parse_int(value, what: str, lineno: int) -> int:
    if not isinstance(value, str):
        raise TraceFormatError(f"line {lineno}: {what} must be a decimal string")
    try:
        return int(value, 10)
    except ValueError:
        raise TraceFormatError(f"line {lineno}: {what} is not a decimal integer: {value!r}") from None


def parse(text: str) -> BasisTrace:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise TraceFormatError("empty trace file")
    rows = []
    for lineno, ln in enumerate(lines, start=1):
        try:
            rows.append(json.loads(ln))
        except json.JSONDecodeError as e:
            raise TraceFormatError(f"line {lineno}: not valid JSON ({e.msg})") from None
    header, *step_rows = rows
    if not isinstance(header, dict) or header.get("format") != FORMAT_NAME:
        raise TraceFormatError("missing or unrecognized header line")
    if header.get("version") != FORMAT_VERSION:
        raise TraceFormatError(f"unsupported format version {header.get('version')!r}")
    mode = header.get("mode", "")
    if not isinstance(mode, str):
        raise TraceFormatError("header mode must be a string")
    if not step_rows:
        raise TraceFormatError("trace file has no stages")

    steps: list[ConstructionStep] = []
    for lineno, row in enumerate(step_rows, start=2):
        if not isinstance(row, dict):
            raise TraceFormatError(f"line {lineno}: stage row must be an object")
        k = row.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise TraceFormatError(f"line {lineno}: k must be an integer")
        if k != lineno - 1:
            raise TraceFormatError(f"line {lineno}: stage indices must run 1..K in order, got k={k}")
        raw = row.get("elements")
        if not isinstance(raw, list) or not raw:
            raise TraceFormatError(f"line {lineno}: elements must be a nonempty list")
        values = [_parse_int(v, "element", lineno) for v in raw]
        try:
            basis = IntSet(tuple(values))
        except ValueError as e:
            raise TraceFormatError(f"line {lineno}: {e}") from None
        branch = row.get("branch")
        if branch not in ("positive", "negative"):
            raise TraceFormatError(f"line {lineno}: branch must be 'positive' or 'negative'")
        reach = None
        if "c" in row:
            reach = _parse_int(row["c"], "c", lineno)
        steps.append(ConstructionStep(
            k=k,
            basis=basis,
            radius=_parse_int(row.get("d"), "d", lineno),
            gap=_parse_int(row.get("b"), "b", lineno),
            positive_branch=(branch == "positive"),
            reach=reach,
        ))
    return BasisTrace(steps=tuple(steps), mode=mode)


def write_file(trace: BasisTrace, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(trace))


def read_file(path: str) -> BasisTrace:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())
