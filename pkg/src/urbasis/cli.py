"""Command-line front end: build, verify, analyze, export.

Exit codes: 0 success (all checks pass / all bounds hold), 1 a
verification or bound failed, 2 bad usage, bad configuration, or a
malformed trace file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import BoundCheck, growth_report
from .construction import (
    BasisTrace,
    ExplicitReaches,
    Greedy,
    GrowthConfigError,
    LogGrowth,
    LogLogGrowth,
    run_with_growth,
    table_reach,
)
from .oracle import (
    Verdict,
    brute_rep_report,
    default_window,
    guaranteed_window,
    pairs_for,
    verify_decomposition,
    verify_gap_growth,
    verify_unique_window,
)
from .tracefile import TraceFormatError, read_file, serialize, write_file


class UsageError(Exception):
    """Bad arguments or configuration; maps to exit code 2."""


def _parse_number(text: str, what: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{what} is not a number: {text!r}") from None


def parse_threshold_spec(spec: str):
    """Parse a growth-budget spec into a threshold policy.

    Accepted forms:
      log,SCALE,OFFSET            f(x) = SCALE*ln(x) + OFFSET
      loglog,SCALE,OFFSET[,SHIFT] f(x) = SCALE*ln(ln(x+SHIFT)) + OFFSET
      table,M:X;M:X;...           explicit least-x table per even target M
    """
    family, _, rest = spec.partition(",")
    try:
        if family == "log":
            scale, offset = rest.split(",")
            return LogGrowth(_parse_number(scale, "scale"), _parse_number(offset, "offset")).policy()
        if family == "loglog":
            parts = rest.split(",")
            if len(parts) == 2:
                scale, offset = parts
                return LogLogGrowth(_parse_number(scale, "scale"), _parse_number(offset, "offset")).policy()
            if len(parts) == 3:
                scale, offset, shift = parts
                return LogLogGrowth(
                    _parse_number(scale, "scale"), _parse_number(offset, "offset"), int(shift)
                ).policy()
            raise ValueError("expected 2 or 3 parameters")
        if family == "table":
            table = {}
            for entry in rest.split(";"):
                m, _, x = entry.partition(":")
                table[int(m)] = int(x)
            if not table:
                raise ValueError("empty table")
            return table_reach(table)
    except UsageError:
        raise
    except ValueError as e:
        raise UsageError(f"bad threshold spec {spec!r}: {e}") from None
    raise UsageError(f"unknown threshold family {family!r} (expected log, loglog, or table)")


def _read_c_list(path: str) -> tuple[int, ...]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read reach list: {e}") from None
    cleaned = text.replace("[", " ").replace("]", " ").replace(",", " ")
    try:
        values = tuple(int(tok) for tok in cleaned.split())
    except ValueError:
        raise UsageError(f"reach list {path!r} must contain only integers") from None
    if not values:
        raise UsageError(f"reach list {path!r} is empty")
    return values


def cmd_build(args: argparse.Namespace) -> int:
    if args.greedy is not None:
        k_max, policy = args.greedy, Greedy()
    elif args.threshold is not None:
        spec, k_text = args.threshold
        try:
            k_max = int(k_text)
        except ValueError:
            raise UsageError(f"K must be an integer, got {k_text!r}") from None
        policy = parse_threshold_spec(spec)
    else:
        values = _read_c_list(args.c_list)
        k_max, policy = len(values) + 1, ExplicitReaches(values)
    if k_max < 1:
        raise UsageError(f"K must be >= 1, got {k_max}")
    try:
        trace = run_with_growth(policy, k_max)
    except (GrowthConfigError, ValueError) as e:
        raise UsageError(str(e)) from None
    write_file(trace, args.output)
    final = trace.final
    print(f"K={final.k} radius={final.radius} gap={final.gap}")
    return 0


def _verdict_row(v: Verdict, **extra) -> dict:
    row = {"name": v.check, "ok": v.ok, "witness": v.witness}
    row.update(extra)
    return row


def _run_checks(trace: BasisTrace, fast: bool) -> list[dict]:
    rows: list[dict] = []

    lo, hi = guaranteed_window(trace) if fast else default_window(trace)
    report = brute_rep_report(trace.final.basis, lo, hi)
    violations = report.violations
    witness = None
    if violations:
        n = violations[0]
        witness = {"n": n, "count": report.count(n), "pairs": pairs_for(trace.final.basis, n)}
    rows.append({
        "name": "rep-scan", "ok": not violations, "witness": witness,
        "window": [lo, hi], "violations": len(violations),
    })

    rows.append(_verdict_row(verify_unique_window(trace)))

    pair_total = len(trace.steps) - 1
    decomp_ok, decomp_witness = True, None
    for prev, nxt in zip(trace.steps, trace.steps[1:]):
        try:
            verdict = verify_decomposition(prev, nxt)
        except ValueError as e:
            decomp_ok, decomp_witness = False, {"refused": str(e), "stage": nxt.k}
            break
        if not verdict:
            decomp_ok, decomp_witness = False, verdict.witness
            break
    rows.append({"name": "decomposition", "ok": decomp_ok, "witness": decomp_witness, "pairs": pair_total})

    if len(trace.steps) >= 2:
        rows.append(_verdict_row(verify_gap_growth(trace)))
    return rows


def cmd_verify(args: argparse.Namespace) -> int:
    trace = read_file(args.trace)
    rows = _run_checks(trace, args.fast)
    ok = all(row["ok"] for row in rows)
    if args.format == "json":
        print(json.dumps({"ok": ok, "checks": rows}, sort_keys=True))
    else:
        for row in rows:
            status = "PASS" if row["ok"] else "FAIL"
            detail = "" if row["ok"] else f"  witness={row['witness']}"
            print(f"{status} {row['name']}{detail}")
        print(f"verification: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _parse_samples(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"sample list must contain only integers: {text!r}") from None


def _parse_window(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"window must be LO,HI: {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"window bounds must be integers: {text!r}") from None
    if lo > hi:
        raise UsageError(f"window is empty: {lo} > {hi}")
    return lo, hi


def _default_samples(trace: BasisTrace) -> list[int]:
    xs = {s.radius for s in trace.steps}
    xs.update(s.reach for s in trace.steps if s.reach is not None)
    return sorted(xs)


def _bound_row(check: BoundCheck) -> dict:
    return {
        "name": check.name, "x": check.x, "observed": check.observed,
        "lower": check.lower, "upper": check.upper, "holds": check.holds,
    }


_DENSE_WINDOW_LIMIT = 20_001


def cmd_analyze(args: argparse.Namespace) -> int:
    trace = read_file(args.trace)
    xs = _parse_samples(args.x) if args.x is not None else _default_samples(trace)
    try:
        checks = growth_report(trace, xs)
    except ValueError as e:
        raise UsageError(str(e)) from None
    ok = all(c.holds for c in checks)

    rep_block = None
    if args.rep_window is not None:
        lo, hi = _parse_window(args.rep_window)
        report = brute_rep_report(trace.final.basis, lo, hi)
        if hi - lo + 1 <= _DENSE_WINDOW_LIMIT:
            counts = {str(n): c for n, c in sorted(report.counts.items())}
        else:
            counts = {str(n): c for n, c in sorted(report.nonzero.items())}
        rep_block = {
            "window": [lo, hi], "counts": counts,
            "violations": list(report.violations), "gap_count": report.gap_count,
        }
        if report.violations:
            ok = False

    if args.format == "json":
        payload = {"ok": ok, "bounds": [_bound_row(c) for c in checks]}
        if rep_block is not None:
            payload["rep_window"] = rep_block
        print(json.dumps(payload, sort_keys=True))
    else:
        for c in checks:
            status = "HOLD" if c.holds else "VIOL"
            lo_txt = "" if c.lower is None else f" lower={c.lower:.3f}"
            hi_txt = "" if c.upper is None else f" upper={c.upper:.3f}"
            print(f"{status} {c.name} x={c.x} observed={c.observed}{lo_txt}{hi_txt}")
        if rep_block is not None:
            for n, c in rep_block["counts"].items():
                print(f"rep n={n} count={c}")
            print(f"rep-window violations={len(rep_block['violations'])} gaps={rep_block['gap_count']}")
        print(f"analysis: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_export(args: argparse.Namespace) -> int:
    trace = read_file(args.trace)
    if args.what == "elements":
        values = [str(a) for a in trace.final.basis.elements]
        text = json.dumps(values) if args.format == "json" else "\n".join(values)
    else:
        if args.format == "json":
            rows = []
            for s in trace.steps:
                row = {
                    "k": s.k,
                    "elements": [str(a) for a in s.basis.elements],
                    "d": str(s.radius), "b": str(s.gap),
                    "branch": "positive" if s.positive_branch else "negative",
                }
                if s.reach is not None:
                    row["c"] = str(s.reach)
                rows.append(row)
            text = json.dumps({"mode": trace.mode, "steps": rows}, sort_keys=True)
        else:
            text = serialize(trace).rstrip("\n")
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urbasis",
        description="Build and check integer sets in which every integer "
                    "has exactly one representation as a pairwise sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the construction and write a trace file")
    source = p_build.add_mutually_exclusive_group(required=True)
    source.add_argument("--greedy", type=int, metavar="K", help="densest variant, K stages")
    source.add_argument("--threshold", nargs=2, metavar=("SPEC", "K"),
                        help="growth budget, e.g. 'loglog,2,4' or 'table,4:1;6:13'")
    source.add_argument("--c-list", metavar="PATH", help="file with one reach per extension")
    p_build.add_argument("--output", "-o", required=True, metavar="PATH")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="re-check a trace file by brute force")
    p_verify.add_argument("trace", metavar="TRACE")
    p_verify.add_argument("--fast", action="store_true",
                          help="scan only the window the construction guarantees")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="evaluate density bounds on a trace file")
    p_analyze.add_argument("trace", metavar="TRACE")
    p_analyze.add_argument("--x", metavar="LIST", help="comma-separated sample points")
    p_analyze.add_argument("--rep-window", metavar="LO,HI", help="also print pair-sum counts")
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")
    p_analyze.set_defaults(func=cmd_analyze)

    p_export = sub.add_parser("export", help="print a trace in another shape")
    p_export.add_argument("trace", metavar="TRACE")
    p_export.add_argument("--what", choices=("steps", "elements"), default="steps")
    p_export.add_argument("--format", choices=("json", "text"), default="json")
    p_export.add_argument("--output", "-o", metavar="PATH")
    p_export.set_defaults(func=cmd_export)

    return parser


def _absorb_values(argv: list[str]) -> list[str]:
    # argparse misreads values like "-3,3" as option strings; fold the value
    # of these options into --opt=value form so windows can start with '-'
    taking_value = ("--rep-window", "--x")
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in taking_value:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_absorb_values(list(argv)))
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except GrowthConfigError as e:
        print(f"growth configuration error: {e}", file=sys.stderr)
        return 2
    except TraceFormatError as e:
        print(f"trace format error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
