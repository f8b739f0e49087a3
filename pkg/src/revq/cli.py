"""Command-line surface: synth, verify, report, identities.

Exit codes: 0 success / equivalent, 1 verification failure, 2 usage
error.  Output is deterministic for identical flags (and seed).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from .adders import (
    AdderConfig,
    LADDERS,
    STRUCTURES,
    build_adder,
    identity_fixtures,
    verify_adder,
)
from .circuit import Circuit, WireRole
from .formats import export_qasm3, serialize
from .ladders import ladder1_log, ladder2_carrylog, ladder2_linear, ladder2_polylog
from .sim import SimulationError, enumeration_batch, run_batch

KINDS = ("adder", "l2-linear", "l2-polylog", "l2-carrylog", "l1-log")


def _synth_circuit(args, parser) -> Circuit:
    if args.kind == "adder":
        if args.structure is None or args.ladder is None:
            parser.error("--kind adder requires --structure and --ladder")
        return build_adder(AdderConfig(args.n, args.structure, args.ladder))
    if args.kind == "l2-linear":
        return ladder2_linear(args.n)
    if args.kind == "l2-polylog":
        return ladder2_polylog(args.n)
    if args.kind == "l2-carrylog":
        if args.n < 2:
            parser.error("--kind l2-carrylog requires --n >= 2")
        return ladder2_carrylog(args.n)
    return ladder1_log(args.n)


def cmd_synth(args, parser) -> int:
    circ = _synth_circuit(args, parser)
    text = serialize(circ) if args.format == "revq" else export_qasm3(circ)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return 0


def cmd_verify(args, parser) -> int:
    cfg = AdderConfig(args.n, args.structure, args.ladder)
    try:
        verdict = verify_adder(cfg, mode=args.mode, samples=args.samples, seed=args.seed)
    except SimulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "config": cfg.describe(),
        "n": cfg.n,
        "mode": verdict.mode,
        "seed": verdict.seed,
        "cases_checked": verdict.cases_checked,
        "equivalent": verdict.equivalent,
        "counterexample": verdict.counterexample,
    }
    print(json.dumps(payload, sort_keys=True))
    return 0 if verdict.equivalent else 1


def cmd_report(args, parser) -> int:
    try:
        lo_str, hi_str = args.n_range.split("..", 1)
        lo, hi = int(lo_str), int(hi_str)
    except ValueError:
        parser.error(f"bad --n-range {args.n_range!r}; expected LO..HI")
    if lo < 2 or hi < lo:
        parser.error("--n-range must satisfy 2 <= LO <= HI")
    rows = report_mod.build_report(lo, hi)
    csv_path = report_mod.write_csv(rows, args.csv)
    print(f"wrote {csv_path} ({len(rows)} rows + {len(report_mod.LITERATURE_ROWS)} reference rows)")
    if not args.no_figures:
        for fig_path in report_mod.write_figures(rows, csv_path):
            print(f"wrote {fig_path}")
    failed = [r for r in rows if not r.passed]
    for row in failed:
        print(f"check failed: {row.structure}+{row.ladder} n={row.n}", file=sys.stderr)
    return 0 if not failed else 1


def cmd_identities(args, parser) -> int:
    ok = 0
    fixtures = identity_fixtures()
    for name, left, right in fixtures:
        free = [i for i, r in enumerate(left.roles) if r is not WireRole.ANCILLA]
        batch = enumeration_batch(left.n_wires, free)
        same = run_batch(left, batch).words == run_batch(right, batch).words
        note = "" if len(free) == left.n_wires else " (shared ancilla wire held at 0)"
        print(f"{name}: {'pass' if same else 'FAIL'} ({batch.n_lanes} cases{note})")
        ok += same
    print(f"{ok}/{len(fixtures)} identities hold")
    return 0 if ok == len(fixtures) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revq",
        description="Synthesize, verify, and profile reversible adder circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="emit one circuit as revq or OpenQASM 3 text")
    p.add_argument("--kind", choices=KINDS, default="adder")
    p.add_argument("--n", type=int, required=True, help="operand width / ladder size")
    p.add_argument("--structure", choices=STRUCTURES)
    p.add_argument("--ladder", choices=LADDERS)
    p.add_argument("--format", choices=("revq", "qasm3"), default="revq")
    p.add_argument("--out", default="-", help="output path ('-' for stdout)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="equivalence-check an adder against arithmetic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--structure", choices=STRUCTURES, required=True)
    p.add_argument("--ladder", choices=LADDERS, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="CSV resource report (plus figures) over a width range")
    p.add_argument("--n-range", required=True, metavar="LO..HI")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--no-figures", action="store_true", help="skip the PNG charts")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("identities", help="check the classic carry-block circuit identities")
    p.set_defaults(func=cmd_identities)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "n") and args.n is not None and args.n < 1:
        parser.error("--n must be at least 1")
    if hasattr(args, "samples") and args.samples is not None and args.samples < 1:
        parser.error("--samples must be at least 1")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
