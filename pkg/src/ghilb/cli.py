"""Command line: ``ghilb analyze | sweep | verify``.

Exit codes: 0 success, 1 usage or input error, 2 failed invariant.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import ConsistencyError
from .ktheory import duality_check
from .lattice import GroupSpecError, build_lattice_context
from .oracle import OracleConfig, brute_duality_oracle, sampling_fan_oracle
from .render import emit_svg, emit_tikz
from .report import analyze, to_json
from .survey import aggregate, sweep

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2

log = logging.getLogger("ghilb")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invariant failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ghilb", description="G-Hilb fans and degree-0 shares for abelian G in SL(3).")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="analyze one group")
    a.add_argument("--group", required=True, help='e.g. "1/5(1,1,3)" or "1/2(1,0,1);1/2(0,1,1)"')
    a.add_argument("--json", type=Path, help="write the report here (default: stdout)")
    a.add_argument("--svg", type=Path)
    a.add_argument("--tikz", type=Path)
    a.add_argument("--mode", default="h0-classes", choices=["none", "wall-degrees", "h0-classes"],
                   help="drawing annotations")
    a.add_argument("--degrees", action="store_true", help="include the wall degree table")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="sweep 1/r(1,a,b) with a + b = r - 1")
    s.add_argument("--r-min", type=int, required=True)
    s.add_argument("--r-max", type=int, required=True)
    s.add_argument("--dedupe-symmetry", action="store_true")
    s.add_argument("--isolated-only", action="store_true")
    s.add_argument("--csv", type=Path, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--timing", action="store_true", help="fill runtime_ms (makes the CSV run-dependent)")
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the invariant suite and the oracles")
    v.add_argument("--group", required=True)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--r-cap", type=int, default=15, help="largest r for the brute-force oracles")
    v.set_defaults(func=cmd_verify)
    return p


def _context(text):
    ctx = build_lattice_context(text)
    if ctx.r < 2:
        raise ValueError("no nontrivial characters: B0 needs r >= 2")
    return ctx


def cmd_analyze(args) -> int:
    result = analyze(_context(args.group), degrees=args.degrees)
    text = to_json(result)
    if args.json:
        args.json.write_text(text)
        rep = result.b0
        print(f"{result.ctx.spec}: r = {rep.r}, B0 = {rep.b0}, h0 = {{{', '.join(c.label for c in rep.h0)}}}")
        for note in result.notes:
            print(f"note: {note}")
    else:
        sys.stdout.write(text)
    if args.svg:
        args.svg.write_bytes(emit_svg(result.fan, args.mode))
    if args.tikz:
        args.tikz.write_text(emit_tikz(result.fan, args.mode))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.jobs < 1:
        raise ValueError("--jobs must be positive")
    records = sweep(
        args.r_min,
        args.r_max,
        dedupe_symmetry=args.dedupe_symmetry,
        isolated_only=args.isolated_only,
        jobs=args.jobs,
        timing=args.timing,
        csv_path=args.csv,
    )
    for rec in records:
        if not rec.ok:
            print(f"failed: 1/{rec.r}(1,{rec.a},{rec.b}): {rec.error}")
    if not any(rec.ok for rec in records):
        print("no successful records")
        return EXIT_OK
    for line in aggregate(records).summary_lines():
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    ctx = _context(args.group)
    failed = False

    def emit(name, ok, detail=""):
        nonlocal failed
        failed |= not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))

    try:
        result = analyze(ctx, degrees=True)
    except ConsistencyError as exc:
        emit(exc.invariant, False, str(exc))
        return EXIT_INVARIANT
    for c in result.checks:
        emit(c.invariant, c.passed, c.detail)
    config = OracleConfig(seed=args.seed, sample_count=args.samples, r_cap=args.r_cap)
    if ctx.r <= config.r_cap:
        rep = sampling_fan_oracle(ctx, result.fan, config)
        detail = f"{rep.samples} samples, {rep.resampled} resampled, {rep.ggraphs_seen} G-graphs hit"
        if rep.mismatches:
            point, why = rep.mismatches[0]
            detail += f"; {len(rep.mismatches)} mismatches, first at {point}: {why}"
        emit("sampling-oracle", rep.ok, detail)
        cmp = brute_duality_oracle(ctx, result.fan, duality_check(result.fan), config)
        detail = f"{ctx.r}x{ctx.r} matrix recomputed by rational functions"
        if cmp.disagreements:
            mu, chi, ours, theirs = cmp.disagreements[0]
            detail += f"; disagreement at ({mu.label}, {chi.label}): oracle {ours}, pipeline {theirs}"
        emit("duality-oracle", cmp.ok, detail)
    else:
        print(f"SKIP oracles: r = {ctx.r} exceeds --r-cap {config.r_cap}")
    for note in result.notes:
        print(f"note: {note}")
    return EXIT_INVARIANT if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"invariant violation {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (GroupSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
