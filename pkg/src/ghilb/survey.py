"""Sweeps of the cyclic family 1/r(1,a,b), a + b = r - 1."""

from __future__ import annotations

import csv
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path

from .fan import build_fan, fan_statistics
from .ktheory import b0_report
from .lattice import Generator, GroupSpec, LatticeContext

__all__ = [
    "SurveyRecord",
    "Aggregate",
    "CSV_COLUMNS",
    "enumerate_embeddings",
    "analyze_embedding",
    "sweep",
    "aggregate",
    "write_csv",
    "read_csv",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = [
    "r", "a", "b", "junior_points", "triangles", "interior_edges", "boundary_edges",
    "h0_size", "b0_num", "b0_den", "isolated_flag", "runtime_ms",
]
LOWER_BOUND = Fraction(1, 4)


@dataclass
class SurveyRecord:
    r: int
    a: int
    b: int
    junior_count: int = 0
    triangle_count: int = 0
    interior_edge_count: int = 0
    boundary_edge_count: int = 0
    h0_size: int = 0
    b0: Fraction | None = None
    isolated: bool = False
    runtime_ms: int | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def row(self) -> list:
        if not self.ok:
            return [self.r, self.a, self.b] + [""] * 8 + [f"error: {self.error}"]
        return [
            self.r, self.a, self.b, self.junior_count, self.triangle_count,
            self.interior_edge_count, self.boundary_edge_count, self.h0_size,
            self.b0.numerator, self.b0.denominator, int(self.isolated),
            "" if self.runtime_ms is None else self.runtime_ms,
        ]


def enumerate_embeddings(r: int, dedupe: bool = False) -> list[tuple[int, int]]:
    pairs = [(a, r - 1 - a) for a in range(1, r - 1)]
    if dedupe:
        pairs = [(a, b) for a, b in pairs if a <= b]
    return pairs


def is_isolated(r: int, a: int, b: int) -> bool:
    return gcd(a, r) == 1 and gcd(b, r) == 1


def analyze_embedding(r: int, a: int, b: int, timing: bool = False) -> SurveyRecord:
    rec = SurveyRecord(r, a, b, isolated=is_isolated(r, a, b))
    start = time.perf_counter()
    try:
        ctx = LatticeContext(GroupSpec((Generator(r, (1 % r, a % r, b % r)),)))
        fan = build_fan(ctx)
        stats = fan_statistics(fan)
        report = b0_report(fan, degrees=False)
    except Exception as exc:  # recorded, the sweep goes on
        log.warning("1/%d(1,%d,%d) failed: %s", r, a, b, exc)
        rec.error = f"{type(exc).__name__}: {exc}"
        return rec
    rec.junior_count = len(ctx.junior_points)
    rec.triangle_count = stats.triangle_count
    rec.interior_edge_count = stats.interior_edge_count
    rec.boundary_edge_count = stats.boundary_edge_count
    rec.h0_size = len(report.h0)
    rec.b0 = report.b0
    if timing:
        rec.runtime_ms = round((time.perf_counter() - start) * 1000)
    return rec


def _task(args):
    return analyze_embedding(*args)


def sweep(
    r_min: int,
    r_max: int,
    dedupe_symmetry: bool = False,
    isolated_only: bool = False,
    jobs: int = 1,
    timing: bool = False,
    csv_path: str | Path | None = None,
) -> list[SurveyRecord]:
    """One record per (r, a, b), in (r, a) order whatever the completion order.

    With ``csv_path`` rows are appended as they complete and the file is
    re-read at the end as an integrity check.
    """
    if not 2 <= r_min <= r_max:
        raise ValueError("need 2 <= r_min <= r_max")
    tasks = [
        (r, a, b, timing)
        for r in range(r_min, r_max + 1)
        for a, b in enumerate_embeddings(r, dedupe_symmetry)
        if not isolated_only or is_isolated(r, a, b)
    ]
    records = []
    fh = writer = None
    if csv_path is not None:
        fh = open(csv_path, "w", newline="")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = pool.map(_task, tasks, chunksize=4)
                for rec in results:
                    records.append(rec)
                    if writer:
                        writer.writerow(rec.row())
                        fh.flush()
        else:
            for t in tasks:
                rec = _task(t)
                records.append(rec)
                if writer:
                    writer.writerow(rec.row())
                    fh.flush()
    finally:
        if fh:
            fh.close()
    if csv_path is not None:
        rows = read_csv(csv_path)
        if len(rows) != len(records):
            raise OSError(f"{csv_path}: wrote {len(records)} rows, read back {len(rows)}")
    return records


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for rec in records:
            w.writerow(rec.row())


def read_csv(path) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_COLUMNS:
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        return list(reader)


@dataclass
class Aggregate:
    min: Fraction
    max: Fraction
    histogram: Counter
    bound_violations: list
    symmetry_violations: list
    failures: list
    edge_criterion_violations: list

    def summary_lines(self) -> list[str]:
        lines = [
            f"records: {sum(self.histogram.values())} (failed: {len(self.failures)})",
            f"min B0: {self.min}",
            f"max B0: {self.max}",
            f"bound violations (B0 < 1/4 or > 1): {len(self.bound_violations)}",
        ]
        for rec in self.bound_violations:
            flag = "isolated" if rec.isolated else "non-isolated"
            lines.append(f"  1/{rec.r}(1,{rec.a},{rec.b}) B0 = {rec.b0} [{flag}]")
        lines.append(f"symmetry violations G(a,b) != G(b,a): {len(self.symmetry_violations)}")
        lines.append(f"interior-edge criterion violations: {len(self.edge_criterion_violations)}")
        lines.append("histogram:")
        for value in sorted(self.histogram):
            lines.append(f"  {value}: {self.histogram[value]}")
        return lines


def aggregate(records) -> Aggregate:
    good = [r for r in records if r.ok]
    if not good:
        raise ValueError("no successful records to aggregate")
    values = [r.b0 for r in good]
    by_pair = {(r.r, r.a, r.b): r.b0 for r in good}
    sym = [
        (r.r, r.a, r.b)
        for r in good
        if (r.r, r.b, r.a) in by_pair and by_pair[r.r, r.b, r.a] != r.b0
    ]
    edges = []
    for r in good:
        at_max = 2 * r.interior_edge_count == 3 * r.r - 3
        if 2 * r.interior_edge_count > 3 * r.r - 3 or at_max != r.isolated:
            edges.append((r.r, r.a, r.b))
    return Aggregate(
        min=min(values),
        max=max(values),
        histogram=Counter(values),
        bound_violations=[r for r in good if r.b0 < LOWER_BOUND or r.b0 > 1],
        symmetry_violations=sym,
        failures=[r for r in records if not r.ok],
        edge_criterion_violations=edges,
    )
