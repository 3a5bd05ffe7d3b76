import csv
from fractions import Fraction

import pytest

from ghilb import survey
from ghilb.survey import CSV_COLUMNS, SurveyRecord, aggregate, enumerate_embeddings, read_csv, sweep


def test_enumerate_embeddings():
    assert enumerate_embeddings(5) == [(1, 3), (2, 2), (3, 1)]
    assert enumerate_embeddings(5, dedupe=True) == [(1, 3), (2, 2)]
    assert enumerate_embeddings(3) == [(1, 1)]
    assert enumerate_embeddings(2) == []


def test_sweep_small(tmp_path):
    path = tmp_path / "s.csv"
    recs = sweep(3, 8, csv_path=path)
    assert [(r.r, r.a, r.b) for r in recs] == [(r, a, b) for r in range(3, 9) for a, b in enumerate_embeddings(r)]
    for rec in recs:
        assert rec.ok and rec.triangle_count == rec.r
        assert rec.b0 == Fraction(rec.h0_size, rec.r - 1)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == len(recs) + 1
    by = {(int(r[0]), int(r[1]), int(r[2])): r for r in rows[1:]}
    # 1/5(1,1,3): computed 1/2, isolated
    assert by[5, 1, 3][7:11] == ["2", "1", "2", "1"]
    assert by[6, 1, 4][10] == "0"
    assert all(row[11] == "" for row in rows[1:])


def test_symmetry_without_dedupe():
    recs = {(r.a, r.b): r for r in sweep(5, 5)}
    assert recs[1, 3].b0 == recs[3, 1].b0
    assert aggregate(list(recs.values())).symmetry_violations == []


def test_dedupe_and_isolated_filters():
    assert [(r.a, r.b) for r in sweep(6, 6, dedupe_symmetry=True)] == [(1, 4), (2, 3)]
    assert [(r.a, r.b) for r in sweep(6, 6, isolated_only=True)] == []
    assert [(r.a, r.b) for r in sweep(7, 7, isolated_only=True, dedupe_symmetry=True)] == [(1, 5), (2, 4), (3, 3)]


def test_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    sweep(3, 9, jobs=1, csv_path=a)
    sweep(3, 9, jobs=3, csv_path=b)
    assert a.read_bytes() == b.read_bytes()


def test_timing_is_opt_in():
    (rec,) = sweep(3, 3, timing=True)
    assert isinstance(rec.runtime_ms, int) and rec.runtime_ms >= 0


def test_failures_are_recorded(monkeypatch, tmp_path):
    real = survey.build_fan

    def flaky(ctx):
        if ctx.r == 4:
            raise RuntimeError("boom")
        return real(ctx)

    monkeypatch.setattr(survey, "build_fan", flaky)
    path = tmp_path / "f.csv"
    recs = sweep(3, 5, csv_path=path)
    failed = [r for r in recs if not r.ok]
    assert [(r.r, r.a) for r in failed] == [(4, 1), (4, 2)]
    assert "boom" in failed[0].error
    assert len(read_csv(path)) == len(recs)
    agg = aggregate(recs)
    assert len(agg.failures) == 2 and sum(agg.histogram.values()) == len(recs) - 2


def test_sweep_rejects_bad_range():
    with pytest.raises(ValueError):
        sweep(1, 4)
    with pytest.raises(ValueError):
        sweep(6, 5)


def test_aggregate_single_record():
    rec = SurveyRecord(5, 1, 3, triangle_count=5, interior_edge_count=6, b0=Fraction(1, 2), isolated=True)
    agg = aggregate([rec])
    assert agg.min == agg.max == Fraction(1, 2)
    assert agg.histogram == {Fraction(1, 2): 1}


def test_aggregate_reports_bound_violations():
    recs = [
        SurveyRecord(5, 1, 3, triangle_count=5, interior_edge_count=6, b0=Fraction(1, 2), isolated=True),
        SurveyRecord(9, 1, 7, triangle_count=9, interior_edge_count=12, b0=Fraction(1, 5), isolated=True),
        SurveyRecord(4, 1, 2, triangle_count=4, interior_edge_count=4, b0=Fraction(1, 3), isolated=False),
    ]
    agg = aggregate(recs)
    assert agg.min == Fraction(1, 5) and agg.max == Fraction(1, 2)
    assert [(r.r, r.a) for r in agg.bound_violations] == [(9, 1)]
    assert any("1/9(1,1,7)" in line for line in agg.summary_lines())
    with pytest.raises(ValueError):
        aggregate([])


def test_isolated_bounds_small_range():
    recs = sweep(4, 12, isolated_only=True)
    agg = aggregate(recs)
    assert agg.min >= Fraction(1, 4) and agg.max <= 1
    assert agg.bound_violations == [] and agg.edge_criterion_violations == []
