from fractions import Fraction

import pytest

from conftest import Z2Z2, cached_fan
from ghilb.ktheory import duality_check
from ghilb.oracle import OracleConfig, brute_duality_oracle, sampling_fan_oracle


@pytest.mark.parametrize("text", ["1/5(1,1,3)", "1/1(0,0,0)", Z2Z2, "1/12(1,4,7)"])
def test_sampling_oracle_clean(text):
    fan = cached_fan(text)
    rep = sampling_fan_oracle(fan.ctx, fan, OracleConfig(seed=3, sample_count=300))
    assert rep.ok and rep.samples == 300


def test_sampling_hits_every_sector_of_1_3():
    fan = cached_fan("1/3(1,1,1)")
    rep = sampling_fan_oracle(fan.ctx, fan, OracleConfig(seed=0, sample_count=200))
    assert rep.ok and rep.ggraphs_seen == 3


def test_trivial_group_single_triangle():
    fan = cached_fan("1/1(0,0,0)")
    rep = sampling_fan_oracle(fan.ctx, fan, OracleConfig(sample_count=50))
    assert rep.ggraphs_seen == 1


def test_sampling_is_seeded():
    fan = cached_fan("1/7(1,2,4)")
    cfg = OracleConfig(seed=11, sample_count=100)
    a, b = sampling_fan_oracle(fan.ctx, fan, cfg), sampling_fan_oracle(fan.ctx, fan, cfg)
    assert (a.samples, a.resampled, a.ggraphs_seen) == (b.samples, b.resampled, b.ggraphs_seen)


def test_sampling_detects_a_corrupted_fan():
    from dataclasses import replace

    from ghilb.fan import Fan

    fan = cached_fan("1/5(1,1,3)")
    t0, t1 = fan.triangles[0], fan.triangles[1]
    swapped = [replace(t0, ggraph=t1.ggraph), *fan.triangles[1:]]
    bad = Fan(fan.ctx, swapped, fan.walls, fan.boundary_edges, fan.interior_vertices)
    assert not sampling_fan_oracle(fan.ctx, bad, OracleConfig(sample_count=200)).ok


def test_r_cap():
    fan = cached_fan("1/7(1,2,4)")
    with pytest.raises(ValueError):
        sampling_fan_oracle(fan.ctx, fan, OracleConfig(r_cap=5))
    with pytest.raises(ValueError):
        brute_duality_oracle(fan.ctx, fan, config=OracleConfig(r_cap=5))


@pytest.mark.parametrize("text", ["1/3(1,1,1)", Z2Z2, "1/5(1,1,3)", "1/6(1,1,4)", "1/1(0,0,0)"])
def test_duality_oracle_agrees(text):
    fan = cached_fan(text)
    cmp = brute_duality_oracle(fan.ctx, fan, duality_check(fan))
    r = fan.ctx.r
    assert cmp.ok
    assert cmp.matrix == [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]


def test_duality_oracle_reports_disagreement():
    fan = cached_fan("1/3(1,1,1)")
    fake = [[1, 0, 0], [0, 1, 0], [0, 1, 1]]
    cmp = brute_duality_oracle(fan.ctx, fan, fake)
    assert not cmp.ok and len(cmp.disagreements) == 1
    mu, chi, oracle, pipeline = cmp.disagreements[0]
    assert (mu.label, chi.label, oracle, pipeline) == ("chi2", "chi1", 0, 1)
