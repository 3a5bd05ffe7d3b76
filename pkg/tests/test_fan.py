from fractions import Fraction
from math import gcd

import pytest

from conftest import Z2Z2, cached_fan, int_det, point
from ghilb.errors import TilingError
from ghilb.fan import Fan, _check_tiling, candidate_triangles, fan_statistics
from ghilb.lattice import E_X, E_Y, E_Z, build_lattice_context

P1 = point(Fraction(1, 5), Fraction(1, 5), Fraction(3, 5))
P2 = point(Fraction(2, 5), Fraction(2, 5), Fraction(1, 5))


def test_candidates_1_5():
    ctx = build_lattice_context("1/5(1,1,3)")
    cands = {frozenset(t) for t in candidate_triangles(ctx)}
    assert frozenset((E_Z, P1, E_X)) in cands
    assert frozenset((E_X, E_Y, E_Z)) not in cands
    # independent determinant check in the basis {P1, e_y, e_z}, where e_x = 5 P1 - e_y - 3 e_z
    coords = {P1: (1, 0, 0), E_Y: (0, 1, 0), E_Z: (0, 0, 1), E_X: (5, -1, -3)}
    assert abs(int_det([coords[E_Z], coords[P1], coords[E_X]])) == 1
    assert abs(int_det([coords[E_Z], coords[E_Y], coords[E_X]])) == 5


def test_trivial_group_single_candidate():
    ctx = build_lattice_context("1/1(0,0,0)")
    (only,) = candidate_triangles(ctx)
    assert set(only) == {E_X, E_Y, E_Z}
    fan = cached_fan("1/1(0,0,0)")
    assert len(fan.triangles) == 1 and not fan.walls and len(fan.boundary_edges) == 3


def test_fan_1_5():
    fan = cached_fan("1/5(1,1,3)")
    got = {frozenset(t.vertices) for t in fan.triangles}
    expected = {
        frozenset(s)
        for s in [(E_Z, P1, E_X), (E_X, P1, P2), (E_Z, E_Y, P1), (E_Y, P1, P2), (E_X, P2, E_Y)]
    }
    assert got == expected


def test_fan_z2z2():
    fan = cached_fan(Z2Z2)
    h = Fraction(1, 2)
    central = frozenset((point(0, h, h), point(h, 0, h), point(h, h, 0)))
    tris = {frozenset(t.vertices) for t in fan.triangles}
    assert len(tris) == 4 and central in tris
    for corner in (E_X, E_Y, E_Z):
        assert sum(corner in t for t in tris) == 1


def test_fan_1_3():
    fan = cached_fan("1/3(1,1,1)")
    c = point(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    assert len(fan.triangles) == 3 and all(c in t.vertices for t in fan.triangles)


@pytest.mark.parametrize(
    "text,tri,interior,boundary,ivert",
    [
        ("1/5(1,1,3)", 5, 6, 3, 2),
        ("1/6(1,1,4)", 6, 7, 4, 2),
        ("1/7(1,1,5)", 7, 9, 3, 3),
        (Z2Z2, 4, 3, 6, 0),
        ("1/1(0,0,0)", 1, 0, 3, 0),
    ],
)
def test_statistics(text, tri, interior, boundary, ivert):
    s = fan_statistics(cached_fan(text))
    assert (s.triangle_count, s.interior_edge_count, s.boundary_edge_count, s.interior_vertex_count) == (
        tri,
        interior,
        boundary,
        ivert,
    )
    assert s.euler_check


@pytest.mark.parametrize("text", ["1/5(1,1,3)", "1/6(1,1,4)", "1/12(1,4,7)", "1/2(1,1,0);1/6(1,2,3)"])
def test_wall_relations(text):
    fan = cached_fan(text)
    for w in fan.walls:
        a, b = w.relation
        assert a + b == 2
        lhs = tuple(x + y for x, y in zip(w.opposite[0].coords, w.opposite[1].coords))
        rhs = tuple(a * x + b * y for x, y in zip(w.endpoints[0].coords, w.endpoints[1].coords))
        assert lhs == rhs


@pytest.mark.parametrize("text", ["1/5(1,1,3)", "1/9(1,2,6)", "1/3(1,2,0);1/3(0,1,2)"])
def test_tiling(text):
    fan = cached_fan(text)
    ctx = fan.ctx
    assert len(fan.triangles) == ctx.r
    assert {p for t in fan.triangles for p in t.vertices} == set(ctx.junior_points)
    for t in fan.triangles:
        assert abs(int_det(t.n_coordinates)) == 1
    # edge-to-edge: each interior edge in two triangles, boundary edges in one
    counts = {}
    for t in fan.triangles:
        vs = t.vertices
        for e in ((vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])):
            counts[frozenset(e)] = counts.get(frozenset(e), 0) + 1
    assert sorted(counts.values()).count(2) == len(fan.walls)
    assert sorted(counts.values()).count(1) == len(fan.boundary_edges)


def test_locate_interior_point():
    fan = cached_fan("1/5(1,1,3)")
    assert len(fan.locate((Fraction(1, 4), Fraction(1, 3), Fraction(5, 12)))) == 1
    # (1/3,1/3,1/3) sits on the wall P1 P2
    assert len(fan.locate((Fraction(1, 3),) * 3)) == 2
    assert len(fan.locate(P1.coords)) == 4


def test_tiling_check_rejects_missing_triangle():
    fan = cached_fan("1/5(1,1,3)")
    broken = Fan(fan.ctx, fan.triangles[1:], fan.walls, fan.boundary_edges, fan.interior_vertices)
    with pytest.raises(TilingError):
        _check_tiling(broken, {p for t in broken.triangles for p in t.vertices})


@pytest.mark.parametrize("r", range(3, 13))
def test_edge_bound_and_equality_criterion(r):
    for a in range(1, r - 1):
        b = r - 1 - a
        s = fan_statistics(cached_fan(f"1/{r}(1,{a},{b})"))
        assert s.triangle_count == r
        assert 2 * s.interior_edge_count <= 3 * r - 3
        assert (2 * s.interior_edge_count == 3 * r - 3) == (gcd(a, r) == 1 and gcd(b, r) == 1)
