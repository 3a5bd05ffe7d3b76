"""The G-Hilb triangulation of the junior simplex.

A unimodular triangle of junior points belongs to the fan exactly when every
character class has a monomial that is minimal at all three vertices.  The
accepted triangles are then checked to tile the simplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import ConsistencyError, NoMinimizer, TilingError
from .ggraph import GGraph, ggraph_for_cone
from .lattice import JuniorPoint, LatticeContext, det3

__all__ = [
    "Triangle",
    "Wall",
    "Fan",
    "candidate_triangles",
    "build_fan",
    "fan_statistics",
    "FanStatistics",
]


@dataclass(frozen=True)
class Triangle:
    vertices: tuple[JuniorPoint, JuniorPoint, JuniorPoint]
    n_coordinates: tuple
    ggraph: GGraph = field(compare=False, repr=False)

    def __iter__(self):
        return iter(self.vertices)

    def contains(self, point) -> int:
        """Barycentric test: 1 strictly inside, 0 on the boundary, -1 outside."""
        bary = barycentric(self.vertices, point)
        if all(b > 0 for b in bary):
            return 1
        if all(b >= 0 for b in bary):
            return 0
        return -1


@dataclass(frozen=True)
class Wall:
    endpoints: tuple[JuniorPoint, JuniorPoint]
    sides: tuple[Triangle, Triangle]
    opposite: tuple[JuniorPoint, JuniorPoint]
    relation: tuple[int, int]  # (alpha, beta) with w + w' = alpha v1 + beta v2


@dataclass(eq=False)
class Fan:
    ctx: LatticeContext
    triangles: list[Triangle]
    walls: list[Wall]
    boundary_edges: list[tuple[JuniorPoint, JuniorPoint]]
    interior_vertices: list[JuniorPoint]
    # derived data (fixed-point tables, localization models) keyed by name
    cache: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def points(self) -> list[JuniorPoint]:
        return self.ctx.junior_points

    def edges(self):
        return [w.endpoints for w in self.walls] + list(self.boundary_edges)

    def locate(self, point):
        """Triangles containing ``point`` (closed)."""
        return [t for t in self.triangles if t.contains(point) >= 0]


def barycentric(vertices, point) -> tuple[Fraction, Fraction, Fraction]:
    # Cramer solve of point = sum b_i v_i
    m = [v.coords for v in vertices]
    d = det3(m)
    p = tuple(Fraction(x) for x in point)
    out = []
    for i in range(3):
        mm = list(m)
        mm[i] = p
        out.append(Fraction(det3(mm)) / d)
    return tuple(out)


def candidate_triangles(ctx: LatticeContext) -> list[tuple[JuniorPoint, JuniorPoint, JuniorPoint]]:
    """All 3-subsets of junior points that are a basis of N."""
    coords = {p: ctx.n_coordinates(p.coords) for p in ctx.junior_points}
    out = []
    for tri in combinations(ctx.junior_points, 3):
        if abs(det3([coords[p] for p in tri])) == 1:
            out.append(tri)
    return out


def _shared_side(p: JuniorPoint, q: JuniorPoint) -> bool:
    return any(a == 0 and b == 0 for a, b in zip(p.coords, q.coords))


def build_fan(ctx: LatticeContext) -> Fan:
    triangles = []
    for tri in candidate_triangles(ctx):
        try:
            gg = ggraph_for_cone(tri, ctx)
        except NoMinimizer:
            continue
        gg.check(ctx)
        triangles.append(Triangle(tri, tuple(ctx.n_coordinates(p.coords) for p in tri), gg))
    triangles.sort(key=lambda t: tuple(p.coords for p in t.vertices))

    incident: dict = {}
    for t in triangles:
        for e in combinations(t.vertices, 2):
            incident.setdefault(e, []).append(t)

    walls, boundary = [], []
    for e in sorted(incident, key=lambda e: (e[0].coords, e[1].coords)):
        ts = incident[e]
        if _shared_side(*e):
            if len(ts) != 1:
                raise TilingError("boundary-edge", f"boundary edge {e} has {len(ts)} triangles")
            boundary.append(e)
            continue
        if len(ts) != 2:
            raise TilingError("wall-sides", f"interior edge {e} has {len(ts)} triangles")
        (w,) = [p for p in ts[0].vertices if p not in e]
        (w2,) = [p for p in ts[1].vertices if p not in e]
        walls.append(Wall(e, (ts[0], ts[1]), (w, w2), _wall_relation(e, w, w2, ctx)))

    used = {p for t in triangles for p in t.vertices}
    fan = Fan(
        ctx,
        triangles,
        walls,
        boundary,
        [p for p in ctx.junior_points if not p.on_boundary],
    )
    _check_tiling(fan, used)
    return fan


def _wall_relation(e, w, w2, ctx) -> tuple[int, int]:
    v1, v2 = e
    s = tuple(a + b for a, b in zip(w.coords, w2.coords))
    # solve s = alpha v1 + beta v2 + gamma w
    a, b, g = barycentric((v1, v2, w), s)
    if g != 0 or a.denominator != 1 or b.denominator != 1:
        raise TilingError("wall-relation", f"w + w' not an integral combination on wall {e}")
    if a + b != 2:
        raise TilingError("wall-relation", f"alpha + beta = {a + b} on wall {e}")
    return int(a), int(b)


def _check_tiling(fan: Fan, used) -> None:
    ctx = fan.ctx
    if len(fan.triangles) != ctx.r:
        raise TilingError("triangle-count", f"{len(fan.triangles)} triangles, r = {ctx.r}")
    area = sum(abs(Fraction(det3([p.coords for p in t.vertices]))) for t in fan.triangles)
    if area != 1:
        raise TilingError("total-area", f"triangles cover area {area} of the simplex")
    missing = [p for p in ctx.junior_points if p not in used]
    if missing:
        raise TilingError("vertex-coverage", f"junior points not used: {missing}")
    for wall in fan.walls:
        v1, v2 = wall.endpoints
        s1 = det3([v1.coords, v2.coords, wall.opposite[0].coords])
        s2 = det3([v1.coords, v2.coords, wall.opposite[1].coords])
        if s1 * s2 >= 0:
            raise TilingError("wall-sides", f"triangles on wall {wall.endpoints} overlap")
    v = len(ctx.junior_points)
    e = len(fan.walls) + len(fan.boundary_edges)
    if v - e + len(fan.triangles) != 1:
        raise TilingError("euler", f"V - E + F = {v - e + len(fan.triangles)}")
    for t in fan.triangles:
        if abs(det3(t.n_coordinates)) != 1:
            raise ConsistencyError("unimodular", f"{t.vertices} is not a basis of N")


@dataclass(frozen=True)
class FanStatistics:
    triangle_count: int
    interior_edge_count: int
    boundary_edge_count: int
    interior_vertex_count: int
    euler_check: bool

    @property
    def max_interior_edges(self) -> Fraction:
        return Fraction(3 * self.triangle_count - 3, 2)


def fan_statistics(fan: Fan) -> FanStatistics:
    v = len(fan.points)
    e = len(fan.walls) + len(fan.boundary_edges)
    return FanStatistics(
        triangle_count=len(fan.triangles),
        interior_edge_count=len(fan.walls),
        boundary_edge_count=len(fan.boundary_edges),
        interior_vertex_count=len(fan.interior_vertices),
        euler_check=(v - e + len(fan.triangles) == 1),
    )
