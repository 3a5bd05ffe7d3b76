"""Torus-fixed G-clusters: per-character monomials minimal on a cone.

For a cone spanned by junior points, the G-graph picks in every character
class the exponent vector whose pairing with each spanning ray is the least
in its class.  Searching the box ``[0, d)^3`` (``d`` the exponent of G) is
enough: ``x_i^d`` is invariant, so lowering a coordinate by ``d`` stays in
the class and never increases a pairing with a nonnegative ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import ConsistencyError, NoMinimizer
from .lattice import Character, IntVec, JuniorPoint, LatticeContext

__all__ = [
    "GGraph",
    "MinimizerTables",
    "minimizer_tables",
    "class_minimizers",
    "ggraph_for_cone",
    "pointwise_minimizer",
]


@dataclass(frozen=True)
class GGraph:
    assignment: dict  # Character -> exponent triple
    cone: tuple[JuniorPoint, JuniorPoint, JuniorPoint]

    def __getitem__(self, chi: Character) -> IntVec:
        return self.assignment[chi]

    def __len__(self):
        return len(self.assignment)

    def monomials(self) -> list[str]:
        return [monomial_str(e) for _, e in sorted(self.assignment.items())]

    def check(self, ctx: LatticeContext) -> None:
        """Verify the G-graph invariants; raise ConsistencyError otherwise."""
        if len(self.assignment) != ctx.r:
            raise ConsistencyError("ggraph-size", f"{len(self.assignment)} entries, r = {ctx.r}")
        if self.assignment[ctx.trivial] != (0, 0, 0):
            raise ConsistencyError("ggraph-trivial", "trivial character is not 1")
        for chi, e in self.assignment.items():
            if ctx.character_of(e) != chi:
                raise ConsistencyError("ggraph-class", f"{e} is not in class {chi}")
            if any(not 0 <= x < ctx.r for x in e):
                raise ConsistencyError("ggraph-box", f"{e} outside [0, r)^3")
            for d in product(*(range(x + 1) for x in e)):
                if self.assignment[ctx.character_of(d)] != d:
                    raise ConsistencyError("ggraph-order-ideal", f"divisor {d} of {e} not assigned")


def monomial_str(e) -> str:
    parts = []
    for var, k in zip("xyz", e):
        if k == 1:
            parts.append(var)
        elif k > 1:
            parts.append(f"{var}^{k}")
    return "*".join(parts) or "1"


class MinimizerTables:
    """One pass over the box, bucketing exponents by class, with per
    (class, junior point) minima and argmin sets.

    Pairings are stored scaled by the group exponent ``d`` so that they are
    integers: ``<e, d*u>``.
    """

    def __init__(self, ctx: LatticeContext):
        self.ctx = ctx
        d = ctx.exponent
        self.scale = d
        box = np.array(list(product(range(d), repeat=3)), dtype=np.int64)
        self.box = box
        chars = ctx.characters
        self.char_index = {c: i for i, c in enumerate(chars)}
        weights = np.array([g.weights for g in ctx.spec.generators], dtype=np.int64)
        orders = np.array(ctx.orders, dtype=np.int64)
        keys = (box @ weights.T) % orders
        key_to_idx = {c.key: i for i, c in enumerate(chars)}
        self.cls = np.array([key_to_idx[tuple(k)] for k in keys.tolist()], dtype=np.int64)
        self.points = list(ctx.junior_points)
        self.point_index = {p: j for j, p in enumerate(self.points)}
        scaled = np.array([[int(x * d) for x in p.coords] for p in self.points], dtype=np.int64)
        self.values = box @ scaled.T  # (n_box, n_points)
        self._argmin = {}
        order = np.argsort(self.cls, kind="stable")
        bounds = np.searchsorted(self.cls[order], np.arange(len(chars) + 1))
        self.members = [order[bounds[i] : bounds[i + 1]] for i in range(len(chars))]
        for ci, rows in enumerate(self.members):
            vals = self.values[rows]
            mins = vals.min(axis=0)
            for j in range(len(self.points)):
                hit = rows[vals[:, j] == mins[j]]
                self._argmin[ci, j] = frozenset(hit.tolist())

    def argmin(self, chi: Character, point: JuniorPoint) -> frozenset:
        """Row indices into ``box`` minimizing the pairing with ``point``."""
        return self._argmin[self.char_index[chi], self.point_index[point]]

    def exponent(self, row: int) -> IntVec:
        return tuple(int(x) for x in self.box[row])


@lru_cache(maxsize=64)
def minimizer_tables(ctx: LatticeContext) -> MinimizerTables:
    return MinimizerTables(ctx)


def class_minimizers(chi: Character, vertices, ctx: LatticeContext) -> set:
    """Exponents in the class of ``chi`` minimal at every vertex at once."""
    tables = minimizer_tables(ctx)
    rows = None
    for v in vertices:
        if v in tables.point_index:
            hit = tables.argmin(chi, v)
        else:
            hit = _argmin_direct(tables, chi, v)
        rows = hit if rows is None else rows & hit
        if not rows:
            return set()
    return {tables.exponent(i) for i in rows}


def _argmin_direct(tables: MinimizerTables, chi: Character, v) -> frozenset:
    rows = tables.members[tables.char_index[chi]]
    coords = v.coords if isinstance(v, JuniorPoint) else v
    den = 1
    for c in coords:
        den = den * Fraction(c).denominator // np.gcd(den, Fraction(c).denominator)
    w = np.array([int(Fraction(c) * den) for c in coords], dtype=object)
    vals = tables.box[rows].astype(object) @ w
    m = vals.min()
    return frozenset(int(i) for i in rows[vals == m])


def ggraph_for_cone(triangle, ctx: LatticeContext) -> GGraph:
    """G-graph of the cone over ``triangle``.

    Raises :class:`NoMinimizer` when some class has no simultaneous
    minimizer (the cone is not in the G-Hilb fan) and
    :class:`ConsistencyError` when a minimizer is not unique, which cannot
    happen on a full-dimensional cone.
    """
    tables = minimizer_tables(ctx)
    assignment = {}
    for chi in ctx.characters:
        rows = None
        for v in triangle:
            hit = tables.argmin(chi, v)
            rows = hit if rows is None else rows & hit
        if not rows:
            raise NoMinimizer(chi)
        if len(rows) > 1:
            raise ConsistencyError(
                "ggraph-unique", f"{len(rows)} tied minimizers for {chi} on {triangle}"
            )
        (row,) = rows
        assignment[chi] = tables.exponent(row)
    return GGraph(assignment, tuple(triangle))


def pointwise_minimizer(chi: Character, point, ctx: LatticeContext):
    """Lexicographically least exponent of class ``chi`` minimizing the
    pairing with an arbitrary rational point; also reports whether the
    minimum was attained uniquely.
    """
    tables = minimizer_tables(ctx)
    rows = _argmin_direct(tables, chi, point)
    exps = sorted(tables.exponent(i) for i in rows)
    return exps[0], len(exps) == 1
