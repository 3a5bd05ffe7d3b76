"""Group specifications, the lattices N and M, characters and junior points.

A finite abelian subgroup of SL_3 is given by diagonal generators
``1/r(a,b,c)``, i.e. ``diag(zeta^a, zeta^b, zeta^c)`` with ``zeta`` a
primitive r-th root of unity.  Everything here is exact: group elements
are triples of :class:`fractions.Fraction` in ``[0, 1)``, lattice bases are
integer or rational 3x3 matrices held as tuples of tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd, lcm

__all__ = [
    "GroupSpecError",
    "Generator",
    "GroupSpec",
    "Character",
    "JuniorPoint",
    "LatticeContext",
    "parse_group_spec",
    "build_lattice_context",
    "character_of",
    "junior_points",
    "hermite_normal_form",
    "det3",
    "inverse3",
]

Vec = tuple[Fraction, Fraction, Fraction]
IntVec = tuple[int, int, int]


class GroupSpecError(ValueError):
    """Raised for malformed or non-SL_3 group specifications."""


@dataclass(frozen=True)
class Generator:
    order: int
    weights: IntVec

    def __post_init__(self):
        if self.order < 1:
            raise GroupSpecError(f"generator order must be >= 1, got {self.order}")
        if any(not 0 <= w < self.order for w in self.weights):
            raise GroupSpecError("weights must be reduced mod the order")
        if sum(self.weights) % self.order:
            raise GroupSpecError(
                f"1/{self.order}{self.weights}: weight sum {sum(self.weights)} "
                f"is not divisible by {self.order} (determinant != 1)"
            )

    @property
    def vector(self) -> Vec:
        return tuple(Fraction(w, self.order) for w in self.weights)

    def __str__(self):
        return "1/%d(%d,%d,%d)" % ((self.order,) + self.weights)


@dataclass(frozen=True)
class GroupSpec:
    generators: tuple[Generator, ...]

    def __post_init__(self):
        if not self.generators:
            raise GroupSpecError("at least one generator is required")

    def __str__(self):
        return ";".join(str(g) for g in self.generators)

    def permuted(self, perm) -> "GroupSpec":
        """Apply the same coordinate permutation to every generator."""
        return GroupSpec(
            tuple(Generator(g.order, tuple(g.weights[i] for i in perm)) for g in self.generators)
        )


_GEN_RE = re.compile(r"^\s*1\s*/\s*(\d+)\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``1/r(a,b,c)`` generators separated by ``;``.

    >>> parse_group_spec("1/5(1,1,3)")
    GroupSpec(generators=(Generator(order=5, weights=(1, 1, 3)),))
    """
    parts = text.split(";")
    gens = []
    for part in parts:
        m = _GEN_RE.match(part)
        if m is None:
            raise GroupSpecError(f"cannot parse generator {part.strip()!r}; expected 1/r(a,b,c)")
        r, a, b, c = (int(x) for x in m.groups())
        if r == 0:
            raise GroupSpecError("generator order must be positive")
        gens.append(Generator(r, (a % r, b % r, c % r)))
    return GroupSpec(tuple(gens))


# --- small exact linear algebra -------------------------------------------------


def det3(m) -> Fraction | int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def inverse3(m) -> tuple[Vec, Vec, Vec]:
    """Exact inverse of a 3x3 matrix (rows)."""
    d = Fraction(det3(m))
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    (a, b, c), (e, f, g), (h, i, j) = m
    adj = (
        (f * j - g * i, c * i - b * j, b * g - c * f),
        (g * h - e * j, a * j - c * h, c * e - a * g),
        (e * i - f * h, b * h - a * i, a * f - b * e),
    )
    return tuple(tuple(Fraction(x) / d for x in row) for row in adj)


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix of full column rank.

    Returns the nonzero rows: upper triangular, positive pivots, entries above
    each pivot reduced into ``[0, pivot)``.  The rows generate the same
    lattice as the input rows.
    """
    a = [list(r) for r in rows]
    ncols = len(a[0])
    out = []
    for col in range(ncols):
        # gcd-eliminate the column among the remaining rows
        while True:
            nz = [r for r in a if r[col] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is piv:
                    continue
                q = r[col] // piv[col]
                for k in range(ncols):
                    r[k] -= q * piv[k]
        nz = [r for r in a if r[col] != 0]
        if not nz:
            raise ValueError("matrix does not have full column rank")
        piv = nz[0]
        a.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
    for i, row in enumerate(out):
        p = row[i]
        for prev in out[:i]:
            q = prev[i] // p
            for k in range(ncols):
                prev[k] -= q * row[k]
    return out


# --- characters and points ----------------------------------------------------


@dataclass(frozen=True, order=True)
class Character:
    """An element of Z^3/M, keyed by its value on each generator."""

    key: tuple[int, ...]
    orders: tuple[int, ...] = field(compare=False)

    @property
    def is_trivial(self) -> bool:
        return not any(self.key)

    @property
    def label(self) -> str:
        if len(self.key) == 1:
            return f"chi{self.key[0]}"
        if all(o <= 10 for o in self.orders):
            return "chi" + "".join(str(k) for k in self.key)
        return "chi(" + ",".join(str(k) for k in self.key) + ")"

    def __add__(self, other: "Character") -> "Character":
        return Character(
            tuple((x + y) % o for x, y, o in zip(self.key, other.key, self.orders)), self.orders
        )

    def __neg__(self) -> "Character":
        return Character(tuple(-x % o for x, o in zip(self.key, self.orders)), self.orders)

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class JuniorPoint:
    coords: Vec

    @property
    def is_corner(self) -> bool:
        return sum(1 for c in self.coords if c) == 1

    @property
    def on_boundary(self) -> bool:
        return any(c == 0 for c in self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


E_X = JuniorPoint((Fraction(1), Fraction(0), Fraction(0)))
E_Y = JuniorPoint((Fraction(0), Fraction(1), Fraction(0)))
E_Z = JuniorPoint((Fraction(0), Fraction(0), Fraction(1)))


def _add_mod1(u: Vec, v: Vec) -> Vec:
    return tuple((a + b) % 1 for a, b in zip(u, v))


class LatticeContext:
    """Lattice data attached to a group: N, M, the character group and the
    junior simplex points.  Immutable after construction."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.orders = tuple(g.order for g in spec.generators)
        zero = (Fraction(0),) * 3
        elems = {zero}
        frontier = [zero]
        gens = [g.vector for g in spec.generators]
        while frontier:
            new = []
            for v in frontier:
                for g in gens:
                    w = _add_mod1(v, g)
                    if w not in elems:
                        elems.add(w)
                        new.append(w)
            frontier = new
        self.group_elements: list[Vec] = sorted(elems)
        self.r = len(self.group_elements)
        # the exponent of G divides lcm of generator orders; all coordinates have that denominator
        self.exponent = lcm(*self.orders)

        for v in self.group_elements:
            if sum(v).denominator != 1:
                raise GroupSpecError(f"group element {v} has non-integral coordinate sum")

        d = self.exponent
        rows = [[d if i == j else 0 for j in range(3)] for i in range(3)]
        rows += [[int(x * d) for x in g] for g in gens]
        hnf = hermite_normal_form(rows)
        self.n_basis: tuple[Vec, Vec, Vec] = tuple(
            tuple(Fraction(x, d) for x in row) for row in hnf
        )
        inv = inverse3(self.n_basis)
        # M = Hom(N, Z): columns of the inverse, i.e. rows of its transpose
        m_rows = tuple(tuple(inv[i][j] for i in range(3)) for j in range(3))
        if any(x.denominator != 1 for row in m_rows for x in row):
            raise ArithmeticError("dual basis is not integral")
        self.m_basis: tuple[IntVec, IntVec, IntVec] = tuple(
            tuple(int(x) for x in row) for row in m_rows
        )
        index = 1 / abs(Fraction(det3(self.n_basis)))
        if index != self.r:
            raise ArithmeticError(f"|G| = {self.r} but [N:Z^3] = {index}")

    # characters ---------------------------------------------------------

    def character_of(self, exponent) -> Character:
        key = tuple(
            sum(e * w for e, w in zip(exponent, g.weights)) % g.order for g in self.spec.generators
        )
        return Character(key, self.orders)

    @cached_property
    def characters(self) -> list[Character]:
        """All r characters, trivial first, in key order."""
        seen = {}
        for e in product(range(self.exponent), repeat=3):
            c = self.character_of(e)
            seen.setdefault(c.key, c)
            if len(seen) == self.r:
                break
        if len(seen) != self.r:
            raise ArithmeticError("character map is not onto a group of order r")
        return sorted(seen.values())

    @property
    def trivial(self) -> Character:
        return Character((0,) * len(self.orders), self.orders)

    def character_from_label(self, label: str) -> Character:
        for c in self.characters:
            if c.label == label:
                return c
        raise KeyError(label)

    # N-coordinates ----------------------------------------------------------

    @cached_property
    def _n_inverse(self):
        return inverse3(self.n_basis)

    def n_coordinates(self, v) -> IntVec:
        """Coordinates of an N-point in the basis ``n_basis`` (integers)."""
        inv = self._n_inverse
        c = tuple(sum(v[i] * inv[i][j] for i in range(3)) for j in range(3))
        if any(x.denominator != 1 for x in c):
            raise ValueError(f"{v} is not a point of N")
        return tuple(int(x) for x in c)

    def in_n(self, v) -> bool:
        return all(
            sum(Fraction(v[i]) * self._n_inverse[i][j] for i in range(3)).denominator == 1
            for j in range(3)
        )

    @cached_property
    def junior_points(self) -> list[JuniorPoint]:
        pts = {E_X, E_Y, E_Z}
        for v in self.group_elements:
            if sum(v) == 1:
                pts.add(JuniorPoint(v))
        return sorted(pts)

    def __repr__(self):
        return f"LatticeContext({self.spec}, r={self.r})"


def build_lattice_context(spec: GroupSpec | str) -> LatticeContext:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return LatticeContext(spec)


def character_of(exponent, ctx: LatticeContext) -> Character:
    return ctx.character_of(exponent)


def junior_points(ctx: LatticeContext) -> list[JuniorPoint]:
    return ctx.junior_points


def is_primitive(v, ctx: LatticeContext) -> bool:
    """True if no ``v/k`` (k >= 2) lies in N."""
    g = 0
    for x in ctx.n_coordinates(v):
        g = gcd(g, x)
    return g == 1
