"""Homological degree of the images of character skyscrapers.

For each maximal cone T of the G-Hilb fan the chart is ``Spec C[T^dual ∩ M]``
with coordinates the dual basis ``u_{T,i}``, and the tautological bundle
``L_mu`` has local generator the G-graph monomial ``m_mu(T)``.  Resolving the
skyscraper at the origin by the Koszul complex and applying the derived
McKay functor term by term gives, at T,

    sum_{S ⊆ {x,y,z}} (-1)^|S| t^(exp m_nu(T) - e_S),    nu = [e_S] + chi,

over ``prod_i (1 - t^(-u_{T,i}))``.  Twisting by powers of the ample bundle
``det(⊕ L_mu)`` and summing over fixed points gives the Euler characteristics
``p(n)``; the images are pure, so the sign of the leading coefficient of
``p`` tells degree 0 from degree -1.

The three sign choices in the formula above are not free: they are pinned by
requiring the Euler pairing between ``L_mu`` and the class of chi to be the
identity matrix (see :func:`scan_conventions`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import ConsistencyError
from .fan import Fan, Wall
from .lattice import Character, LatticeContext, inverse3
from .series import Localizer

__all__ = [
    "Conventions",
    "CONVENTIONS",
    "FixedPointData",
    "PsiClassRecord",
    "B0Report",
    "KoszulModel",
    "wall_degree",
    "wall_degree_table",
    "ample_data",
    "psi_class",
    "euler_characteristic",
    "classify_character",
    "duality_check",
    "b0_report",
    "scan_conventions",
]

UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
SUBSETS = [S for n in range(4) for S in combinations(range(3), n)]
N_RANGE = range(6)


@dataclass(frozen=True)
class Conventions:
    fiber_sign: int  # L_mu fiber at T is t^(fiber_sign * exp m_mu(T))
    denominator_sign: int  # factors 1 - t^(denominator_sign * u_{T,i})
    nu_plus: bool  # nu(S, chi) = [e_S] + chi, else [e_S] - chi
    koszul_sign: int = -1  # Koszul term S carries t^(koszul_sign * e_S)


CONVENTIONS = Conventions(fiber_sign=1, denominator_sign=-1, nu_plus=True)


@dataclass(frozen=True)
class FixedPointData:
    dual_basis: tuple  # u_{T,i} in M, <u_i, v_j> = delta_ij
    exponents: dict  # Character -> exp m_mu(T)
    ample_character: tuple  # w_T = sum_mu exp m_mu(T)


def _fixed_point(tri, ctx: LatticeContext) -> FixedPointData:
    inv = inverse3([v.coords for v in tri.vertices])
    dual = tuple(tuple(inv[i][j] for i in range(3)) for j in range(3))
    for i, u in enumerate(dual):
        if any(x.denominator != 1 for x in u):
            raise ConsistencyError("dual-basis", f"dual basis of {tri.vertices} not integral")
        for j, v in enumerate(tri.vertices):
            if sum(a * b for a, b in zip(u, v.coords)) != (i == j):
                raise ConsistencyError("dual-basis", "dual basis identity fails")
    dual = tuple(tuple(int(x) for x in u) for u in dual)
    exps = dict(tri.ggraph.assignment)
    w = tuple(sum(e[k] for e in exps.values()) for k in range(3))
    return FixedPointData(dual, exps, w)


def _pair(m, v) -> Fraction:
    return sum(Fraction(a) * b for a, b in zip(m, v.coords))


def wall_degree(wall: Wall, chi: Character) -> int:
    """Degree of ``L_chi`` on the curve of ``wall``.

    ``<exp m_chi(T') - exp m_chi(T), w>`` with ``w`` the vertex of T off the
    wall; checked against the same quantity computed from the other side.
    """
    t, t2 = wall.sides
    w, w2 = wall.opposite
    e, e2 = t.ggraph[chi], t2.ggraph[chi]
    diff = tuple(a - b for a, b in zip(e2, e))
    d1 = _pair(diff, w)
    d2 = _pair(tuple(-x for x in diff), w2)
    if d1.denominator != 1 or d1 != d2 or d1 < 0:
        raise ConsistencyError(
            "wall-degree", f"{chi} on {wall.endpoints}: {d1} from one side, {d2} from the other"
        )
    return int(d1)


def wall_degree_table(fan: Fan) -> list[dict]:
    return [{chi: wall_degree(wall, chi) for chi in fan.ctx.characters} for wall in fan.walls]


@dataclass(frozen=True)
class AmpleData:
    characters: list  # a_T per triangle
    sign: int
    wall_totals: list  # sum_chi wall_degree per wall


def ample_data(fan: Fan, conventions: Conventions = CONVENTIONS) -> AmpleData:
    """Local weights ``a_T = sign * w_T`` of ``det(⊕ L_mu)`` making the
    piecewise linear function strictly convex on every wall."""
    fps = fixed_points(fan)
    totals = []
    for wall in fan.walls:
        total = sum(wall_degree(wall, chi) for chi in fan.ctx.characters)
        if total < 1:
            raise ConsistencyError("ample-convexity", f"wall {wall.endpoints} has total degree 0")
        totals.append(total)
    index = {id(t): i for i, t in enumerate(fan.triangles)}
    sign = None
    for eps in (1, -1):
        ok = True
        for wall in fan.walls:
            a = fps[index[id(wall.sides[0])]].ample_character
            a2 = fps[index[id(wall.sides[1])]].ample_character
            d = _pair(tuple(x - y for x, y in zip(a2, a)), wall.opposite[0])
            if conventions.denominator_sign * eps * d <= 0:
                ok = False
                break
        if ok:
            sign = eps
            break
    if sign is None:
        raise ConsistencyError("ample-convexity", "no sign of det(L) is strictly convex")
    chars = [tuple(sign * x for x in fp.ample_character) for fp in fps]
    return AmpleData(chars, sign, totals)


def fixed_points(fan: Fan) -> list[FixedPointData]:
    if "fixed_points" not in fan.cache:
        fan.cache["fixed_points"] = [_fixed_point(t, fan.ctx) for t in fan.triangles]
    return fan.cache["fixed_points"]


@dataclass
class LocalizedClass:
    """Numerators per fixed point (aligned with ``fan.triangles``)."""

    numerators: list

    def twisted(self, shifts, n: int) -> "LocalizedClass":
        out = []
        for num, a in zip(self.numerators, shifts):
            out.append({tuple(k + n * x for k, x in zip(e, a)): c for e, c in num.items()})
        return LocalizedClass(out)


class KoszulModel:
    """Localization data for one fan under one choice of conventions."""

    def __init__(self, fan: Fan, conventions: Conventions = CONVENTIONS):
        self.fan = fan
        self.ctx = fan.ctx
        self.conventions = conventions
        self.fixed = fixed_points(fan)
        s = conventions.denominator_sign
        self.localizer = Localizer(
            [[tuple(s * x for x in u) for u in fp.dual_basis] for fp in self.fixed]
        )
        self._subset_chars = [
            (S, self.ctx.character_of(_e(S)), _e(S)) for S in SUBSETS
        ]
        self._ample = None

    @property
    def ample(self) -> AmpleData:
        if self._ample is None:
            self._ample = ample_data(self.fan, self.conventions)
        return self._ample

    def fiber(self, mu: Character, i: int) -> tuple:
        f = self.conventions.fiber_sign
        return tuple(f * x for x in self.fixed[i].exponents[mu])

    def psi_class(self, chi: Character) -> LocalizedClass:
        cv = self.conventions
        out = []
        for i in range(len(self.fixed)):
            num: dict = {}
            for S, cs, es in self._subset_chars:
                nu = cs + chi if cv.nu_plus else cs - chi
                fib = self.fiber(nu, i)
                k = tuple(a + cv.koszul_sign * b for a, b in zip(fib, es))
                num[k] = num.get(k, 0) + (-1) ** len(S)
            out.append(num)
        return LocalizedClass(out)

    def euler(self, cls: LocalizedClass, n: int = 0) -> Fraction:
        if n:
            cls = cls.twisted(self.ample.characters, n)
        return self.localizer.value(cls.numerators)

    def pair_with_bundle(self, mu: Character, cls: LocalizedClass) -> Fraction:
        """Euler characteristic of ``L_mu ⊗ cls`` (the Hom from ``L_mu^dual``)."""
        shifted = []
        for i, num in enumerate(cls.numerators):
            g = self.fiber(mu, i)
            shifted.append({tuple(a - b for a, b in zip(e, g)): c for e, c in num.items()})
        return self.localizer.value(shifted)

    def duality_matrix(self) -> list[list[Fraction]]:
        chars = self.ctx.characters
        classes = [self.psi_class(chi) for chi in chars]
        return [[self.pair_with_bundle(mu, c) for c in classes] for mu in chars]


def _e(S) -> tuple:
    return tuple(sum(UNIT[i][j] for i in S) for j in range(3))


def _model(fan: Fan) -> KoszulModel:
    if "koszul_model" not in fan.cache:
        fan.cache["koszul_model"] = KoszulModel(fan)
    return fan.cache["koszul_model"]


def psi_class(chi: Character, fan: Fan) -> LocalizedClass:
    return _model(fan).psi_class(chi)


def euler_characteristic(cls: LocalizedClass, n: int, fan: Fan) -> Fraction:
    if n < 0:
        raise ValueError("twist power must be nonnegative")
    return _model(fan).euler(cls, n)


def duality_check(fan: Fan, conventions: Conventions = CONVENTIONS) -> list[list[Fraction]]:
    """Euler pairing matrix ``(chi(L_mu ⊗ Psi(chi^!)))``; identity when the
    conventions are right.  Rows and columns follow ``ctx.characters``."""
    model = _model(fan) if conventions == CONVENTIONS else KoszulModel(fan, conventions)
    return model.duality_matrix()


def is_identity(m) -> bool:
    return all(x == (i == j) for i, row in enumerate(m) for j, x in enumerate(row))


def scan_conventions(fan: Fan) -> list[Conventions]:
    """Conventions (Koszul sign fixed) whose duality matrix is the identity."""
    good = []
    for f, d, plus in product((1, -1), (1, -1), (True, False)):
        cv = Conventions(f, d, plus)
        if is_identity(KoszulModel(fan, cv).duality_matrix()):
            good.append(cv)
    return good


# --- classification -----------------------------------------------------------


def fit_quadratic(values) -> list[Fraction]:
    """Coefficients ``[c0, c1, c2]`` of the polynomial through p(0), p(1), p(2)."""
    p0, p1, p2 = (Fraction(v) for v in values[:3])
    c2 = (p2 - 2 * p1 + p0) / 2
    c1 = p1 - p0 - c2
    return [p0, c1, c2]


@dataclass
class PsiClassRecord:
    character: Character
    localized_class: LocalizedClass = field(repr=False)
    values: list  # p(n), n in N_RANGE
    coefficients: list  # p(n) = sum c_k n^k
    homological_degree: int
    support_dim: int

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[self.support_dim]


def classify_character(chi: Character, fan: Fan) -> PsiClassRecord:
    if chi.is_trivial:
        raise ValueError("the trivial character is not classified")
    model = _model(fan)
    cls = model.psi_class(chi)
    values = [model.euler(cls, n) for n in N_RANGE]
    coeffs = fit_quadratic(values)
    for n, v in zip(N_RANGE, values):
        if sum(c * n**k for k, c in enumerate(coeffs)) != v:
            raise ConsistencyError(
                "polynomial-fit", f"{chi}: p(n) = {values} is not quadratic in n"
            )
    if values[0] != 0:
        raise ConsistencyError("p0-zero", f"{chi}: p(0) = {values[0]}")
    if not any(coeffs):
        raise ConsistencyError("nonzero-polynomial", f"{chi}: p vanishes identically")
    dim = max(k for k, c in enumerate(coeffs) if c)
    degree = 0 if coeffs[dim] > 0 else -1
    return PsiClassRecord(chi, cls, values, coeffs, degree, dim)


@dataclass
class B0Report:
    r: int
    records: list
    h0: list
    b0: Fraction
    wall_degrees: list = field(repr=False)
    ample_sign: int = 1


def b0_report(fan: Fan, degrees: bool = True) -> B0Report:
    ctx = fan.ctx
    if ctx.r < 2:
        raise ValueError("no nontrivial characters: B0 is undefined for the trivial group")
    records = [classify_character(chi, fan) for chi in ctx.characters if not chi.is_trivial]
    h0 = [rec.character for rec in records if rec.homological_degree == 0]
    table = wall_degree_table(fan) if degrees else []
    return B0Report(
        r=ctx.r,
        records=records,
        h0=h0,
        b0=Fraction(len(h0), ctx.r - 1),
        wall_degrees=table,
        ample_sign=_model(fan).ample.sign,
    )
