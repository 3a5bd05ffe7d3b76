"""Independent checks of the fan and of the duality pairing on small groups.

These share only the group-lattice primitives with the main pipeline: the
sampling oracle minimizes every class pointwise by brute force, and the
duality oracle rebuilds the localized classes and sums them as honest
rational functions (polynomial lcm and exact division) instead of series.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

import numpy as np
import sympy

from .fan import Fan
from .lattice import LatticeContext, det3

__all__ = [
    "OracleConfig",
    "SamplingReport",
    "sampling_fan_oracle",
    "brute_duality_oracle",
    "DualityComparison",
]

_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067)


@dataclass(frozen=True)
class OracleConfig:
    seed: int = 0
    sample_count: int = 1000
    r_cap: int = 15


@dataclass
class SamplingReport:
    samples: int = 0
    resampled: int = 0
    mismatches: list = field(default_factory=list)  # (point, reason)
    ggraphs_seen: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


class _BruteMinimizer:
    def __init__(self, ctx: LatticeContext):
        r = ctx.r
        box = list(product(range(r), repeat=3))
        labels = [ctx.character_of(e) for e in box]
        order = sorted(range(len(box)), key=lambda i: (labels[i], box[i]))
        self.box = np.array([box[i] for i in order], dtype=np.int64)
        self.chars = []
        starts = []
        for pos, i in enumerate(order):
            if not self.chars or labels[i] != self.chars[-1]:
                self.chars.append(labels[i])
                starts.append(pos)
        self.starts = np.array(starts + [len(box)])

    def minimizers(self, scaled_point):
        """Per class: (lexicographically first minimizer, unique?)."""
        vals = self.box @ np.asarray(scaled_point, dtype=np.int64)
        out = {}
        for k, chi in enumerate(self.chars):
            a, b = self.starts[k], self.starts[k + 1]
            seg = vals[a:b]
            hits = np.flatnonzero(seg == seg.min())
            # rows within a class are in lexicographic order
            out[chi] = (tuple(int(x) for x in self.box[a + hits[0]]), len(hits) == 1)
        return out


def _containment(tri, p) -> int:
    # Cramer's rule for p = sum b_i v_i
    m = [v.coords for v in tri.vertices]
    d = det3(m)
    b = [Fraction(det3([p if k == i else m[k] for k in range(3)])) / d for i in range(3)]
    if all(x > 0 for x in b):
        return 1
    if all(x >= 0 for x in b):
        return 0
    return -1


def sampling_fan_oracle(
    ctx: LatticeContext, fan: Fan, config: OracleConfig = OracleConfig()
) -> SamplingReport:
    """Random interior points: exactly one triangle contains each, and the
    pointwise minimal monomials agree with that triangle's G-graph."""
    if ctx.r > config.r_cap:
        raise ValueError(f"r = {ctx.r} exceeds the oracle cap {config.r_cap}")
    rng = random.Random(config.seed)
    brute = _BruteMinimizer(ctx)
    denom = next(p for p in _PRIMES if ctx.r % p)
    report = SamplingReport()
    seen = set()
    while report.samples < config.sample_count:
        a = rng.randint(1, denom - 2)
        b = rng.randint(1, denom - 1 - a)
        point = (a, b, denom - a - b)
        mins = brute.minimizers(point)
        if not all(unique for _, unique in mins.values()):
            report.resampled += 1
            continue
        frac = [Fraction(x, denom) for x in point]
        where = [_containment(t, frac) for t in fan.triangles]
        if 0 in where:
            report.resampled += 1
            continue
        report.samples += 1
        inside = [t for t, w in zip(fan.triangles, where) if w == 1]
        if len(inside) != 1:
            report.mismatches.append((tuple(frac), f"contained in {len(inside)} triangles"))
            continue
        (tri,) = inside
        seen.add(tri.vertices)
        for chi, (e, _) in mins.items():
            if tri.ggraph[chi] != e:
                report.mismatches.append(
                    (tuple(frac), f"{chi}: pointwise {e}, fan {tri.ggraph[chi]}")
                )
    report.ggraphs_seen = len(seen)
    return report


# --- duality by rational functions --------------------------------------------

_s = sympy.Symbol("s")


@dataclass
class DualityComparison:
    matrix: list
    disagreements: list  # (mu, chi, oracle value, pipeline value)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def _direction(vectors):
    # smallest-norm integer vector pairing nonzero with everything
    for bound in range(1, 50):
        for c in sorted(product(range(-bound, bound + 1), repeat=3), key=lambda c: sum(map(abs, c))):
            if all(sum(a * b for a, b in zip(v, c)) for v in vectors):
                return c
    raise RuntimeError("no generic direction")


def brute_duality_oracle(
    ctx: LatticeContext, fan: Fan, pipeline=None, config: OracleConfig = OracleConfig()
) -> DualityComparison:
    """Recompute ``chi(L_mu ⊗ Psi(chi^!))`` by exact rational-function sums.

    ``pipeline`` is the matrix from the main path, compared entrywise when
    given.
    """
    if ctx.r > config.r_cap:
        raise ValueError(f"r = {ctx.r} exceeds the oracle cap {config.r_cap}")
    chars = ctx.characters
    duals = []
    for tri in fan.triangles:
        vm = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in v.coords]
                           for v in tri.vertices])
        inv = vm.T.inv()  # rows: u_i with <u_i, v_j> = delta_ij
        duals.append([tuple(-int(inv[i, j]) for j in range(3)) for i in range(3)])
    c = _direction([u for d in duals for u in d])
    dens = []
    for d in duals:
        poly = sympy.Poly(1, _s, domain="ZZ")
        shift = 0
        for u in d:
            k = sum(a * b for a, b in zip(u, c))
            # 1 - s^k, with s^-|k| cleared into ``shift``
            if k > 0:
                poly *= sympy.Poly(1 - _s**k, _s)
            else:
                poly *= sympy.Poly(_s ** (-k) - 1, _s)
                shift += -k
        dens.append((poly, shift))
    common = dens[0][0]
    for p, _ in dens[1:]:
        common = common.lcm(p)
    cofactors = [common.exquo(p) for p, _ in dens]
    koszul = [
        (S, tuple(int(i in S) for i in range(3)))
        for n in range(4)
        for S in combinations(range(3), n)
    ]

    def entry(mu, chi) -> Fraction:
        per_triangle = []
        for tri, (_, shift) in zip(fan.triangles, dens):
            g = tri.ggraph
            t = {}
            for S, eS in koszul:
                nu = ctx.character_of(eS) + chi
                k = tuple(a - b - m for a, b, m in zip(g[nu], eS, g[mu]))
                deg = sum(a * b for a, b in zip(k, c)) + shift
                t[deg] = t.get(deg, 0) + (-1) ** len(S)
            per_triangle.append(t)
        lo = min(d for t in per_triangle for d in t)
        numer = sympy.Poly(0, _s, domain="ZZ")
        for t, cof in zip(per_triangle, cofactors):
            numer += sympy.Poly.from_dict({(d - lo,): v for d, v in t.items()}, _s, domain="ZZ") * cof
        q, rem = numer.div(common)
        if not rem.is_zero:
            raise ArithmeticError(f"({mu}, {chi}): sum is not a Laurent polynomial")
        # s^lo * q(s) at s = 1
        return Fraction(str(q.eval(1)))

    matrix = [[entry(mu, chi) for chi in chars] for mu in chars]
    bad = []
    if pipeline is not None:
        for i, mu in enumerate(chars):
            for j, chi in enumerate(chars):
                if pipeline[i][j] != matrix[i][j]:
                    bad.append((mu, chi, matrix[i][j], pipeline[i][j]))
    return DualityComparison(matrix, bad)
