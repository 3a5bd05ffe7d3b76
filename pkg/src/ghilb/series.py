"""Exact evaluation at t = (1,1,1) of sums of localized torus characters.

Each fixed point contributes ``sum_k c_k t^k / prod_i (1 - t^{d_i})``.  After
substituting ``t = (s^c1, s^c2, s^c3)`` for a generic integer vector ``c`` and
``s = 1 + h``, a contribution is ``h^-3`` times a power series in ``h``; the
value of the (pole-free) total at ``s = 1`` is the sum of the ``h^3``
coefficients, and the lower coefficients must cancel.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count

from .errors import ConsistencyError

__all__ = ["Localizer", "binomial_series", "inverse_series", "evaluate_at_one", "generic_direction"]

POLE_ORDER = 3


def _gbinom(k: int, j: int) -> Fraction:
    num = Fraction(1)
    for i in range(j):
        num *= k - i
        num /= i + 1
    return num


def binomial_series(k: int, order: int = POLE_ORDER) -> list[Fraction]:
    """Coefficients of (1+h)^k up to h^order (any integer k)."""
    return [_gbinom(k, j) for j in range(order + 1)]


def inverse_series(a: list[Fraction]) -> list[Fraction]:
    if a[0] == 0:
        raise ZeroDivisionError("series has no constant term")
    out = [Fraction(1) / a[0]]
    for n in range(1, len(a)):
        s = sum(a[j] * out[n - j] for j in range(1, n + 1))
        out.append(-s / a[0])
    return out


def _mul(a, b):
    n = len(a)
    return [sum(a[j] * b[i - j] for j in range(i + 1)) for i in range(n)]


def _denominator_series(d: int, order: int) -> list[Fraction]:
    # h / (1 - (1+h)^d) = -1 / sum_{j>=1} binom(d, j) h^{j-1}
    base = [_gbinom(d, j) for j in range(1, order + 2)]
    return [-x for x in inverse_series(base)]


def generic_direction(vectors) -> tuple[int, int, int]:
    """First ``(1, k, k^2)`` (k = 2, 3, ...) pairing nonzero with every vector."""
    vectors = [tuple(v) for v in vectors]
    for k in count(2):
        c = (1, k, k * k)
        if all(sum(a * b for a, b in zip(v, c)) != 0 for v in vectors):
            return c


class Localizer:
    """Fixed denominators, many numerators.

    ``denominators[i]`` is the triple of exponent vectors ``d`` of the factors
    ``1 - t^d`` at fixed point ``i``.  The direction ``c`` is chosen once.
    """

    def __init__(self, denominators, direction=None):
        self.denominators = [tuple(tuple(d) for d in dens) for dens in denominators]
        if direction is None:
            direction = generic_direction(d for dens in self.denominators for d in dens)
        self.direction = direction
        self._q = []
        for dens in self.denominators:
            q = [Fraction(1)] + [Fraction(0)] * POLE_ORDER
            for d in dens:
                dc = _dot(d, direction)
                if dc == 0:
                    raise ValueError(f"direction {direction} is degenerate for {d}")
                q = _mul(q, _denominator_series(dc, POLE_ORDER))
            self._q.append(q)

    def value(self, numerators) -> Fraction:
        """Value at t = 1 of ``sum_i numerators[i] / prod(1 - t^d)``.

        Each numerator maps integer exponent triples to coefficients.
        Raises ConsistencyError if the sum has a pole at t = 1.
        """
        c = self.direction
        total = [Fraction(0)] * (POLE_ORDER + 1)
        for numerator, q in zip(numerators, self._q, strict=True):
            num = [Fraction(0)] * (POLE_ORDER + 1)
            for k, coeff in numerator.items():
                if coeff:
                    for j, b in enumerate(binomial_series(_dot(k, c))):
                        num[j] += coeff * b
            for j, x in enumerate(_mul(num, q)):
                total[j] += x
        if any(total[:POLE_ORDER]):
            raise ConsistencyError(
                "compact-support", f"pole at t = 1: coefficients {total[:POLE_ORDER]}"
            )
        return total[POLE_ORDER]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def evaluate_at_one(contributions, direction=None) -> Fraction:
    """Value at t = 1 of a sum of ``(numerator, denominators)`` contributions."""
    contributions = list(contributions)
    loc = Localizer([dens for _, dens in contributions], direction)
    return loc.value([num for num, _ in contributions])
