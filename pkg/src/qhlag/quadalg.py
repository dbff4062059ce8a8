"""Quadratic algebras ``Z[x]/(x^2 - sigma x - tau)`` and their discriminants.

Two presentations describe isomorphic algebras exactly when their
discriminants agree; ``normal_form`` picks the canonical representative
of each orbit under ``x -> x + r`` and ``x -> -x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class QuadraticAlgebraPresentation:
    """``x^2 = sigma x + tau``.  Rational entries are allowed for the variant over Q."""

    sigma: Number
    tau: Number

    @property
    def is_integral(self) -> bool:
        return all(Fraction(v).denominator == 1 for v in (self.sigma, self.tau))

    def __iter__(self):
        yield self.sigma
        yield self.tau


def delta(a: QuadraticAlgebraPresentation) -> Number:
    return a.sigma * a.sigma + 4 * a.tau


def change_lift(a: QuadraticAlgebraPresentation, r: Number) -> QuadraticAlgebraPresentation:
    """Presentation in the generator ``y = x - r``."""
    return QuadraticAlgebraPresentation(a.sigma + 2 * r, a.tau - a.sigma * r - r * r)


def negate_generator(a: QuadraticAlgebraPresentation) -> QuadraticAlgebraPresentation:
    return QuadraticAlgebraPresentation(-a.sigma, a.tau)


def isomorphic(a: QuadraticAlgebraPresentation, b: QuadraticAlgebraPresentation) -> bool:
    return delta(a) == delta(b)


def normal_form(a: QuadraticAlgebraPresentation) -> QuadraticAlgebraPresentation:
    """``(0, D/4)`` if ``D = 0 mod 4``, else ``(1, (D-1)/4)``.

    For rational presentations the second branch is only taken when
    ``D - 1`` is divisible by 4 in the integers; otherwise ``(0, D/4)``.
    """
    d = delta(a)
    if Fraction(d).denominator == 1 and int(d) % 4 == 1:
        return QuadraticAlgebraPresentation(1, (int(d) - 1) // 4)
    if Fraction(d).denominator == 1 and int(d) % 4 == 0:
        return QuadraticAlgebraPresentation(0, int(d) // 4)
    return QuadraticAlgebraPresentation(0, Fraction(d) / 4)
