"""Exact coefficient rings for quantum homology.

Two kinds of coefficient monoid are supported:

* the single variable ``q`` (degree -2), as a Laurent or positive ring;
* a group ring on a free abelian group with a declared basis, where a
  monomial ``S^A`` (or ``T^A``) has degree ``-2 * <c1, A>``.

Coefficients are :class:`fractions.Fraction`; nothing here ever touches
floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Monomial = tuple
Scalar = Union[int, Fraction]


class AlgebraError(ValueError):
    """Base class for errors raised by the algebra engine."""


class MonoidMismatch(AlgebraError):
    pass


class PositivityError(AlgebraError):
    pass


class MonomialSyntaxError(AlgebraError):
    pass


@dataclass(frozen=True)
class Monoid:
    """A graded free commutative monoid of coefficient monomials.

    ``symbol`` is ``"q"`` for the single-variable ring, otherwise the
    letter used when printing (``"S"`` for ambient classes, ``"T"`` for
    relative ones).  ``pairing[i]`` is the Chern pairing of the i-th basis
    direction, so a monomial has degree ``-2 * sum(pairing[i] * m[i])``.
    """

    symbol: str
    names: tuple
    pairing: tuple
    positive: bool = True

    @classmethod
    def q(cls, positive: bool = False) -> "Monoid":
        return cls("q", ("q",), (1,), positive)

    @classmethod
    def group(cls, names: Iterable[str], pairing: Iterable[int],
              symbol: str = "S", positive: bool = True) -> "Monoid":
        names, pairing = tuple(names), tuple(int(x) for x in pairing)
        if len(names) != len(pairing):
            raise AlgebraError("pairing vector length must match the H2 basis")
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate H2 basis name")
        return cls(symbol, names, pairing, positive)

    @property
    def is_q(self) -> bool:
        return self.symbol == "q"

    @property
    def rank(self) -> int:
        return len(self.names)

    def unit(self) -> Monomial:
        return (0,) * self.rank

    def pair(self, m: Monomial) -> int:
        return sum(a * b for a, b in zip(self.pairing, m))

    def degree(self, m: Monomial) -> int:
        return -2 * self.pair(m)

    def check(self, m: Monomial) -> Monomial:
        if len(m) != self.rank:
            raise AlgebraError(f"monomial {m!r} has wrong length for {self.names}")
        if self.positive:
            if self.is_q and m[0] < 0:
                raise PositivityError(f"negative q-exponent {m[0]} in positive mode")
            if not self.is_q and any(m) and self.pair(m) <= 0:
                raise PositivityError(
                    f"monomial {self.format(m)} has non-positive Chern pairing")
        return m

    def format(self, m: Monomial, named: bool = True) -> str:
        """Render a monomial; the unit monomial renders as ``1``."""
        if not any(m):
            return "1"
        if self.is_q or self.names == (self.symbol,):
            return self.symbol if m[0] == 1 else f"{self.symbol}^{m[0]}"
        if not named:
            return f"{self.symbol}[{','.join(str(x) for x in m)}]"
        parts = []
        for name, e in zip(self.names, m):
            if e == 0:
                continue
            sign = "-" if e < 0 else ("+" if parts else "")
            mag = "" if abs(e) == 1 else str(abs(e))
            parts.append(f"{sign}{mag}{name}")
        return f"{self.symbol}^{{{''.join(parts)}}}"

    def to_json(self, m: Monomial) -> dict:
        return {"q": m[0]} if self.is_q else {"T": list(m)}


_Q_MONO = re.compile(r"^\s*q(?:\s*\^\s*\{?\s*(-?\d+)\s*\}?)?\s*$")
_VEC_MONO = re.compile(r"^\s*[STq]\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*$")
_NAMED_MONO = re.compile(r"^\s*[ST]\s*\^\s*\{(.*)\}\s*$")
_LIN_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*([A-Za-z][A-Za-z0-9_^.']*)\s*")


def parse_monomial(text: str, monoid: Monoid) -> Monomial:
    """Parse ``q^3``, ``T[2,-1,0]`` or a named form like ``T^{2H-E}``."""
    text = text.strip()
    if text == "1":
        return monoid.unit()
    m = _VEC_MONO.match(text)
    if m:
        vec = tuple(int(x) for x in m.group(1).split(",")) if m.group(1) else ()
        return monoid.check(vec)
    if monoid.is_q:
        m = _Q_MONO.match(text)
        if not m:
            raise MonomialSyntaxError(f"cannot parse q-monomial {text!r}")
        return monoid.check((int(m.group(1) or 1),))
    m = _NAMED_MONO.match(text)
    if not m:
        raise MonomialSyntaxError(f"cannot parse group monomial {text!r}")
    return monoid.check(parse_exponent_vector(m.group(1), monoid.names))


def parse_exponent_vector(text: str, names: tuple) -> Monomial:
    """Parse an integer combination of names, e.g. ``2H-2E-E_3``.

    Underscores are ignored so that ``E_3`` and ``E3`` are the same name.
    A parenthesised multiple such as ``2(E1+E2-E4)`` is expanded.
    """
    text = text.replace("_", "").replace(" ", "")
    index = {n.replace("_", ""): i for i, n in enumerate(names)}
    vec = [0] * len(names)
    for mult, inner in _expand_parens(text):
        pos = 0
        while pos < len(inner):
            m = _LIN_TERM.match(inner, pos)
            if not m or m.end() == pos:
                raise MonomialSyntaxError(
                    f"bad exponent expression {text!r} at column {pos + 1}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            name = m.group(3)
            if name not in index:
                raise MonomialSyntaxError(f"unknown class {name!r} in {text!r}")
            vec[index[name]] += mult * sign * coeff
            pos = m.end()
    return tuple(vec)


_PAREN = re.compile(r"([+-]?)(\d*)\(([^()]*)\)")


def _expand_parens(text: str) -> Iterator[tuple]:
    """Split off every ``k(...)`` group; the rest is yielded with multiplier 1."""
    rest = text
    for m in _PAREN.finditer(text):
        mult = (int(m.group(2)) if m.group(2) else 1) * (-1 if m.group(1) == "-" else 1)
        yield mult, m.group(3)
        rest = rest.replace(m.group(0), "", 1)
    if rest:
        yield 1, rest


def normalize(monoid: Monoid, terms) -> tuple:
    """Collect like monomials, drop zeros and sort canonically."""
    acc: dict = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for mono, c in items:
        mono = tuple(mono)
        acc[mono] = acc.get(mono, 0) + Fraction(c)
    for mono, c in acc.items():
        if c:
            monoid.check(mono)
    return tuple(sorted((m, c) for m, c in acc.items() if c))


class CoeffElement:
    """An immutable finite formal sum ``sum c_m * m`` over a monoid."""

    __slots__ = ("monoid", "terms")

    def __init__(self, monoid: Monoid, terms=()):
        object.__setattr__(self, "monoid", monoid)
        object.__setattr__(self, "terms", normalize(monoid, terms))

    def __setattr__(self, key, value):
        raise AttributeError("CoeffElement is immutable")

    @classmethod
    def scalar(cls, monoid: Monoid, c: Scalar) -> "CoeffElement":
        return cls(monoid, [(monoid.unit(), c)])

    @classmethod
    def monomial(cls, monoid: Monoid, m: Monomial, c: Scalar = 1) -> "CoeffElement":
        return cls(monoid, [(tuple(m), c)])

    def _coerce(self, other) -> "CoeffElement":
        if isinstance(other, CoeffElement):
            if other.monoid != self.monoid:
                raise MonoidMismatch(
                    f"cannot combine {self.monoid.symbol}{self.monoid.names} "
                    f"with {other.monoid.symbol}{other.monoid.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return CoeffElement.scalar(self.monoid, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CoeffElement(self.monoid, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return CoeffElement(self.monoid, [(m, -c) for m, c in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                out.append((tuple(a + b for a, b in zip(m1, m2)), c1 * c2))
        return CoeffElement(self.monoid, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise AlgebraError("negative power")
        result = CoeffElement.scalar(self.monoid, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CoeffElement.scalar(self.monoid, other)
        if not isinstance(other, CoeffElement):
            return NotImplemented
        return self.monoid == other.monoid and self.terms == other.terms

    def __hash__(self):
        return hash((self.monoid, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, m: Monomial) -> Fraction:
        for mono, c in self.terms:
            if mono == tuple(m):
                return c
        return Fraction(0)

    def constant(self) -> Fraction:
        return self.coefficient(self.monoid.unit())

    def degrees(self) -> set:
        return {self.monoid.degree(m) for m, _ in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        """Common degree of all terms; ``None`` for zero, error if mixed."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise AlgebraError(f"{self} is not homogeneous")
        return degs.pop()

    def coefficient_sum(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))

    def format(self, named: bool = True) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.terms:
            mono = self.monoid.format(m, named)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{mono}" if mag.denominator == 1 else f"({mag}){mono}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"CoeffElement({self.format()!r})"


def parse_coeff(text: str, monoid: Monoid) -> CoeffElement:
    """Parse a sum like ``T^{2E} + 4T^{H-E}`` or ``5q^2 - 1``."""
    s = text.replace(" ", "")
    terms = []
    pos = 0
    pattern = re.compile(
        r"([+-]?)(\d+(?:/\d+)?)?\*?(q(?:\^\{?-?\d+\}?)?|[ST]\[[-\d,]*\]|[ST]\^\{[^}]*\})?")
    while pos < len(s):
        m = pattern.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise MonomialSyntaxError(
                f"bad coefficient expression {text!r} at column {pos + 1}")
        sign = -1 if m.group(1) == "-" else 1
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        mono = parse_monomial(m.group(3), monoid) if m.group(3) else monoid.unit()
        terms.append((mono, sign * c))
        pos = m.end()
    return CoeffElement(monoid, terms)


def format_fraction(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
