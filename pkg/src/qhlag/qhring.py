"""Quantum homology rings given by finite multiplication tables.

A :class:`RingPresentation` is closed-world: the product of two basis
classes is whatever its table says, and nothing else.  Only even-degree
basis classes are allowed, so the product is commutative and no Koszul
signs ever appear.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .exactalg import (
    AlgebraError,
    CoeffElement,
    Monoid,
    MonoidMismatch,
    format_fraction,
    parse_monomial,
)


class PresentationError(AlgebraError):
    """Raised when a ring-presentation document is malformed."""


class UndefinedProduct(AlgebraError):
    """Raised when a product is not covered by a (partial) table."""


class ExpressionError(AlgebraError):
    """A class expression failed to parse; ``column`` is 1-based."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} in {text!r} at column {column}")
        self.text = text
        self.column = column


@dataclass(frozen=True)
class BasisClass:
    name: str
    degree: int


@dataclass(frozen=True, eq=False)
class RingPresentation:
    name: str
    dimension: int
    minimal_chern: Optional[int]
    basis: tuple
    unit: int
    point: int
    monoid: Monoid
    table: dict = field(repr=False)
    c1_dual_terms: Optional[tuple] = field(default=None, repr=False)
    notes: tuple = ()

    def __post_init__(self):
        names = [b.name for b in self.basis]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate basis names")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    # -- lookup -----------------------------------------------------------
    @property
    def n(self) -> int:
        """Complex dimension, i.e. the dimension of a Lagrangian."""
        return self.dimension // 2

    @property
    def names(self) -> tuple:
        return tuple(b.name for b in self.basis)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown basis class {name!r} in {self.name}") from None

    def degree_of(self, i: int) -> int:
        return self.basis[i].degree

    def entry(self, i: int, j: int):
        key = (i, j) if i <= j else (j, i)
        try:
            return self.table[key]
        except KeyError:
            raise UndefinedProduct(
                f"product {self.basis[key[0]].name}*{self.basis[key[1]].name} "
                f"is not defined in {self.name}") from None

    def has_entry(self, i: int, j: int) -> bool:
        return ((i, j) if i <= j else (j, i)) in self.table

    # -- element construction -------------------------------------------
    def element(self, terms=()) -> "QHElement":
        return QHElement(self, terms)

    def zero(self) -> "QHElement":
        return QHElement(self, ())

    def basis_element(self, name_or_index, coeff=1, mono=None) -> "QHElement":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        mono = self.monoid.unit() if mono is None else tuple(mono)
        return QHElement(self, [((i, mono), coeff)])

    @property
    def unit_element(self) -> "QHElement":
        return self.basis_element(self.unit)

    @property
    def point_element(self) -> "QHElement":
        return self.basis_element(self.point)

    @property
    def c1_dual(self) -> Optional["QHElement"]:
        if self.c1_dual_terms is None:
            return None
        return QHElement(self, self.c1_dual_terms)

    def parse(self, text: str) -> "QHElement":
        return parse_element(self, text)

    def q_power(self, k: int) -> tuple:
        if not self.monoid.is_q:
            raise MonoidMismatch(f"{self.name} is not a single-q ring")
        return (k,)

    def mul(self, a: "QHElement", b: "QHElement") -> "QHElement":
        return mul(self, a, b)


class QHElement:
    """A normalized finite sum of ``coeff * monomial * basis_class``.

    ``terms`` is a sorted tuple of ``((class_index, monomial), Fraction)``.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingPresentation, terms=()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (k, mono), c in items:
            key = (int(k), tuple(mono))
            acc[key] = acc.get(key, 0) + Fraction(c)
        for (k, mono), c in acc.items():
            if c:
                if not 0 <= k < len(ring.basis):
                    raise AlgebraError(f"basis index {k} out of range")
                ring.monoid.check(mono)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(sorted((key, c) for key, c in acc.items() if c)))

    def __setattr__(self, key, value):
        raise AttributeError("QHElement is immutable")

    def _check(self, other: "QHElement"):
        if not isinstance(other, QHElement):
            return NotImplemented
        if other.ring is not self.ring and (
                other.ring.names != self.ring.names or other.ring.monoid != self.ring.monoid):
            raise MonoidMismatch(f"elements of {self.ring.name} and {other.ring.name}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return QHElement(self.ring, self.terms + other.terms)

    def __neg__(self):
        return QHElement(self.ring, [(key, -c) for key, c in self.terms])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QHElement":
        """Multiply by a rational scalar or by a coefficient-ring element."""
        if isinstance(c, CoeffElement):
            if c.monoid != self.ring.monoid:
                raise MonoidMismatch("coefficient from a different monoid")
            out = []
            for (k, m1), c1 in self.terms:
                for m2, c2 in c.terms:
                    out.append(((k, tuple(a + b for a, b in zip(m1, m2))), c1 * c2))
            return QHElement(self.ring, out)
        c = Fraction(c)
        return QHElement(self.ring, [(key, c * v) for key, v in self.terms])

    def shift(self, mono) -> "QHElement":
        """Multiply by a single monomial (e.g. ``q^k``)."""
        mono = tuple(mono)
        return QHElement(self.ring, [((k, tuple(a + b for a, b in zip(m, mono))), c)
                                     for (k, m), c in self.terms])

    def __mul__(self, other):
        if isinstance(other, QHElement):
            return mul(self.ring, self, other)
        if isinstance(other, (int, Fraction, CoeffElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CoeffElement)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, QHElement):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, self.terms))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------
    def component(self, k) -> CoeffElement:
        if isinstance(k, str):
            k = self.ring.index(k)
        return CoeffElement(self.ring.monoid, [(m, c) for (i, m), c in self.terms if i == k])

    def components(self) -> dict:
        out: dict = {}
        for (k, m), c in self.terms:
            out.setdefault(k, []).append((m, c))
        return {k: CoeffElement(self.ring.monoid, v) for k, v in out.items()}

    def coefficient(self, k, mono=None) -> Fraction:
        if isinstance(k, str):
            k = self.ring.index(k)
        mono = self.ring.monoid.unit() if mono is None else tuple(mono)
        for (i, m), c in self.terms:
            if i == k and m == mono:
                return c
        return Fraction(0)

    def degrees(self) -> set:
        return {self.ring.degree_of(k) + self.ring.monoid.degree(m) for (k, m), _ in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise AlgebraError(f"{self} is not homogeneous")
        return degs.pop()

    def is_classical(self) -> bool:
        unit = self.ring.monoid.unit()
        return all(m == unit for (_, m), _ in self.terms)

    def class_vector(self) -> list:
        """Coefficients per basis class with the coefficient monomials forgotten."""
        vec = [Fraction(0)] * len(self.ring.basis)
        for (k, _), c in self.terms:
            vec[k] += c
        return vec

    def format(self, named: bool = True) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, coeff in sorted(self.components().items()):
            name = self.ring.basis[k].name
            if len(coeff) == 1:
                (m, c), = coeff.terms
                mono = self.ring.monoid.format(m, named)
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = name if mag == 1 else (f"{mag}{name}" if mag.denominator == 1
                                              else f"({mag}){name}")
                if mono != "1":
                    body += f" {mono}" if not self.ring.monoid.is_q else mono
                pieces.append((sign, body))
            else:
                pieces.append(("+", f"{name}({coeff.format(named)})"))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"QHElement({self.ring.name}: {self.format()})"

    def to_json(self) -> list:
        return [{"class": self.ring.basis[k].name, "coeff": format_fraction(c),
                 "monomial": self.ring.monoid.to_json(m)} for (k, m), c in self.terms]


# -- the product ---------------------------------------------------------

def mul(ring: RingPresentation, a: QHElement, b: QHElement) -> QHElement:
    """Bilinear extension of the quantum multiplication table."""
    for x in (a, b):
        if x.ring.names != ring.names or x.ring.monoid != ring.monoid:
            raise MonoidMismatch(f"element does not belong to {ring.name}")
    acc: dict = {}
    for (i, m1), c1 in a.terms:
        for (j, m2), c2 in b.terms:
            c12 = c1 * c2
            base = tuple(x + y for x, y in zip(m1, m2))
            for (k, m3), c3 in ring.entry(i, j):
                key = (k, tuple(x + y for x, y in zip(base, m3)))
                acc[key] = acc.get(key, 0) + c12 * c3
    return QHElement(ring, acc)


def pow(ring: RingPresentation, a: QHElement, k: int) -> QHElement:  # noqa: A001
    if k < 0:
        raise AlgebraError("negative power")
    result = ring.unit_element
    for _ in range(k):
        result = mul(ring, result, a)
    return result


def classical_part(a: QHElement) -> QHElement:
    """The part of ``a`` carried by the unit coefficient monomial."""
    unit = a.ring.monoid.unit()
    return QHElement(a.ring, [(key, c) for key, c in a.terms if key[1] == unit])


def intersection_number(ring: RingPresentation, a: QHElement, b: QHElement) -> Fraction:
    """Classical intersection number of two complementary-degree classes."""
    if not (a.is_classical() and b.is_classical()):
        raise AlgebraError("intersection number needs classical arguments")
    da, db = a.degree(), b.degree()
    if da is None or db is None:
        return Fraction(0)
    if da + db != ring.dimension:
        raise AlgebraError(
            f"degree mismatch: {da} + {db} != {ring.dimension} for intersection number")
    return classical_part(mul(ring, a, b)).coefficient(ring.point)


# -- class expressions -----------------------------------------------------

_NAME = r"[A-Za-z][A-Za-z0-9_^.']*"
_MONO = r"q(?:\^\{-?\d+\}|\^\d+)?|[STq]\[[-\d,]*\]|[ST]\^\{[^}]*\}"
_TERM = re.compile(
    r"(?P<sign>[+-])?(?P<coeff>\d+(?:/\d+)?)?\*?(?P<name>" + _NAME + r")"
    r"(?:\*?(?P<mono>" + _MONO + r"))?")


@lru_cache(maxsize=64)
def _term_pattern(names: tuple):
    """Term regex whose name alternative is exactly one of ``names``."""
    alts = "|".join(re.escape(n) for n in sorted(names, key=len, reverse=True))
    return re.compile(r"(?P<sign>[+-])?(?P<coeff>\d+(?:/\d+)?)?\*?(?P<name>" + alts + r")"
                      r"(?:\*?(?P<mono>" + _MONO + r"))?(?![A-Za-z0-9_^.'])")


def parse_element(ring: RingPresentation, text: str) -> QHElement:
    """Parse a linear combination of basis names, e.g. ``2H-E1-E2-E3``.

    A term may carry a coefficient monomial: ``3uq^2`` or ``2u*q^2``.
    """
    terms = []
    pos = 0
    glued = re.search(r"[A-Za-z_][A-Za-z0-9_]*\s+([A-Za-z0-9])", text)
    if glued:
        raise ExpressionError("expected '+' or '-'", text, glued.start(1) + 1)
    stripped = text.replace(" ", "")
    # keep a map back to the original column for error messages
    cols = [i for i, ch in enumerate(text) if ch != " "]
    if not stripped:
        raise ExpressionError("empty expression", text, 1)
    pattern = _term_pattern(ring.names)
    while pos < len(stripped):
        m = pattern.match(stripped, pos)
        if not m:
            g = _TERM.match(stripped, pos)
            if not g or g.end() == pos:
                bad = re.compile(r"[+-]?\d*").match(stripped, pos).end()
                bad = min(bad, len(stripped) - 1)
                raise ExpressionError("unexpected character", text, cols[bad] + 1)
            raise ExpressionError(f"unknown class {g.group('name')!r}", text,
                                  cols[g.start("name")] + 1)
        if pos > 0 and not m.group("sign"):
            raise ExpressionError("expected '+' or '-'", text, cols[pos] + 1)
        name = m.group("name")
        mono_txt = m.group("mono")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        try:
            mono = (parse_monomial(mono_txt, ring.monoid) if mono_txt
                    else ring.monoid.unit())
        except AlgebraError as exc:
            raise ExpressionError(str(exc), text, cols[m.start("mono")] + 1) from None
        terms.append(((ring.index(name), mono), sign * coeff))
        pos = m.end()
    return QHElement(ring, terms)


# -- presentation files ----------------------------------------------------

def _parse_coeff_value(value, where: str) -> Fraction:
    try:
        if isinstance(value, bool):
            raise TypeError
        if isinstance(value, (int, str)):
            return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        pass
    raise PresentationError(f"bad coefficient {value!r} in {where}")


def _parse_monomial_json(value, monoid: Monoid, where: str) -> tuple:
    if value is None:
        return monoid.unit()
    if not isinstance(value, dict) or len(value) != 1:
        raise PresentationError(f"bad monomial {value!r} in {where}")
    (key, val), = value.items()
    if monoid.is_q:
        if key != "q" or not isinstance(val, int):
            raise PresentationError(f"expected {{'q': k}} monomial in {where}")
        return (val,)
    if key not in ("T", "S") or not isinstance(val, list) or len(val) != monoid.rank:
        raise PresentationError(
            f"expected {{'T': [{monoid.rank} ints]}} monomial in {where}")
    return tuple(int(x) for x in val)


def parse_ring(document) -> RingPresentation:
    """Build and validate a presentation from a JSON document.

    ``document`` may be a parsed dict, a JSON string, or a path.
    """
    if isinstance(document, Path) or (isinstance(document, str)
                                      and not document.lstrip().startswith("{")):
        document = json.loads(Path(document).read_text())
    elif isinstance(document, str):
        document = json.loads(document)
    if not isinstance(document, dict):
        raise PresentationError("presentation must be a JSON object")

    for key in ("name", "dimension", "basis", "unit", "point", "table"):
        if key not in document:
            raise PresentationError(f"missing field {key!r}")
    name = str(document["name"])
    dim = document["dimension"]
    if not isinstance(dim, int) or dim <= 0 or dim % 2:
        raise PresentationError(f"dimension must be a positive even integer, got {dim!r}")

    cm = document.get("minimal_chern")
    if cm in (None, "inf", "infinity"):
        cm = None
    elif not isinstance(cm, int) or cm <= 0:
        raise PresentationError(f"minimal_chern must be a positive integer or 'inf'")

    mode = document.get("coefficient_mode", "q")
    if mode == "q":
        monoid = Monoid.q(positive=bool(document.get("positive", False)))
    elif isinstance(mode, dict) and "group_ring" in mode:
        g = mode["group_ring"]
        try:
            monoid = Monoid.group(g["h2_basis"], g["c1_pairing"], symbol=g.get("symbol", "S"),
                                  positive=bool(g.get("positive", True)))
        except (KeyError, TypeError) as exc:
            raise PresentationError(f"bad group_ring mode: {exc}") from None
    else:
        raise PresentationError(f"unknown coefficient_mode {mode!r}")

    basis = []
    for b in document["basis"]:
        try:
            bname, bdeg = str(b["name"]), b["degree"]
        except (KeyError, TypeError):
            raise PresentationError(f"bad basis entry {b!r}") from None
        if not isinstance(bdeg, int) or bdeg < 0 or bdeg > dim:
            raise PresentationError(f"basis class {bname!r} has invalid degree {bdeg!r}")
        if bdeg % 2:
            raise PresentationError(
                f"basis class {bname!r} has odd degree {bdeg}; only even classes are supported")
        if not re.fullmatch(_NAME, bname):
            raise PresentationError(f"invalid basis name {bname!r}")
        basis.append(BasisClass(bname, bdeg))
    names = [b.name for b in basis]
    if len(set(names)) != len(names):
        raise PresentationError("duplicate basis names")
    index = {n: i for i, n in enumerate(names)}

    def idx(n, where):
        if n not in index:
            raise PresentationError(f"unknown class {n!r} in {where}")
        return index[n]

    unit = idx(document["unit"], "unit")
    point = idx(document["point"], "point")
    if basis[unit].degree != dim:
        raise PresentationError(f"unit class {basis[unit].name!r} must have degree {dim}")
    if basis[point].degree != 0:
        raise PresentationError(f"point class {basis[point].name!r} must have degree 0")

    table: dict = {}
    for entry in document["table"]:
        try:
            left, right, result = entry["left"], entry["right"], entry["result"]
        except (KeyError, TypeError):
            raise PresentationError(f"bad table entry {entry!r}") from None
        where = f"entry ({left},{right})"
        i, j = idx(left, where), idx(right, where)
        key = (i, j) if i <= j else (j, i)
        if key in table:
            raise PresentationError(f"duplicate pair ({left},{right})")
        target = basis[i].degree + basis[j].degree - dim
        terms = []
        for t in result:
            try:
                k = idx(t["class"], where)
                c = _parse_coeff_value(t.get("coeff", 1), where)
                m = _parse_monomial_json(t.get("monomial"), monoid, where)
            except TypeError:
                raise PresentationError(f"bad result term {t!r} in {where}") from None
            if basis[k].degree + monoid.degree(m) != target:
                raise PresentationError(f"inhomogeneous entry ({left},{right})")
            terms.append(((k, m), c))
        table[key] = _freeze_terms(terms)

    c1_terms = None
    if document.get("c1_dual"):
        c1_terms = _parse_linear_combination(document["c1_dual"], index, monoid)
        for (k, _), _c in c1_terms:
            if basis[k].degree != dim - 2:
                raise PresentationError("c1_dual must combine degree-(2n-2) classes")

    notes = document.get("notes", ())
    if isinstance(notes, str):
        notes = (notes,)
    return RingPresentation(name, dim, cm, tuple(basis), unit, point, monoid, table,
                            c1_terms, tuple(notes))


def _freeze_terms(terms) -> tuple:
    acc: dict = {}
    for key, c in terms:
        acc[key] = acc.get(key, 0) + Fraction(c)
    return tuple(sorted((key, c) for key, c in acc.items() if c))


def _parse_linear_combination(text: str, index: dict, monoid: Monoid) -> tuple:
    pos = 0
    s = text.replace(" ", "")
    terms = []
    while pos < len(s):
        m = re.compile(r"([+-])?(\d*)(" + _NAME + r")").match(s, pos)
        if not m or m.end() == pos or m.group(3) not in index:
            raise PresentationError(f"bad linear combination {text!r} at column {pos + 1}")
        sign = -1 if m.group(1) == "-" else 1
        terms.append(((index[m.group(3)], monoid.unit()), sign * int(m.group(2) or 1)))
        pos = m.end()
    return _freeze_terms(terms)


def build_ring(name: str, dimension: int, minimal_chern, basis: Iterable, unit: str,
               point: str, table: dict, monoid: Optional[Monoid] = None,
               c1_dual: Optional[str] = None, notes=()) -> RingPresentation:
    """Programmatic constructor; runs the same checks as :func:`parse_ring`.

    ``table`` maps ``(left_name, right_name)`` to a list of
    ``(class_name, coeff, monomial_tuple)``.
    """
    monoid = monoid or Monoid.q()
    doc = {
        "name": name,
        "dimension": dimension,
        "minimal_chern": minimal_chern,
        "coefficient_mode": "q" if monoid.is_q else {"group_ring": {
            "h2_basis": list(monoid.names), "c1_pairing": list(monoid.pairing),
            "symbol": monoid.symbol, "positive": monoid.positive}},
        "positive": monoid.positive,
        "basis": [{"name": b, "degree": d} for b, d in basis],
        "unit": unit,
        "point": point,
        "c1_dual": c1_dual,
        "notes": list(notes),
        "table": [{"left": l, "right": r,
                   "result": [{"class": k, "coeff": format_fraction(c),
                               "monomial": monoid.to_json(m)} for k, c, m in res]}
                  for (l, r), res in table.items()],
    }
    return parse_ring(doc)


def ring_to_document(ring: RingPresentation) -> dict:
    """Serialize a presentation back to the JSON file format."""
    monoid = ring.monoid
    doc = {
        "name": ring.name,
        "dimension": ring.dimension,
        "minimal_chern": ring.minimal_chern if ring.minimal_chern is not None else "inf",
        "coefficient_mode": "q" if monoid.is_q else {"group_ring": {
            "h2_basis": list(monoid.names), "c1_pairing": list(monoid.pairing)}},
        "basis": [{"name": b.name, "degree": b.degree} for b in ring.basis],
        "unit": ring.basis[ring.unit].name,
        "point": ring.basis[ring.point].name,
    }
    if monoid.is_q and monoid.positive:
        doc["positive"] = True
    if ring.c1_dual_terms is not None:
        doc["c1_dual"] = _format_linear(ring, ring.c1_dual_terms)
    doc["table"] = [
        {"left": ring.basis[i].name, "right": ring.basis[j].name,
         "result": QHElement(ring, terms).to_json()}
        for (i, j), terms in sorted(ring.table.items())]
    return doc


def _format_linear(ring: RingPresentation, terms) -> str:
    out = ""
    for (k, _), c in terms:
        mag = "" if abs(c) == 1 else format_fraction(abs(c))
        out += ("-" if c < 0 else ("+" if out else "")) + mag + ring.basis[k].name
    return out


# -- verification ------------------------------------------------------------

@dataclass
class CheckResult:
    code: str
    title: str
    passed: bool
    checked: int = 0
    skipped: int = 0
    witness: Optional[str] = None


@dataclass
class VerificationReport:
    ring: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, code: str) -> CheckResult:
        return next(c for c in self.checks if c.code == code)

    def to_json(self) -> dict:
        return {"ring": self.ring, "passed": self.passed,
                "checks": [{"code": c.code, "title": c.title, "passed": c.passed,
                            "checked": c.checked, "skipped": c.skipped,
                            "witness": c.witness} for c in self.checks]}


def verify_presentation(ring: RingPresentation) -> VerificationReport:
    """Run the six structural checks V1..V6 and collect the results."""
    nb = len(ring.basis)
    names = ring.names
    basis = [ring.basis_element(i) for i in range(nb)]
    checks = []

    # V1 homogeneity
    bad, count = None, 0
    for (i, j), terms in ring.table.items():
        count += 1
        target = ring.degree_of(i) + ring.degree_of(j) - ring.dimension
        if any(ring.degree_of(k) + ring.monoid.degree(m) != target for (k, m), _ in terms):
            bad = bad or f"({names[i]},{names[j]})"
    checks.append(CheckResult("V1", "degree homogeneity", bad is None, count, witness=bad))

    # V2 unit law
    bad, count, skipped = None, 0, 0
    for i in range(nb):
        if not ring.has_entry(ring.unit, i):
            skipped += 1
            bad = bad or f"{names[ring.unit]}*{names[i]} undefined"
            continue
        count += 1
        if mul(ring, ring.unit_element, basis[i]) != basis[i]:
            bad = bad or f"{names[ring.unit]}*{names[i]}"
    checks.append(CheckResult("V2", "unit law", bad is None, count, skipped, bad))

    # V3 commutativity
    bad, count, skipped = None, 0, 0
    for i in range(nb):
        for j in range(nb):
            if not ring.has_entry(i, j):
                skipped += 1
                continue
            count += 1
            if mul(ring, basis[i], basis[j]) != mul(ring, basis[j], basis[i]):
                bad = bad or f"({names[i]},{names[j]})"
    checks.append(CheckResult("V3", "commutativity", bad is None, count, skipped, bad))

    # V4 associativity over every triple
    products = {}
    for i in range(nb):
        for j in range(nb):
            if ring.has_entry(i, j):
                products[i, j] = mul(ring, basis[i], basis[j])
    bad, count, skipped = None, 0, 0
    for i in range(nb):
        for j in range(nb):
            for k in range(nb):
                try:
                    left = mul(ring, products[i, j], basis[k])
                    right = mul(ring, basis[i], products[j, k])
                except (KeyError, UndefinedProduct):
                    skipped += 1
                    continue
                count += 1
                if left != right and bad is None:
                    bad = (f"({names[i]}*{names[j]})*{names[k]} = {left} but "
                           f"{names[i]}*({names[j]}*{names[k]}) = {right}")
    checks.append(CheckResult("V4", "associativity", bad is None, count, skipped, bad))

    # V5 point class only at the unit monomial in classical products
    unit_mono = ring.monoid.unit()
    bad, count = None, 0
    for (i, j), terms in ring.table.items():
        count += 1
        for (k, m), c in terms:
            if k == ring.point and m != unit_mono:
                bad = bad or f"({names[i]},{names[j]}) has {c}*{names[k]} {ring.monoid.format(m)}"
    checks.append(CheckResult("V5", "point class only classical", bad is None, count,
                              witness=bad))

    # V6 positivity of exponents
    positive = Monoid(ring.monoid.symbol, ring.monoid.names, ring.monoid.pairing, True)
    bad, count = None, 0
    for (i, j), terms in ring.table.items():
        for (k, m), _ in terms:
            count += 1
            try:
                positive.check(m)
            except AlgebraError:
                bad = bad or f"({names[i]},{names[j]}) term {ring.monoid.format(m)}"
    checks.append(CheckResult("V6", "positive exponents", bad is None, count, witness=bad))

    return VerificationReport(ring.name, checks)
