"""Invariants with coefficients in the group ring of relative classes.

For a Lagrangian sphere ``L`` in a 4-manifold, ``H2(M, L) = H2(M) / Z[L]``.
Ambient monomials ``S^A`` are pushed to ``T^[A]`` and the cubic relation
of ``[L]`` is solved with unknowns in the group ring.  ``specialize``
collapses any group-ring coefficient to a power of ``q`` (or ``t``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactalg import AlgebraError, CoeffElement, Monoid, format_fraction, parse_coeff
from .lagrangian import LagrangianDatum, PreconditionError, solve_pencil
from .presets import UnknownPreset, load_preset, refined_rows, table1_rows
from .qhring import QHElement, RingPresentation, intersection_number, mul


class ReferenceMissing(AlgebraError):
    pass


def h2_data(ring: RingPresentation) -> tuple:
    """``(names, c1 pairing)`` of an H2 basis for the ring's manifold.

    Group-ring presentations carry it in their monoid.  For a single-q
    presentation of a 4-manifold the degree-2 classes are used, paired with
    ``PD(c1)`` through the intersection form.
    """
    if not ring.monoid.is_q:
        return ring.monoid.names, ring.monoid.pairing
    if ring.dimension != 4:
        raise PreconditionError("H2 data is derived from degree-2 classes of 4-manifolds only")
    c1 = ring.c1_dual
    if c1 is None:
        raise PreconditionError(f"{ring.name} has no c1_dual")
    idx = [k for k, b in enumerate(ring.basis) if b.degree == 2]
    names = tuple(ring.basis[k].name for k in idx)
    pairing = tuple(int(intersection_number(ring, c1, ring.basis_element(k))) for k in idx)
    return names, pairing


def class_vector_h2(ring: RingPresentation, klass: QHElement, names: tuple) -> tuple:
    """Coordinates of a classical degree-2 class in the H2 basis ``names``."""
    vec = [0] * len(names)
    for (k, mono), c in klass.terms:
        name = ring.basis[k].name
        if any(mono) or name not in names or c.denominator != 1:
            raise PreconditionError(f"{klass} is not an integral H2 class")
        vec[names.index(name)] += int(c)
    return tuple(vec)


@dataclass(frozen=True)
class RelativeClassGroup:
    ambient_names: tuple
    ambient_pairing: tuple
    relation: tuple
    pivot: int
    names: tuple
    pairing: tuple

    def map(self, v) -> tuple:
        """Image of an ambient vector in quotient coordinates."""
        v = tuple(v)
        if len(v) != len(self.ambient_names):
            raise AlgebraError("ambient vector has wrong length")
        f = v[self.pivot] * self.relation[self.pivot]  # relation[pivot] is +-1
        w = [a - f * r for a, r in zip(v, self.relation)]
        return tuple(w[:self.pivot] + w[self.pivot + 1:])

    @property
    def matrix(self) -> tuple:
        n = len(self.ambient_names)
        return tuple(self.map(tuple(int(i == j) for j in range(n))) for i in range(n))

    def mu(self, w) -> int:
        return 2 * sum(a * b for a, b in zip(self.pairing, w))

    def in_kernel(self, v) -> bool:
        return not any(self.map(v))

    def monoid(self, positive: bool = True) -> Monoid:
        return Monoid.group(self.names, self.pairing, symbol="T", positive=positive)

    def to_json(self) -> dict:
        return {"ambient_basis": list(self.ambient_names), "relation": list(self.relation),
                "quotient_basis": list(self.names),
                "mu": [2 * p for p in self.pairing],
                "matrix": [list(r) for r in self.matrix]}


def _stem(name: str) -> str:
    return re.sub(r"_?\d+$", "", name)


def quotient_group(names, pairing, relation) -> RelativeClassGroup:
    """``Z^names / Z[relation]`` with a deterministic basis.

    A difference ``X_i - X_j`` of two classes with a common stem merges them
    into one generator named by the stem (``E1 - E2`` gives ``E``).
    Otherwise the first coordinate with coefficient +-1 is eliminated.
    """
    names, pairing, relation = tuple(names), tuple(pairing), tuple(int(x) for x in relation)
    if len(relation) != len(names):
        raise AlgebraError("relation vector has wrong length")
    if not any(relation):
        raise PreconditionError("the relation class is zero")
    if sum(a * b for a, b in zip(pairing, relation)):
        raise PreconditionError("c1 pairs nontrivially with the relation class")
    support = [i for i, r in enumerate(relation) if r]
    new_names = list(names)
    if (len(support) == 2 and sorted(relation[i] for i in support) == [-1, 1]
            and _stem(names[support[0]]) == _stem(names[support[1]])):
        keep, pivot = support
        stem = _stem(names[keep])
        if stem not in names:
            new_names[keep] = stem
    else:
        units = [i for i in support if abs(relation[i]) == 1]
        if not units:
            raise AlgebraError("relation has no unit coefficient; quotient is not free on a sub-basis")
        pivot = units[0]
    q_names = tuple(new_names[:pivot] + new_names[pivot + 1:])
    q_pairing = pairing[:pivot] + pairing[pivot + 1:]
    return RelativeClassGroup(names, pairing, relation, pivot, q_names, q_pairing)


def quotient_for(ring: RingPresentation, L: LagrangianDatum) -> RelativeClassGroup:
    names, pairing = h2_data(ring)
    return quotient_group(names, pairing, class_vector_h2(ring, L.klass, names))


def _map_terms(terms, fn) -> tuple:
    acc: dict = {}
    for (k, mono), c in terms:
        key = (k, fn(mono))
        acc[key] = acc.get(key, 0) + c
    return tuple(sorted((key, c) for key, c in acc.items() if c))


def base_change(ring: RingPresentation, monoid: Monoid, fn, name: str) -> RingPresentation:
    """The same table with every coefficient monomial sent through ``fn``."""
    table = {key: _map_terms(val, fn) for key, val in ring.table.items()}
    c1 = None if ring.c1_dual_terms is None else _map_terms(ring.c1_dual_terms, fn)
    return RingPresentation(name, ring.dimension, ring.minimal_chern, ring.basis, ring.unit,
                            ring.point, monoid, table, c1, ring.notes)


def push_element(x: QHElement, target: RingPresentation, fn) -> QHElement:
    return QHElement(target, _map_terms(x.terms, fn))


def push_coeff(x: CoeffElement, monoid: Monoid, fn) -> CoeffElement:
    return CoeffElement(monoid, [(fn(m), c) for m, c in x.terms])


def relative_ring(ring: RingPresentation, group: RelativeClassGroup) -> RingPresentation:
    if ring.monoid.is_q or ring.monoid.names != group.ambient_names:
        raise PreconditionError("quotient map needs a group-ring presentation over the same H2 basis")
    return base_change(ring, group.monoid(ring.monoid.positive), group.map,
                       f"{ring.name}/[L]")


@dataclass
class RefinedCubicCertificate:
    sigma_t: CoeffElement
    tau_t: CoeffElement
    delta_t: CoeffElement
    group: RelativeClassGroup
    residual_zero: bool
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"sigma_t": str(self.sigma_t), "tau_t": str(self.tau_t),
                "four_tau_t": str(self.tau_t * 4), "delta_t": str(self.delta_t),
                "quotient_basis": list(self.group.names),
                "residual_zero": self.residual_zero, "checks": self.checks}


def refined_cubic(ring: RingPresentation, L: LagrangianDatum,
                  group: Optional[RelativeClassGroup] = None) -> RefinedCubicCertificate:
    """Solve ``[L]^3 = eps chi s [L]^2 + chi^2 t [L]`` with ``s, t`` in the group ring."""
    if ring.monoid.is_q:
        raise PreconditionError("refined cubic needs a group-ring presentation")
    if L.chi == 0:
        raise PreconditionError("chi = 0: the refined cubic carries no information")
    if not L.klass:
        raise PreconditionError("the class [L] is zero")
    group = group or quotient_for(ring, L)
    rel = relative_ring(ring, group)
    cls = push_element(L.klass, rel, group.map)
    xi = Fraction(L.epsilon * L.chi)
    lead = mul(rel, cls, cls)
    alpha, beta = solve_pencil(mul(rel, cls, lead), lead, cls, xi)
    sigma_t = alpha * (1 / xi)
    tau_t = beta * (1 / (xi * xi))
    delta_t = sigma_t * sigma_t + tau_t * 4
    other = mul(rel, lead, cls) - lead.scale(alpha) - cls.scale(beta)
    n = L.n
    checks = {
        "sigma_degree_ok": not sigma_t or sigma_t.degree() == -n,
        "tau_degree_ok": not tau_t or tau_t.degree() == -2 * n,
        "delta_degree_ok": not delta_t or delta_t.degree() == -2 * n,
    }
    if L.chi == 2 and n % 2 == 0:
        checks["sphere_sigma_zero"] = not sigma_t
    return RefinedCubicCertificate(sigma_t, tau_t, delta_t, group, not other, checks)


def _single_variable(symbol: str, weight: int, positive: bool) -> Monoid:
    return Monoid(symbol, (symbol,), (weight,), positive)


def _specializer(monoid: Monoid, target: str, maslov: Optional[int]):
    if monoid.is_q:
        raise PreconditionError("already a single-q object")
    if target == "q":
        return _single_variable("q", 1, monoid.positive), lambda m: (monoid.pair(m),)
    if target != "t":
        raise AlgebraError(f"unknown target {target!r}; use 'q' or 't'")
    if not maslov or maslov % 2:
        raise PreconditionError("target t needs an even minimal Maslov number")

    def fn(m):
        mu = 2 * monoid.pair(m)
        if mu % maslov:
            raise AlgebraError(f"fractional exponent {mu}/{maslov} for {monoid.format(m)}")
        return (mu // maslov,)

    return _single_variable("t", maslov // 2, monoid.positive), fn


def specialize(x, target: str = "q", maslov: Optional[int] = None):
    """Send ``S^A`` to ``q^<c1,A>`` (equivalently ``T^A`` to ``q^(mu(A)/2)``).

    With ``target="t"`` the image is ``t^(mu(A)/N_L)``.  Accepts a
    :class:`CoeffElement`, a :class:`QHElement` or a whole presentation.
    """
    if isinstance(x, CoeffElement):
        mono, fn = _specializer(x.monoid, target, maslov)
        return push_coeff(x, mono, fn)
    if isinstance(x, RingPresentation):
        mono, fn = _specializer(x.monoid, target, maslov)
        return base_change(x, mono, fn, f"{x.name}|{target}")
    if isinstance(x, QHElement):
        mono, fn = _specializer(x.ring.monoid, target, maslov)
        return push_element(x, base_change(x.ring, mono, fn, f"{x.ring.name}|{target}"), fn)
    raise TypeError(f"cannot specialize {type(x).__name__}")


def orientation_flip_check(ring: RingPresentation, L: LagrangianDatum) -> bool:
    """``sigma`` flips sign, ``tau`` and the discriminant do not."""
    a = refined_cubic(ring, L)
    b = refined_cubic(ring, L.flipped())
    return (b.sigma_t == -a.sigma_t and b.tau_t == a.tau_t and b.delta_t == a.delta_t)


# -- reference formulas -------------------------------------------------------------------

def _norm_class(text: str) -> str:
    return text.replace(" ", "")


def find_row(rows: list, manifold: str, klass: str) -> dict:
    for row in rows:
        if row["manifold"] == manifold and _norm_class(row["class"]) == _norm_class(klass):
            return row
    raise ReferenceMissing(f"no reference row for ({manifold}, {klass})")


@dataclass
class RefinedReferenceReport:
    manifold: str
    klass: str
    formula: CoeffElement
    basis_matches: bool
    homogeneous: bool
    degree_ok: bool
    specialized: CoeffElement
    expected_delta: int
    specialization_ok: bool
    derived: Optional[CoeffElement] = None
    note: str = ""

    @property
    def coefficient_sum(self) -> Fraction:
        return self.formula.coefficient_sum()

    @property
    def passed(self) -> bool:
        return self.basis_matches and self.homogeneous and self.degree_ok and self.specialization_ok

    def to_json(self) -> dict:
        out = {"manifold": self.manifold, "class": self.klass, "formula": str(self.formula),
               "basis_matches": self.basis_matches, "homogeneous": self.homogeneous,
               "degree_ok": self.degree_ok, "specialized": str(self.specialized),
               "expected_delta": self.expected_delta,
               "coefficient_sum": format_fraction(self.coefficient_sum),
               "specialization_ok": self.specialization_ok, "passed": self.passed}
        if self.derived is not None:
            out["derived"] = str(self.derived)
            out["matches_derived"] = self.derived == self.formula
        if self.note:
            out["note"] = self.note
        return out


def reference_check(manifold: str, klass: str) -> RefinedReferenceReport:
    """Check a stored refined discriminant for homogeneity and specialization."""
    row = find_row(refined_rows(), manifold, klass)
    delta = find_row(table1_rows(), manifold, klass)["delta"]
    ring = load_preset(manifold)
    L = LagrangianDatum.from_class(ring, klass, 2)
    group = quotient_for(ring, L)
    monoid = group.monoid()
    formula = parse_coeff(row["refined_delta"], monoid)
    n = L.n
    special = specialize(formula)
    expected = CoeffElement.monomial(special.monoid, (n,), delta)
    derived = None
    try:
        full = load_preset(manifold + "T")
    except UnknownPreset:
        full = None
    if full is not None:
        derived = refined_cubic(full, LagrangianDatum.from_class(full, klass, 2)).delta_t
        derived = CoeffElement(monoid, derived.terms)
    return RefinedReferenceReport(
        manifold, _norm_class(klass), formula,
        basis_matches=list(group.names) == list(row.get("quotient_basis", group.names)),
        homogeneous=formula.is_homogeneous(),
        degree_ok=formula.degrees() <= {-2 * n},
        specialized=special, expected_delta=delta,
        specialization_ok=special == expected,
        derived=derived, note=row.get("note", ""))
