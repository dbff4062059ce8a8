"""Invariants of a Lagrangian class inside a quantum homology ring.

Everything here is derived from products in a :class:`RingPresentation`:
the cubic relation satisfied by ``[L]`` (and its mixed version with an
auxiliary class ``c``), the discriminant, the sphere constant, the
eigenvalue of quantum multiplication by ``PD(c1)``, the ideal generated by
``[L]`` and the relations between two Lagrangian classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

import sympy

from .exactalg import AlgebraError, CoeffElement, format_fraction
from .presets import epsilon
from .qhring import QHElement, RingPresentation, classical_part, intersection_number, mul


class LagrangianError(AlgebraError):
    pass


class PreconditionError(LagrangianError):
    pass


class NoCubicRelation(LagrangianError):
    """The cubic system has no solution: the input ring is inconsistent."""


@dataclass(frozen=True)
class LagrangianDatum:
    klass: QHElement
    n: int
    chi: int
    maslov: Optional[int] = None

    @property
    def epsilon(self) -> int:
        return epsilon(self.n)

    @classmethod
    def from_class(cls, ring: RingPresentation, klass, chi: int,
                   maslov: Optional[int] = None, check: bool = True) -> "LagrangianDatum":
        """Build a datum, checking that ``[L].[L] = eps * chi``."""
        if isinstance(klass, str):
            klass = ring.parse(klass)
        n = ring.n
        if not klass.is_classical():
            raise PreconditionError("a Lagrangian class must be classical")
        if klass and klass.degree() != n:
            raise PreconditionError(f"Lagrangian class must have degree {n}, got {klass.degree()}")
        datum = cls(klass, n, int(chi), maslov)
        if check:
            self_int = intersection_number(ring, klass, klass) if klass else Fraction(0)
            if self_int != datum.epsilon * datum.chi:
                raise PreconditionError(
                    f"[L].[L] = {self_int} but eps*chi = {datum.epsilon * datum.chi}")
        return datum

    def flipped(self) -> "LagrangianDatum":
        return LagrangianDatum(-self.klass, self.n, self.chi, self.maslov)


@dataclass
class CubicCertificate:
    c: QHElement
    xi: Fraction
    sigma: Fraction
    tau: Fraction
    delta: Fraction
    gamma: Optional[Fraction]
    unique: bool
    residual_zero: bool
    checks: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "xi": format_fraction(self.xi),
            "sigma": format_fraction(self.sigma),
            "tau": format_fraction(self.tau),
            "delta": format_fraction(self.delta),
            "gamma": None if self.gamma is None else format_fraction(self.gamma),
            "unique": self.unique,
            "residual_zero": self.residual_zero,
        }


def solve_pencil(target: QHElement, lead: QHElement, base: QHElement, xi: Fraction):
    """Write ``target = alpha * lead + beta * base`` with coefficient-ring unknowns.

    ``lead`` must carry the point class with the scalar coefficient ``xi``
    and ``base`` must not carry it at all; under those conditions the
    solution is unique.  Returns ``(alpha, beta)`` as :class:`CoeffElement`.
    """
    ring = target.ring
    monoid = ring.monoid
    if base.coefficient(ring.point) or base.component(ring.point):
        raise LagrangianError("base element carries the point class; uniqueness fails")
    point_lead = lead.component(ring.point)
    if point_lead != CoeffElement.scalar(monoid, xi):
        raise NoCubicRelation(
            f"point component of the lead element is {point_lead}, expected {xi}")
    alpha = target.component(ring.point) * (Fraction(1) / xi)
    rest = target - lead.scale(alpha)
    pivot = next(k for (k, _), _c in base.terms)
    base_k = base.component(pivot)
    if len(base_k) != 1:
        raise LagrangianError("base element must be classical")
    (mono, c), = base_k.terms
    if any(mono):
        raise LagrangianError("base element must be classical")
    beta = rest.component(pivot) * (Fraction(1) / c)
    if rest != base.scale(beta):
        raise NoCubicRelation(
            f"no relation: remainder {rest} is not a multiple of {base}")
    return alpha, beta


def _single_coefficient(x: CoeffElement, mono: tuple, what: str) -> Fraction:
    for m, _ in x.terms:
        if m != mono:
            raise NoCubicRelation(f"{what} = {x} is not a multiple of {x.monoid.format(mono)}")
    return x.coefficient(mono)


def cubic_coefficients(ring: RingPresentation, L: LagrangianDatum,
                       c: Optional[QHElement] = None) -> CubicCertificate:
    """Solve ``c*c*[L] = xi sigma (c*[L]) q^(n/2) + xi^2 tau [L] q^n``.

    With ``c`` omitted this is the cubic equation of ``[L]`` itself, and
    ``xi = eps * chi``.
    """
    if not ring.monoid.is_q:
        raise PreconditionError("use refined_cubic for group-ring presentations")
    if not L.klass:
        raise PreconditionError("the class [L] is zero; the cubic workflow needs [L] != 0")
    if L.n % 2:
        raise PreconditionError("the cubic relation needs an even-dimensional Lagrangian")
    is_self = c is None
    c = L.klass if c is None else c
    if not c.is_classical() or c.degree() != L.n:
        raise PreconditionError(f"c must be a classical class of degree {L.n}")
    xi = intersection_number(ring, c, L.klass)
    if xi == 0:
        raise PreconditionError("xi = #(c.[L]) vanishes; no cubic relation can be extracted")

    half, full = (L.n // 2,), (L.n,)
    lead = mul(ring, c, L.klass)
    target = mul(ring, c, lead)
    alpha, beta = solve_pencil(target, lead, L.klass, xi)
    sigma = _single_coefficient(alpha, half, "xi*sigma") / xi
    tau = _single_coefficient(beta, full, "xi^2*tau") / (xi * xi)
    delta = sigma * sigma + 4 * tau

    # independent re-check through the other association (c*c)*[L]
    lhs = mul(ring, mul(ring, c, c), L.klass)
    residual = (lhs - lead.scale(xi * sigma).shift(half)
                - L.klass.scale(xi * xi * tau).shift(full))
    gamma = xi * xi * tau if (sigma == 0 and is_self) else None
    return CubicCertificate(c, xi, sigma, tau, delta, gamma, unique=True,
                            residual_zero=not residual)


@dataclass
class ProportionalityReport:
    factor: Optional[Fraction]
    proportional: bool
    residual: QHElement


def _proportional(product: QHElement, klass: QHElement, mono: tuple) -> ProportionalityReport:
    """Find ``f`` with ``product = f * klass * mono`` if one exists."""
    pivot = next(k for (k, _), _c in klass.terms)
    guess = product.coefficient(pivot, mono) / klass.coefficient(pivot)
    residual = product - klass.scale(guess).shift(mono)
    return ProportionalityReport(guess, not residual, residual)


def gamma_sphere(ring: RingPresentation, S: LagrangianDatum) -> CubicCertificate:
    """Sphere constant ``gamma`` with ``[S]^3 = gamma [S] q^n``.

    Also checks the mod-4 law on ``gamma`` and that the quadratic
    coefficient of the cubic relation vanishes.
    """
    n, cm = S.n, ring.minimal_chern
    if n % 2:
        raise PreconditionError("sphere constant needs n even")
    if cm is None or n % cm:
        raise PreconditionError(f"sphere constant needs C_M | n (C_M={cm}, n={n})")
    if S.chi != 2:
        raise PreconditionError("a sphere of even dimension has chi = 2")
    cube = mul(ring, S.klass, mul(ring, S.klass, S.klass))
    rep = _proportional(cube, S.klass, (n,))
    if not rep.proportional:
        raise NoCubicRelation(f"[S]^3 is not proportional to [S]q^{n}; residual {rep.residual}")
    gamma = rep.factor
    cert = cubic_coefficients(ring, S)
    if n % (2 * cm):
        branch, ok = "2C_M does not divide n: 4 | gamma", gamma.denominator == 1 and gamma % 4 == 0
    else:
        branch, ok = "2C_M | n: gamma = 0 or 1 mod 4", (
            gamma.denominator == 1 and gamma % 4 in (0, 1))
    cert.gamma = gamma
    cert.checks = {"branch": branch, "mod4_law": ok, "sigma_zero": cert.sigma == 0,
                   "gamma_equals_chi2_tau": gamma == S.chi ** 2 * cert.tau}
    return cert


@dataclass
class EtaReport:
    eta: Optional[Fraction]
    proportional: bool
    residual: QHElement


def eta_multiplier(ring: RingPresentation, b: QHElement, S: LagrangianDatum) -> EtaReport:
    """``eta`` with ``b * [S] = eta [S] q^n``, or a not-proportional report."""
    if b and b.degree() != 0:
        raise PreconditionError("b must be homogeneous of total degree 0")
    rep = _proportional(mul(ring, b, S.klass), S.klass, (S.n,))
    return EtaReport(rep.factor if rep.proportional else None, rep.proportional, rep.residual)


def gw_sigma_sum(ring: RingPresentation, c: QHElement, L: LagrangianDatum) -> int:
    """Sum of three-point GW invariants ``GW(c, c, [L])`` in Chern degree n/2.

    Read off as ``#(c . alpha)`` where ``alpha`` is the ``q^(n/2)`` part of
    ``c*[L]``; cross-checked against ``xi^2 * sigma``.
    """
    if L.n % 2:
        raise PreconditionError("n must be even")
    cert = cubic_coefficients(ring, L, c)
    half = (L.n // 2,)
    prod = mul(ring, c, L.klass)
    alpha = QHElement(ring, [((k, ring.monoid.unit()), v)
                             for (k, m), v in prod.terms if m == half])
    value = intersection_number(ring, c, alpha) if alpha else Fraction(0)
    if value != cert.xi ** 2 * cert.sigma:
        raise NoCubicRelation(
            f"GW sum {value} disagrees with xi^2*sigma = {cert.xi ** 2 * cert.sigma}")
    return int(value)


@dataclass
class EigenReport:
    lam: Optional[Fraction]
    verified: bool
    residual: QHElement

    def to_json(self) -> dict:
        return {"lambda": None if self.lam is None else format_fraction(self.lam),
                "verified": self.verified, "residual": str(self.residual)}


def lambda_eigenvalue(ring: RingPresentation, klass: QHElement) -> EigenReport:
    """Solve ``PD(c1) * [L] = lambda [L] q`` exactly."""
    c1 = ring.c1_dual
    if c1 is None:
        raise PreconditionError(f"{ring.name} has no c1_dual")
    if not klass:
        raise PreconditionError("zero class")
    rep = _proportional(mul(ring, c1, klass), klass, (1,))
    return EigenReport(rep.factor, rep.proportional, rep.residual)


# -- ideals -------------------------------------------------------------------------

def _rref(rows: list) -> list:
    if not rows:
        return []
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    reduced, pivots = m.rref()
    return [[Fraction(int(v.p), int(v.q)) for v in reduced.row(i)] for i in range(len(pivots))]


def _primitive(row: list) -> list:
    from math import gcd, lcm
    den = lcm(*(x.denominator for x in row))
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def same_row_space(rows_a: list, rows_b: list) -> bool:
    a = [[Fraction(x) for x in r] for r in rows_a]
    b = [[Fraction(x) for x in r] for r in rows_b]
    return _rref(a) == _rref(b)


@dataclass
class IdealBasis:
    ring: RingPresentation
    generators: list
    rows: list
    rank: int
    passes: int

    def folded(self, x: QHElement) -> list:
        return x.class_vector()

    def contains(self, x: QHElement) -> bool:
        """Membership for a homogeneous element."""
        if not x:
            return True
        if not x.is_homogeneous():
            raise AlgebraError("membership is tested on homogeneous elements")
        return len(_rref(self.rows + [x.class_vector()])) == self.rank

    def is_closed(self) -> bool:
        basis = [self.ring.basis_element(i) for i in range(len(self.ring.basis))]
        return all(self.contains(mul(self.ring, g, b)) for g in self.generators for b in basis)


def lift(ring: RingPresentation, row: list) -> QHElement:
    """Homogeneous lift of a folded vector with non-negative q-powers."""
    degs = [ring.degree_of(k) for k, v in enumerate(row) if v]
    if not degs:
        return ring.zero()
    low = min(degs)
    return QHElement(ring, [((k, ((ring.degree_of(k) - low) // 2,)), v)
                            for k, v in enumerate(row) if v])


def ideal_of(ring: RingPresentation, klass: QHElement) -> IdealBasis:
    """The ideal generated by ``klass`` in the Laurent ring over Q.

    Homogeneous elements are folded to vectors over the basis classes
    (forgetting powers of q, which are units), the span is closed under
    multiplication by every basis class, and reduced generators are lifted
    back with the q-powers forced by homogeneity.
    """
    if not ring.monoid.is_q:
        raise PreconditionError("ideal computation is for single-q presentations")
    if not klass.is_homogeneous():
        raise PreconditionError("generator must be homogeneous")
    nb = len(ring.basis)
    basis = [ring.basis_element(i) for i in range(nb)]
    spanning = [klass] if klass else []
    rows = _rref([x.class_vector() for x in spanning])
    passes = 0
    while True:
        passes += 1
        if passes > nb + 1:
            raise AlgebraError("ideal closure did not stabilize")
        grew = False
        for g in list(spanning):
            for b in basis:
                prod = mul(ring, g, b)
                if not prod:
                    continue
                cand = _rref(rows + [prod.class_vector()])
                if len(cand) > len(rows):
                    rows = cand
                    spanning.append(prod)
                    grew = True
        if not grew:
            break
    int_rows = [_primitive(r) for r in rows]
    gens = [lift(ring, r) for r in int_rows]
    return IdealBasis(ring, gens, int_rows, len(int_rows), passes)


# -- pairs of Lagrangians ---------------------------------------------------------------

@dataclass
class PairReport:
    k: Fraction
    product: QHElement
    branch: str
    holds: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"k": format_fraction(self.k), "product": str(self.product),
               "branch": self.branch, "holds": self.holds}
        for key, value in self.details.items():
            out[key] = format_fraction(value) if isinstance(value, Fraction) else value
        return out


def pair_relation(ring: RingPresentation, L1: LagrangianDatum,
                  L2: LagrangianDatum) -> PairReport:
    """Relations forced between two Lagrangian classes of the same even dimension."""
    n = L1.n
    if n != L2.n or n % 2:
        return PairReport(Fraction(0), ring.zero(), "not applicable", False,
                          {"failed_hypothesis": "both classes of the same even degree n"})
    a, b = L1.klass, L2.klass
    k = intersection_number(ring, a, b)
    prod = mul(ring, a, b)
    details: dict = {}
    if k == 0:
        if not prod:
            return PairReport(k, prod, "orthogonal: product vanishes", True)
        va, vb = a.class_vector(), b.class_vector()
        proportional = len(_rref([va, vb])) <= 1
        square = _proportional(mul(ring, a, a), a, (n // 2,)) if a else None
        ok = proportional and square is not None and square.proportional
        details["proportional"] = proportional
        if square is not None and square.proportional:
            details["kappa"] = square.factor
        return PairReport(k, prod, "orthogonal: proportional classes with square relation",
                          ok, details)

    holds = True
    if ring.c1_dual is not None:
        lam1, lam2 = lambda_eigenvalue(ring, a), lambda_eigenvalue(ring, b)
        details["lambda1"], details["lambda2"] = lam1.lam, lam2.lam
        details["lambda_equal"] = lam1.verified and lam2.verified and lam1.lam == lam2.lam
        holds = holds and details["lambda_equal"]
    cm = ring.minimal_chern
    if cm is None or n % cm:
        details["square_relation"] = "not applicable: C_M does not divide n"
    elif n % (2 * cm) == 0:
        details["square_relation"] = "not applicable: 2C_M divides n"
    else:
        sq1, sq2 = mul(ring, a, a), mul(ring, b, b)
        rhs = prod.scale(Fraction(2 * L1.epsilon) / k)
        g1 = _proportional(mul(ring, a, sq1), a, (n,))
        g2 = _proportional(mul(ring, b, sq2), b, (n,))
        ok = sq1 == rhs and sq2 == rhs and g1.proportional and g2.proportional \
            and g1.factor == g2.factor
        details["square_relation"] = "verified" if ok else "failed"
        holds = holds and ok
    return PairReport(k, prod, "intersecting", holds, details)


def is_perfect_square(x) -> bool:
    """True iff the rational ``x`` is the square of a rational."""
    x = Fraction(x)
    if x < 0:
        return False
    return (isqrt(x.numerator) ** 2 == x.numerator
            and isqrt(x.denominator) ** 2 == x.denominator)
