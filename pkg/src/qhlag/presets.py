"""Shipped ring presentations and symbolic model rings.

The blow-ups ``M2``..``M6`` and the group-ring table ``M2T`` live as JSON
files under ``data/presets``; set ``QHLAG_PRESET_DIR`` to read presets from
another directory.  Hypersurface, quadric and Kunneth rings are built on
demand.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .exactalg import AlgebraError, Monoid
from .qhring import BasisClass, RingPresentation, build_ring, parse_ring, verify_presentation

PRESET_NAMES = ("M2", "M3", "M4", "M5", "M6", "M2T")


class UnknownPreset(AlgebraError):
    pass


def preset_dir() -> Path:
    env = os.environ.get("QHLAG_PRESET_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("qhlag") / "data" / "presets"))


def load_preset(name: str, verify: bool = True) -> RingPresentation:
    """Load a preset by name and (by default) insist that it verifies."""
    path = preset_dir() / f"{name}.json"
    if not path.is_file():
        raise UnknownPreset(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    return _load(str(path), path.stat().st_mtime_ns, verify)


@lru_cache(maxsize=None)
def _load(path: str, _mtime: int, verify: bool) -> RingPresentation:
    ring = parse_ring(Path(path))
    if verify:
        report = verify_presentation(ring)
        if not report.passed:
            failed = [f"{c.code}: {c.witness}" for c in report.checks if not c.passed]
            raise AlgebraError(f"preset {ring.name} fails verification: {'; '.join(failed)}")
    return ring


def epsilon(n: int) -> int:
    """The sign (-1)^(n(n-1)/2)."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def hypersurface_model(n: int, d: int) -> RingPresentation:
    """Model ring for a Lagrangian sphere class in a degree-d Fano hypersurface.

    Basis: ``u`` = x^0 (the fundamental class), ``x^1``..``x^{n-1}``, ``pt``
    and the primitive middle class ``a``.  Only the products needed for
    triple products of ``a`` are defined:

    * ``x^i * x^j = x^(i+j)`` for ``i + j < n`` and ``d * pt`` for ``i + j = n``
      (so that ``x^n = d * pt``);
    * ``x^i * a = 0`` for ``i >= 1`` and ``pt * a = 0``;
    * ``a * a = (2 eps / d) (x^n - d^d x^(d-2) q^(n+2-d))``, i.e.
      ``2 eps pt - 2 eps d^(d-1) x^(d-2) q^(n+2-d)``.

    Products beyond these raise :class:`~qhlag.qhring.UndefinedProduct`.
    """
    if n < 2:
        raise AlgebraError("hypersurface model needs n >= 2")
    if not 2 <= d <= n + 1:
        raise AlgebraError(f"degree d={d} outside the Fano range 2 <= d <= n+1 = {n + 1}")
    if n % 2:
        raise AlgebraError("odd n gives an odd-degree middle class, which is unsupported")
    eps = epsilon(n)
    cm = n + 2 - d

    def xname(k):
        return "u" if k == 0 else f"x^{k}"

    basis = [(xname(k), 2 * n - 2 * k) for k in range(n)] + [("pt", 0), ("a", n)]
    table = {}
    for name, _deg in basis:
        table["u", name] = [(name, 1, (0,))]
    for i in range(1, n):
        for j in range(i, n):
            if i + j < n:
                table[xname(i), xname(j)] = [(xname(i + j), 1, (0,))]
            elif i + j == n:
                table[xname(i), xname(j)] = [("pt", d, (0,))]
        table[xname(i), "a"] = []
    table["pt", "a"] = []
    lower = "u" if d == 2 else xname(d - 2)
    table["a", "a"] = [("pt", 2 * eps, (0,)),
                       (lower, Fraction(-2 * eps * d ** (d - 1)), (cm,))]
    label = "quadric" if d == 2 else "hypersurface"
    return build_ring(f"{label}(n={n},d={d})", 2 * n, cm, basis, "u", "pt", table,
                      Monoid.q(), notes=[f"x^{n} = {d} pt", "only a-triple products defined"])


def quadric(n: int) -> RingPresentation:
    return hypersurface_model(n, 2)


def kunneth(r1: RingPresentation, r2: RingPresentation) -> RingPresentation:
    """Tensor product of two single-q presentations over Z[q].

    Basis classes are named ``b1.b2``; a pair product is defined when both
    factor products are.
    """
    if not (r1.monoid.is_q and r2.monoid.is_q):
        raise AlgebraError("Kunneth product needs single-q rings")
    for r in (r1, r2):
        if any(b.degree % 2 for b in r.basis):
            raise AlgebraError("odd-degree classes present; the sign rule is unsupported")
    pairs = [(i, j) for i in range(len(r1.basis)) for j in range(len(r2.basis))]

    def nm(i, j):
        return f"{r1.basis[i].name}.{r2.basis[j].name}"

    basis = [(nm(i, j), r1.basis[i].degree + r2.basis[j].degree) for i, j in pairs]
    table = {}
    for x, (i1, j1) in enumerate(pairs):
        for (i2, j2) in pairs[x:]:
            if not (r1.has_entry(i1, i2) and r2.has_entry(j1, j2)):
                continue
            out = []
            for (k1, m1), c1 in r1.entry(i1, i2):
                for (k2, m2), c2 in r2.entry(j1, j2):
                    out.append((nm(k1, k2), c1 * c2, (m1[0] + m2[0],)))
            table[nm(i1, j1), nm(i2, j2)] = out
    cms = [r.minimal_chern for r in (r1, r2) if r.minimal_chern is not None]
    from math import gcd
    cm = gcd(*cms) if len(cms) == 2 else (cms[0] if cms else None)
    positive = r1.monoid.positive and r2.monoid.positive
    return build_ring(f"{r1.name}x{r2.name}", r1.dimension + r2.dimension, cm, basis,
                      nm(r1.unit, r2.unit), nm(r1.point, r2.point), table,
                      Monoid.q(positive))


# -- reference data (consumed by the acceptance suite and `table1`) --------------

@lru_cache(maxsize=None)
def reference_data() -> dict:
    path = resources.files("qhlag") / "data" / "reference.json"
    return json.loads(path.read_text())


def table1_rows() -> list:
    return reference_data()["table1"]


def refined_rows() -> list:
    return reference_data()["refined"]


__all__ = [
    "BasisClass", "PRESET_NAMES", "epsilon", "hypersurface_model", "kunneth",
    "load_preset", "preset_dir", "quadric", "reference_data", "refined_rows",
    "table1_rows",
]
