"""Degree bookkeeping for the spectral sequence of the pearl complex.

The first page is built from Betti numbers alone:
``E1[p, q] = b[p + q - p N]`` whenever ``0 <= p + q - p N <= n``.  The page
is periodic in ``p`` so cells are computed on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class SpectralError(ValueError):
    pass


def _check(betti, maslov: int, n: int) -> tuple:
    betti = tuple(int(b) for b in betti)
    if len(betti) != n + 1:
        raise SpectralError(f"expected {n + 1} Betti numbers, got {len(betti)}")
    if any(b < 0 for b in betti):
        raise SpectralError("Betti numbers are non-negative")
    if maslov < 2 or maslov % 2:
        raise SpectralError(f"minimal Maslov number must be even and >= 2, got {maslov}")
    return betti


@dataclass(frozen=True)
class E1Page:
    n: int
    maslov: int
    betti: tuple

    @property
    def nu(self) -> int:
        return (self.n + 1) // self.maslov

    def index(self, p: int, q: int) -> int:
        return p + q - p * self.maslov

    def dim(self, p: int, q: int) -> int:
        k = self.index(p, q)
        return self.betti[k] if 0 <= k <= self.n else 0

    def antidiagonal(self, total: int) -> dict:
        """Nonzero cells ``{(p, q): dim}`` with ``p + q = total``."""
        out = {}
        for k, b in enumerate(self.betti):
            if b and (total - k) % self.maslov == 0:
                p = (total - k) // self.maslov
                out[(p, total - p)] = b
        return out

    def total(self, total: int) -> int:
        return sum(self.antidiagonal(total).values())

    def grid(self, p_range: range) -> dict:
        """Nonzero cells for ``p`` in ``p_range``."""
        return {(p, k - p + p * self.maslov): b
                for p in p_range for k, b in enumerate(self.betti) if b}


def e1_page(betti, maslov: int, n: int) -> E1Page:
    return E1Page(n, maslov, _check(betti, maslov, n))


def rank_bound_qh_n(betti, maslov: int, n: int) -> int:
    """Upper bound for ``dim QH_n``: the E1 total along ``p + q = n``."""
    return e1_page(betti, maslov, n).total(n)


def collapse_forced(betti, maslov: int, n: int) -> bool:
    """True when every differential ``d^r`` has a zero source or target on E1.

    ``d^r`` lowers the total degree by one and moves the homological index
    from ``k`` to ``k - 1 + r N``.
    """
    page = e1_page(betti, maslov, n)
    for k, b in enumerate(page.betti):
        if not b:
            continue
        r = 1
        while k - 1 + r * maslov <= n:
            if page.betti[k - 1 + r * maslov]:
                return False
            r += 1
    return True


class Verdict(str, Enum):
    ISOMORPHIC = "isomorphic-to-H⊗Λ"
    AMBIGUOUS = "zero-or-isomorphic"


@dataclass(frozen=True)
class SSClassification:
    verdict: Verdict
    reason: str

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason}


def classify_homology_sphere(n: int, maslov: int, class_nonzero: bool) -> SSClassification:
    """Quantum homology of a rational homology sphere of dimension n."""
    if maslov % 2:
        raise SpectralError("orientable Lagrangians have even minimal Maslov number")
    if maslov < 2:
        raise SpectralError("minimal Maslov number must be >= 2")
    if n % 2 == 0:
        return SSClassification(Verdict.ISOMORPHIC, "n even: all differentials vanish by degree")
    if (n + 1) % maslov:
        return SSClassification(Verdict.ISOMORPHIC, f"N_L={maslov} does not divide n+1={n + 1}")
    if class_nonzero:
        return SSClassification(Verdict.ISOMORPHIC, "[L] != 0 in H_n(M; Q)")
    return SSClassification(
        Verdict.AMBIGUOUS,
        "N_L | n+1 and [L] = 0: QH vanishes or is isomorphic to H⊗Λ; "
        "deciding needs an algebraic count of Maslov n+1 disks, not ring data")
