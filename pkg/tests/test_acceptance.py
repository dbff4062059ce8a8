"""Acceptance gate: one PASS/FAIL line per criterion, exact equality throughout.

Run with pytest, or directly (``python3 tests/test_acceptance.py``) for
just the summary lines.
"""

from fractions import Fraction
from itertools import product

import pytest

from qhlag.lagrangian import (
    LagrangianDatum, cubic_coefficients, gamma_sphere, ideal_of, is_perfect_square,
    lambda_eigenvalue, pair_relation, same_row_space,
)
from qhlag.presets import (
    PRESET_NAMES, epsilon, hypersurface_model, kunneth, load_preset, quadric, refined_rows,
    table1_rows,
)
from qhlag.qhring import mul, pow, verify_presentation
from qhlag import quadalg as qa
from qhlag.refined import reference_check, refined_cubic, specialize
from qhlag.exactalg import parse_coeff
from qhlag.specseq import Verdict, classify_homology_sphere, collapse_forced, rank_bound_qh_n

_capture = None


@pytest.fixture(autouse=True)
def _terminal(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {detail}"
    if _capture is None:
        print(line)
    else:
        with _capture.disabled():
            print("\n" + line)


def datum(ring, text, chi=2):
    return LagrangianDatum.from_class(ring, text, chi)


# 1 ---------------------------------------------------------------------------------------

def check_table1():
    rows = table1_rows()
    matched = 0
    for row in rows:
        ring = load_preset(row["manifold"])
        L = datum(ring, row["class"])
        cert = cubic_coefficients(ring, L)
        lam = lambda_eigenvalue(ring, L.klass)
        matched += (cert.residual_zero and lam.verified and cert.delta == row["delta"]
                    and lam.lam == row["lambda"])
    deltas = [r["delta"] for r in rows]
    lambdas = [r["lambda"] for r in rows]
    ok = (matched == len(rows) == 10 and deltas == [5, 4, -3, 1, 1, 0, 0, 0, 0, 0]
          and lambdas == [-1, -2, -3, -3, -3, -4, -4, -6, -6, -6])
    return ok, f"discriminant table reproduced, {matched}/{len(rows)} rows match the reference data"


# 2 ---------------------------------------------------------------------------------------

def check_cubic_identities():
    m2, m3 = load_preset("M2"), load_preset("M3")
    a, b = m2.parse("E1-E2"), m3.parse("H-E1-E2-E3")
    ok = (pow(m2, a, 3) == a.scale(Fraction(5)).shift((2,))
          and pow(m3, b, 3) == b.scale(Fraction(-3)).shift((2,)))
    return ok, "(E1-E2)^3 = 5(E1-E2)q^2 in M2, (H-E1-E2-E3)^3 = -3(H-E1-E2-E3)q^2 in M3"


# 3 ---------------------------------------------------------------------------------------

def check_closed_form_grid():
    ring = load_preset("M2")
    L = datum(ring, "E1-E2")
    H, E1, E2 = (ring.parse(s) for s in ("H", "E1", "E2"))
    points = good = 0
    for d, m1, m2 in product(range(-2, 3), repeat=3):
        if m1 == m2:
            continue
        points += 1
        c = H.scale(Fraction(d)) - E1.scale(Fraction(m1)) - E2.scale(Fraction(m2))
        cert = cubic_coefficients(ring, L, c)
        good += (cert.sigma == Fraction(-(m1 + m2), m1 - m2)
                 and cert.tau == Fraction(m1 * m1 - 3 * m1 * m2 + m2 * m2, (m1 - m2) ** 2)
                 and cert.delta == 5 and cert.residual_zero)
    return good == points == 100, f"sigma/tau closed forms and Delta = 5 on {good}/{points} grid points"


# 4 ---------------------------------------------------------------------------------------

def check_presets_verify():
    passed = []
    for name in PRESET_NAMES:
        ring = load_preset(name, verify=False)
        rep = verify_presentation(ring)
        v4 = rep.check("V4")
        if rep.passed and v4.checked == len(ring.basis) ** 3 and v4.skipped == 0:
            passed.append(name)
    return len(passed) == 6, f"V1-V6 incl. exhaustive associativity: {', '.join(passed)}"


# 5 ---------------------------------------------------------------------------------------

def check_quadric_signs():
    got = []
    for n in (2, 4, 6):
        ring = quadric(n)
        got.append(gamma_sphere(ring, datum(ring, "a")).gamma)
    law = [(-1) ** (n * (n - 1) // 2 + 1) * 4 for n in (2, 4, 6)]
    return got == law == [4, -4, 4], (
        f"gamma(n=2,4,6) = {', '.join(str(g) for g in got)} equals the sign law "
        "(-1)^(n(n-1)/2+1)*4 (the listed -4 at n=2 contradicts the law; ledgered)")


# 6 ---------------------------------------------------------------------------------------

def check_fano_hypersurfaces():
    zero = []
    for n, d in ((4, 4), (6, 3), (6, 5), (8, 4)):
        ring = hypersurface_model(n, d)
        zero.append(not pow(ring, ring.parse("a"), 3))
    ring = hypersurface_model(4, 4)
    cert = cubic_coefficients(ring, datum(ring, "a"))
    cm_ok = ring.dimension // 2 % (2 * ring.minimal_chern) == 0
    return all(zero) and cert.delta == 0 and cm_ok, \
        "[L]^3 = 0 for (4,4), (6,3), (6,5), (8,4); Delta = 0 for (4,4) with 2C_M | n"


# 7 ---------------------------------------------------------------------------------------

def check_kunneth():
    ring = kunneth(quadric(2), quadric(2))
    L = datum(ring, "a.a", chi=4)
    cube_ok = pow(ring, L.klass, 3) == L.klass.scale(Fraction(16)).shift((4,))
    cert = cubic_coefficients(ring, L)
    return cube_ok and cert.delta == 4 and verify_presentation(ring).passed, \
        "[SxS]^3 = 16[SxS]q^4 and Delta = 4 for m = 2"


# 8 ---------------------------------------------------------------------------------------

def check_refined_m2():
    m2t, m2 = load_preset("M2T"), load_preset("M2")
    cert = refined_cubic(m2t, datum(m2t, "E1-E2"))
    four_tau = cert.tau_t * 4
    ok = (not cert.sigma_t
          and four_tau == parse_coeff("T^{2E} + 4T^{H-E}", cert.group.monoid())
          and specialize(m2t).table == m2.table
          and str(specialize(four_tau)) == "5q^2")
    return ok, "sigma~ = 0, 4tau~ = T^{2E} + 4T^{H-E}, specialize(M2T) = M2, specialize(4tau~) = 5q^2"


# 9 ---------------------------------------------------------------------------------------

def check_reference_formulas():
    rows = [r for r in refined_rows() if not r.get("literal_display")]
    sums, ok = [], len(rows) == 7
    for row in rows:
        rep = reference_check(row["manifold"], row["class"])
        ok = ok and rep.passed
        sums.append(int(rep.coefficient_sum))
    ok = ok and sums == [4, -3, 1, 1, 0, 0, 0]
    return ok, f"seven refined formulas homogeneous (mu = 4) with coefficient sums {sums}"


# 10 --------------------------------------------------------------------------------------

def check_product_zero():
    m3 = load_preset("M3")
    rep = pair_relation(m3, datum(m3, "H-E1-E2-E3"), datum(m3, "E2-E3"))
    ok = not mul(m3, m3.parse("H-E1-E2-E3"), m3.parse("E2-E3")) and rep.holds and rep.k == 0
    return ok, "[H-E1-E2-E3]*[E2-E3] = 0 in M3"


# 11 --------------------------------------------------------------------------------------

def check_mod4_and_squares():
    gammas, squares, non = [], [], []
    for row in table1_rows():
        ring = load_preset(row["manifold"])
        cert = gamma_sphere(ring, datum(ring, row["class"]))
        gammas.append(cert.gamma)
        (squares if is_perfect_square(cert.delta) else non).append(int(cert.delta))
    ok = (all(g.denominator == 1 and g % 4 in (0, 1) for g in gammas)
          and sorted(squares) == [0, 0, 0, 0, 0, 1, 1, 4] and sorted(non) == [-3, 5])
    return ok, f"gamma mod 4 in {{0,1}}; perfect squares {sorted(squares)}, not {sorted(non)}"


# 12 --------------------------------------------------------------------------------------

# generator lists exactly as displayed, one per (manifold, class)
DISPLAYED_IDEALS = {
    ("M2", "E1-E2"): ["-2p + E1q + E2q + 2uq^2", "E1 - E2"],
    ("M3", "E1-E2"): ["-2p + 2Hq - 2E3q + 2uq^2", "E1 - E2"],
    ("M3", "H-E1-E2-E3"): ["-2p + 3Hq - E1q - E2q - E3q + 4uq^2", "H - E1 - E2 - E3"],
    ("M4", "E1-E2"): ["-2p + 4Hq - E1q - E2q - 2E3q - 2E4q + 2uq^2", "E1 - E2"],
    ("M4", "H-E1-E2-E3"): ["-2p + 3Hq - E1q - E2q - E3q + 2uq^2", "H - E1 - E2 - E3"],
    ("M5", "E1-E2"): ["-2p + 6Hq - 2E1q - 2E2q - 2E3q - 2E4q - 2E5q + 4uq^2", "E1 - E2"],
    ("M5", "H-E1-E2-E3"): ["-2p + 6Hq - 2E1q - 2E2q - 2E3q - 2E4q - 2E5q + 4uq^2",
                           "H - E1 - E2 - E3"],
    ("M6", "2H-E1-E2-E3-E4-E5-E6"): [
        "-2p + 12Hq - 4E1q - 4E2q - 4E3q - 4E4q - 4E5q - 4E6q + 12uq^2",
        "2H - E1 - E2 - E3 - E4 - E5 - E6"],
}


def check_ideals():
    matched, missed, ranks = [], [], []
    for (name, klass), gens in DISPLAYED_IDEALS.items():
        ring = load_preset(name)
        ideal = ideal_of(ring, ring.parse(klass))
        ranks.append(ideal.rank)
        rows = [ring.parse(g).class_vector() for g in gens]
        (matched if same_row_space(ideal.rows, rows) else missed).append(f"{name} {klass}")
    ok = not missed and set(ranks) == {2}
    detail = f"{len(matched)}/{len(DISPLAYED_IDEALS)} displayed ideals match, all ranks 2"
    if missed:
        detail += f"; mismatch: {', '.join(missed)} (displayed generator is not in the ideal)"
    return ok, detail


# 13 --------------------------------------------------------------------------------------

def check_quadalg():
    ok = True
    for s, t in product(range(-50, 51), repeat=2):
        a = qa.QuadraticAlgebraPresentation(s, t)
        d = qa.delta(a)
        nf = qa.normal_form(a)
        ok = ok and d % 4 in (0, 1) and qa.delta(qa.negate_generator(a)) == d
        ok = ok and qa.normal_form(qa.negate_generator(a)) == nf
        for r in range(-10, 11):
            b = qa.change_lift(a, r)
            ok = ok and qa.delta(b) == d and qa.normal_form(b) == nf
    reps = [qa.QuadraticAlgebraPresentation(s, t) for s in range(-6, 7) for t in range(-6, 7)]
    ok = ok and all(qa.isomorphic(a, b) == (qa.normal_form(a) == qa.normal_form(b))
                    for a in reps for b in reps)
    return ok, "Delta invariance on |sigma|,|tau| <= 50, |r| <= 10; Delta mod 4 in {0,1}; iso <=> normal form"


# 14 --------------------------------------------------------------------------------------

def check_specseq():
    ok = rank_bound_qh_n([1, 0, 1], 2, 2) == 2
    branches = [
        classify_homology_sphere(2, 2, False).verdict is Verdict.ISOMORPHIC,
        classify_homology_sphere(3, 6, False).verdict is Verdict.ISOMORPHIC,
        classify_homology_sphere(3, 4, True).verdict is Verdict.ISOMORPHIC,
        classify_homology_sphere(3, 4, False).verdict is Verdict.AMBIGUOUS,
    ]
    collapse = all(collapse_forced([1] + [0] * (n - 1) + [1], m, n)
                   for n in (2, 4, 6, 8) for m in (2, 4, 6))
    return ok and all(branches) and collapse, \
        "rank bound 2 for S^2; four classification branches; forced collapse for even spheres"


CRITERIA = [
    (1, check_table1), (2, check_cubic_identities), (3, check_closed_form_grid),
    (4, check_presets_verify), (5, check_quadric_signs), (6, check_fano_hypersurfaces),
    (7, check_kunneth), (8, check_refined_m2), (9, check_reference_formulas),
    (10, check_product_zero), (11, check_mod4_and_squares), (12, check_ideals),
    (13, check_quadalg), (14, check_specseq),
]

# criterion 12 cannot pass as written: one displayed generator list is not an
# ideal of the shipped ring (see the decisions ledger)
KNOWN_RED = {12}


@pytest.mark.parametrize(
    "number,check",
    [pytest.param(n, c, marks=pytest.mark.xfail(strict=True, reason="displayed M3 ideal has a stray "
                                                  "fundamental-class term; kept red"))
     if n in KNOWN_RED else (n, c) for n, c in CRITERIA],
    ids=[f"criterion{n:02d}" for n, _ in CRITERIA])
def test_criterion(number, check):
    ok, detail = check()
    report(number, ok, detail)
    assert ok, detail


def test_epsilon_used_by_criteria():
    assert [epsilon(n) for n in (2, 4, 6)] == [-1, 1, -1]


if __name__ == "__main__":
    for number, check in CRITERIA:
        report(number, *check())
