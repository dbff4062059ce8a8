import pytest
from hypothesis import given, settings, strategies as st

from qhlag.exactalg import AlgebraError, CoeffElement, Monoid, parse_coeff
from qhlag.lagrangian import LagrangianDatum, PreconditionError
from qhlag.presets import load_preset, refined_rows
from qhlag.qhring import mul
from qhlag.refined import (
    ReferenceMissing, h2_data, orientation_flip_check, quotient_group, reference_check,
    refined_cubic, specialize,
)


def test_quotient_merges_exceptional_pair():
    g = quotient_group(["H", "E1", "E2"], [3, 1, 1], [0, 1, -1])
    assert g.names == ("H", "E")
    assert [g.mu(v) for v in ((1, 0), (0, 1))] == [6, 2]
    assert g.map((0, 1, -1)) == (0, 0)
    assert g.map((1, 1, 0)) == g.map((1, 0, 1)) == (1, 1)


def test_quotient_by_line_class():
    g = quotient_group(["H", "E1", "E2", "E3"], [3, 1, 1, 1], [1, -1, -1, -1])
    assert g.names == ("E1", "E2", "E3")
    assert g.map((1, 0, 0, 0)) == (1, 1, 1)


def test_quotient_names_for_m3():
    names, pairing = h2_data(load_preset("M3"))
    assert names == ("H", "E1", "E2", "E3") and pairing == (3, 1, 1, 1)
    assert quotient_group(names, pairing, [0, 1, -1, 0]).names == ("H", "E", "E3")


def test_quotient_errors():
    with pytest.raises(PreconditionError):
        quotient_group(["H", "E1"], [3, 1], [1, 0])
    with pytest.raises(AlgebraError):
        quotient_group(["A", "B"], [1, -1], [2, 2])


G = quotient_group(["H", "E1", "E2", "E3"], [3, 1, 1, 1], [1, -1, -1, -1])
vec = st.tuples(*[st.integers(-6, 6)] * 4)


@settings(max_examples=300, deadline=None)
@given(vec, vec, st.integers(-5, 5))
def test_quotient_linear_with_exact_kernel(u, v, k):
    assert G.map(tuple(a + k * b for a, b in zip(u, v))) == tuple(
        a + k * b for a, b in zip(G.map(u), G.map(v)))
    in_lattice = all(a == u[0] * r for a, r in zip(u, G.relation))
    assert G.in_kernel(u) == in_lattice
    assert G.mu(G.map(u)) == 2 * sum(a * b for a, b in zip(u, G.ambient_pairing))


def test_refined_cubic_m2(m2t):
    L = LagrangianDatum.from_class(m2t, "E1-E2", 2)
    cert = refined_cubic(m2t, L)
    T = cert.group.monoid()
    assert not cert.sigma_t
    assert cert.tau_t * 4 == parse_coeff("T^{2E} + 4T^{H-E}", T)
    assert cert.delta_t == cert.sigma_t * cert.sigma_t + cert.tau_t * 4
    assert all(cert.checks.values()) and cert.residual_zero
    assert str(specialize(cert.tau_t * 4)) == "5q^2"
    assert orientation_flip_check(m2t, L)


def test_refined_cube_statement(m2t):
    from qhlag.refined import relative_ring, push_element
    L = LagrangianDatum.from_class(m2t, "E1-E2", 2)
    cert = refined_cubic(m2t, L)
    rel = relative_ring(m2t, cert.group)
    x = push_element(L.klass, rel, cert.group.map)
    cube = mul(rel, x, mul(rel, x, x))
    assert cube == x.scale(parse_coeff("T^{2E} + 4T^{H-E}", rel.monoid))


def test_refined_requires_group_ring(m2):
    with pytest.raises(PreconditionError):
        refined_cubic(m2, LagrangianDatum.from_class(m2, "E1-E2", 2))


def test_specialize_presentation_matches_m2(m2, m2t):
    special = specialize(m2t)
    assert special.table == m2.table
    assert str(special.entry(0, 0)[0][0]) == "(1, (3,))"  # p*p = H q^3 + ...


def test_specialize_targets():
    T = Monoid.group(["H", "E"], [3, 1], symbol="T")
    x = parse_coeff("T^{2E} + 4T^{H-E}", T)
    assert str(specialize(x)) == "5q^2"
    assert str(specialize(x, "t", 2)) == "5t^2"
    assert specialize(CoeffElement.scalar(T, 1)) == 1
    with pytest.raises(AlgebraError):
        specialize(parse_coeff("T^{E}", T), "t", 4)


S = Monoid.group(["H", "E1", "E2"], [3, 1, 1])
mono = st.tuples(st.integers(0, 2), st.integers(-1, 2), st.integers(-1, 2)).filter(
    lambda m: any(m) and 3 * m[0] + m[1] + m[2] > 0)
coeffs = st.lists(st.tuples(mono, st.integers(-4, 4)), max_size=3).map(lambda t: CoeffElement(S, t))


@settings(max_examples=200, deadline=None)
@given(coeffs, coeffs)
def test_specialization_is_a_homomorphism(a, b):
    assert specialize(a * b) == specialize(a) * specialize(b)
    assert specialize(a + b) == specialize(a) + specialize(b)


@pytest.mark.parametrize("row", [r for r in refined_rows() if not r.get("literal_display")],
                         ids=lambda r: f"{r['manifold']}:{r['class']}")
def test_reference_formulas(row):
    rep = reference_check(row["manifold"], row["class"])
    assert rep.passed, rep.to_json()
    assert rep.coefficient_sum == rep.expected_delta


def test_m2_display_is_flagged():
    rep = reference_check("M2", "E1-E2")
    assert not rep.homogeneous and not rep.passed
    assert str(rep.derived) == "T^{2E} + 4T^{H-E}"
    assert rep.to_json()["matches_derived"] is False


def test_missing_reference_row():
    with pytest.raises(ReferenceMissing):
        reference_check("M3", "E2-E3")
