import math

import pytest
from hypothesis import given, strategies as st

from cevian.core_model import (
    CevaViolation,
    Components3,
    Components4,
    DegenerateDenominator,
    FACES,
    FaceTriangleInequalityViolated,
    IRVector3,
    InconsistentFaces,
    NonPositiveLength,
    NotRealizable,
    PowerIncenter,
    Tolerance,
    TriangleInequalityViolated,
    TriangleSides,
    component_difference,
    components_from_ir3,
    concurrency_defect,
    edge_polynomials,
    face_components_from_tetra,
    fractional_ratio_determinant,
    ir_from_components3,
    shared_edge_residuals,
    tetra_components_from_face_pair,
    validate_tetrahedron,
    validate_triangle,
    vertex_foot_ratios3,
    vertex_foot_ratios4,
)


# ---------------------------------------------------------------- validation

def test_valid_triangle_accepted():
    sides = validate_triangle(3, 4, 5)
    assert sides.semiperimeter == 6.0
    assert sides.perimeter == 12.0
    assert sides.as_tuple() == (3.0, 4.0, 5.0)


@pytest.mark.parametrize("bad", [(0, 1, 1), (-2, 3, 4), (1, float("nan"), 1)])
def test_nonpositive_or_nonfinite_side_rejected(bad):
    with pytest.raises(NonPositiveLength):
        validate_triangle(*bad)


@pytest.mark.parametrize("bad", [(1, 1, 2), (1, 2, 1), (5, 2, 2), (1, 1, 2.0000001)])
def test_triangle_inequality_rejected(bad):
    with pytest.raises(TriangleInequalityViolated):
        validate_triangle(*bad)


def test_tetra_face_inequality_rejected():
    with pytest.raises(FaceTriangleInequalityViolated):
        validate_tetrahedron(10, 1, 1, 1, 1, 1)


def test_flat_tetra_rejected():
    # the six distances of a unit square with its diagonals: realizable only
    # in the plane
    s = math.sqrt(2.0)
    with pytest.raises(NotRealizable):
        validate_tetrahedron(1, s, 1, 1, 1, s)


def test_edge_accessors():
    edges = validate_tetrahedron(3, 4, 5, 5, 6, 7)
    assert edges.length("a", "b") == 3.0
    assert edges.length("b", "d") == edges.length("d", "b") == 7.0
    face = edges.face_sides("ABC")
    # opposite-vertex convention: a = BC, b = CA, c = AB
    assert face.as_tuple() == (5.0, 4.0, 3.0)


def test_gram_term_positive_for_realizable_input():
    polys = edge_polynomials((3, 4, 5, 5, 6, 7))
    assert polys["t1"] - polys["t2"] - polys["t3"] > 0.0


# ---------------------------------------------------------------- components

def test_components_renormalize():
    c = Components3(2.0, 4.0, 6.0)
    assert math.isclose(sum(c.as_tuple()), 1.0, rel_tol=0, abs_tol=1e-15)
    assert math.isclose(c.alpha_c, 0.5)


def test_components_degenerate_sum():
    with pytest.raises(DegenerateDenominator):
        Components3(1.0, -2.0, 1.0)


def test_components4_vertex_lookup():
    c = Components4(1, 2, 3, 4)
    assert c.of("D") == pytest.approx(0.4)
    with pytest.raises(ValueError):
        c.of("E")


def test_power_incenter_token():
    assert str(PowerIncenter(2.0)) == "power:2"
    assert str(PowerIncenter(1.5)) == "power:1.5"


def test_tolerance_close():
    tol = Tolerance()
    assert tol.close(1.0, 1.0 + 1e-12)
    assert not tol.close(1.0, 1.001)


# ---------------------------------------------------------- ratio conversions

def test_ceva_violation_rejected():
    with pytest.raises(CevaViolation):
        IRVector3(1.0, 1.0, 2.0)


def test_ir_reciprocals():
    ir = IRVector3(2.0, 4.0, 0.125)
    assert ir.lambda_ba == pytest.approx(0.5)
    assert ir.lambda_cb == pytest.approx(0.25)
    assert ir.lambda_ac == pytest.approx(8.0)


simplex3 = st.tuples(
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.05, max_value=1.0),
)


@given(simplex3)
def test_ir_component_roundtrip(raw):
    c = Components3(*raw)
    ir = ir_from_components3(c)
    assert ir.lambda_ab * ir.lambda_bc * ir.lambda_ca == pytest.approx(1.0)
    back = components_from_ir3(ir)
    for x, y in zip(c.as_tuple(), back.as_tuple()):
        assert x == pytest.approx(y, abs=1e-12)


@given(simplex3)
def test_foot_ratio_identities(raw):
    """The integral ratios along the three cevians sum to 2, the reciprocal
    fractions sum to 1, and the three fractional ratios satisfy the
    product-minus-sum determinant identity."""
    c = Components3(*raw)
    r = vertex_foot_ratios3(c)
    assert r["kap_al"] + r["kap_bm"] + r["kap_cn"] == pytest.approx(2.0)
    rec = sum(1.0 / (1.0 + r[k]) for k in ("lam_al", "lam_bm", "lam_cn"))
    assert rec == pytest.approx(1.0)
    assert fractional_ratio_determinant(
        r["lam_al"], r["lam_bm"], r["lam_cn"]) == pytest.approx(0.0, abs=1e-9)


simplex4 = st.tuples(
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.05, max_value=1.0),
    st.floats(min_value=0.05, max_value=1.0),
)


@given(simplex4)
def test_foot_ratio_sum_tetra(raw):
    r = vertex_foot_ratios4(Components4(*raw))
    assert sum(r.values()) == pytest.approx(3.0)


# ------------------------------------------------------- face decompositions

@given(simplex4)
def test_face_pair_reassembly(raw):
    beta = Components4(*raw)
    f1 = face_components_from_tetra(beta, "BCD")
    f2 = face_components_from_tetra(beta, "CDA")
    back = tetra_components_from_face_pair(f1, f2)
    for x, y in zip(beta.as_tuple(), back.as_tuple()):
        assert x == pytest.approx(y, abs=1e-10)


def test_face_components_sum_to_one():
    beta = Components4(0.1, 0.2, 0.3, 0.4)
    for face in FACES:
        f = face_components_from_tetra(beta, face)
        assert sum(f.as_tuple()) == pytest.approx(1.0)


def test_shared_edge_residuals_vanish_for_consistent_faces():
    beta = Components4(0.1, 0.2, 0.3, 0.4)
    faces = {f: face_components_from_tetra(beta, f) for f in FACES}
    res = shared_edge_residuals(faces)
    assert len(res) == 6
    assert max(res.values()) < 1e-12
    assert concurrency_defect(faces) < 1e-12


def test_tampered_faces_detected():
    beta = Components4(0.1, 0.2, 0.3, 0.4)
    faces = {f: face_components_from_tetra(beta, f) for f in FACES}
    v = faces["ABC"].as_tuple()
    faces["ABC"] = Components3(v[0] * 1.3, v[1], v[2])
    assert concurrency_defect(faces) > 1e-3


def test_inconsistent_face_pair_raises():
    beta = Components4(0.1, 0.2, 0.3, 0.4)
    f1 = face_components_from_tetra(beta, "BCD")
    bad = Components3(0.5, 0.3, 0.2)
    with pytest.raises(InconsistentFaces):
        tetra_components_from_face_pair(f1, bad)


def test_component_difference_sums_to_zero():
    d = component_difference(Components3(1, 2, 3), Components3(3, 2, 1))
    assert sum(d.values) == pytest.approx(0.0, abs=1e-15)
