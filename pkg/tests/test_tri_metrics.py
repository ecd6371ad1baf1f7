import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cevian.core_model import (
    NegativeSquaredDistance,
    UnitComponent,
    validate_triangle,
)
from cevian import coord_oracle as oracle
from cevian.tri_centers import TRI_CENTER_KINDS, center_components
from cevian.tri_metrics import (
    area_determinant,
    center_pair_table,
    circumradius,
    dist_between_centers,
    dist_circumcenter_to_center,
    dist_origin_to_center,
    dist_vertex_to_center,
    dist_vertex_to_foot,
    ict_altitudes,
    ict_areas,
    inequality_slacks,
    k_invariant,
    transcribed_closed_forms,
    _sqrt_clamped,
)

R345 = validate_triangle(3, 4, 5)
EQUI = validate_triangle(2, 2, 2)
SCALENE = validate_triangle(4, 6, 7)


def test_basic_invariants_345():
    assert k_invariant(R345) == pytest.approx(576.0)       # 16 * area^2
    assert area_determinant(R345) == pytest.approx(6.0)
    assert circumradius(R345) == pytest.approx(2.5)


def test_distance_engine_known_values():
    comps = {k: center_components(k, R345) for k in TRI_CENTER_KINDS}
    gi = dist_between_centers(comps["G"], comps["I"], R345)
    assert gi == pytest.approx(1 / 3, rel=1e-12)
    qi = dist_between_centers(comps["Q"], comps["I"], R345)
    assert qi == pytest.approx(math.sqrt(1.25), rel=1e-12)
    # right angle: Q at the midpoint of the hypotenuse, H at C, so QH = R
    qh = dist_between_centers(comps["Q"], comps["H"], R345)
    assert qh == pytest.approx(2.5, rel=1e-12)


def test_vertex_and_foot_distances():
    g = center_components("G", R345)
    # A -> foot of the A-cevian through G = the midpoint of BC
    assert dist_vertex_to_foot("A", g, R345) == pytest.approx(
        0.5 * math.sqrt(73), rel=1e-12)
    # AG cuts the median 2:1
    assert dist_vertex_to_center("A", g, R345) == pytest.approx(
        math.sqrt(73) / 3, rel=1e-12)
    i = center_components("I", R345)
    assert dist_vertex_to_center("C", i, R345) == pytest.approx(
        math.sqrt(2), rel=1e-12)


def test_foot_undefined_when_component_is_one():
    h = center_components("H", R345)  # alpha_C = 1: the cevian degenerates
    with pytest.raises(UnitComponent):
        dist_vertex_to_foot("C", h, R345)


def test_circumcenter_distance_agrees_with_pair_engine():
    comps = {k: center_components(k, R345) for k in ("Q", "I")}
    direct = dist_circumcenter_to_center(comps["I"], R345)
    via_pair = dist_between_centers(comps["Q"], comps["I"], R345)
    assert direct == pytest.approx(via_pair, rel=1e-12)


def test_origin_form_matches_vertex_form():
    i = center_components("I", R345)
    # origin at vertex A: distances to (A, B, C) are (0, c, b)
    d = dist_origin_to_center(0.0, 5.0, 4.0, i, R345)
    assert d == pytest.approx(dist_vertex_to_center("A", i, R345), rel=1e-12)


def test_pair_table_covers_all_21_pairs_and_matches_oracle():
    table = center_pair_table(SCALENE)
    assert len(table) == 21
    tri = oracle.embed_triangle(SCALENE)
    pts = {k: oracle.definitional_center(tri, k) for k in TRI_CENTER_KINDS}
    for rep in table:
        want = float(np.linalg.norm(pts[rep.pair[0]] - pts[rep.pair[1]]))
        assert rep.distance == pytest.approx(want, abs=1e-12 + 1e-9 * 17.0)
        assert rep.squared_distance == pytest.approx(rep.distance ** 2)


def test_incenter_subareas_and_altitudes():
    i = center_components("I", R345)
    areas = ict_areas(i, R345)
    assert areas == pytest.approx(
        {"s_abp": 2.5, "s_bcp": 1.5, "s_cap": 2.0})
    assert sum(areas.values()) == pytest.approx(6.0)
    # every altitude from the incenter is the inradius
    alts = ict_altitudes(i, R345)
    assert list(alts.values()) == pytest.approx([1.0, 1.0, 1.0])


def test_centroid_altitudes_are_third_of_triangle_altitudes():
    g = center_components("G", R345)
    alts = ict_altitudes(g, R345)
    assert alts["h_bc"] == pytest.approx(4.0 / 3)
    assert alts["h_ca"] == pytest.approx(1.0)
    assert alts["h_ab"] == pytest.approx(0.8)


def test_inequality_slacks_on_345():
    slacks = inequality_slacks(R345)
    assert slacks["QG"] == pytest.approx(6.25 - 50.0 / 9, rel=1e-12)
    assert slacks["QI"] == pytest.approx(1.25, rel=1e-12)
    assert slacks["QH"] == pytest.approx(6.25, rel=1e-12)
    assert slacks["GI"] == pytest.approx(144.0, rel=1e-12)
    assert all(v >= 0 for v in slacks.values())


def test_slacks_vanish_at_equilateral():
    for key, slack in inequality_slacks(EQUI).items():
        assert abs(slack) < 1e-9, key


sides_strategy = st.tuples(
    st.floats(min_value=0.2, max_value=5.0),
    st.floats(min_value=0.2, max_value=5.0),
    st.floats(min_value=0.2, max_value=5.0),
).filter(lambda t: t[0] + t[1] > t[2] * 1.01
         and t[1] + t[2] > t[0] * 1.01
         and t[2] + t[0] > t[1] * 1.01)


@given(sides_strategy)
def test_slacks_never_negative(raw):
    sides = validate_triangle(*raw)
    scale = sides.perimeter ** 4
    for key, slack in inequality_slacks(sides).items():
        assert slack >= -1e-12 * max(1.0, scale), key


@given(sides_strategy)
def test_transcribed_forms_match_engine(raw):
    """Compared on squared distances: near coincident centers (equilateral
    QG, QI) the square root turns one ulp under the radical into ~1e-8, so a
    plain relative test on the roots is meaningless there."""
    sides = validate_triangle(*raw)
    comps = {k: center_components(k, sides) for k in TRI_CENTER_KINDS}
    forms = transcribed_closed_forms(sides)
    pairs = {"IE_A": ("I", "E_A"), "IE_B": ("I", "E_B"), "IE_C": ("I", "E_C"),
             "E_AE_B": ("E_A", "E_B"), "E_BE_C": ("E_B", "E_C"),
             "E_CE_A": ("E_C", "E_A"), "QG": ("Q", "G"), "QI": ("Q", "I")}
    scale2 = sides.perimeter ** 2
    for key, (k1, k2) in pairs.items():
        d2 = dist_between_centers(comps[k1], comps[k2], sides) ** 2
        f2 = forms[key] ** 2
        assert abs(d2 - f2) <= 1e-9 * max(d2, f2) + 1e-13 * scale2, key


def test_equilateral_excenter_spacing():
    forms = transcribed_closed_forms(EQUI)
    assert forms["E_AE_B"] == pytest.approx(4.0, rel=1e-12)  # = 2a


def test_sqrt_clamp_window():
    assert _sqrt_clamped(-1e-15, 1.0) == 0.0
    with pytest.raises(NegativeSquaredDistance):
        _sqrt_clamped(-1e-3, 1.0)
