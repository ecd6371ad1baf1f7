import math

import numpy as np
import pytest

from cevian.core_model import (
    RightAngleOrthocenter,
    ZeroComponent,
    validate_triangle,
)
from cevian import coord_oracle as oracle
from cevian.tri_centers import (
    TRI_CENTER_KINDS,
    center_components,
    center_ir,
    components_via_ratios,
    euler_relation,
    excenter_segment_ratio,
)

R345 = validate_triangle(3, 4, 5)
EQUI = validate_triangle(2, 2, 2)
SCALENE = validate_triangle(4, 6, 7)

TRIANGLES = [
    R345, EQUI, SCALENE,
    validate_triangle(0.3, 0.4, 0.5),
    validate_triangle(5, 5, 6),
    validate_triangle(2, 3, 4),
]


def test_known_components_on_345():
    assert center_components("G", R345).as_tuple() == (1 / 3, 1 / 3, 1 / 3)
    assert center_components("I", R345).as_tuple() == pytest.approx(
        (0.25, 1 / 3, 5 / 12))
    # right angle at C puts the orthocenter exactly at C and the circumcenter
    # at the midpoint of AB; the polynomial weights hit those exactly
    assert center_components("H", R345).as_tuple() == (0.0, 0.0, 1.0)
    assert center_components("Q", R345).as_tuple() == (0.5, 0.5, 0.0)


def test_excenter_components_sign_pattern():
    ea = center_components("E_A", R345).as_tuple()
    assert ea == pytest.approx((-0.5, 2 / 3, 5 / 6))
    for kind, idx in (("E_A", 0), ("E_B", 1), ("E_C", 2)):
        comps = center_components(kind, R345).as_tuple()
        assert comps[idx] < 0
        assert sum(comps) == pytest.approx(1.0)


def test_unknown_kind_rejected():
    with pytest.raises(Exception):
        center_components("X", R345)


@pytest.mark.parametrize("sides", TRIANGLES)
@pytest.mark.parametrize("kind", TRI_CENTER_KINDS)
def test_components_realize_definitional_centers(sides, kind):
    tri = oracle.embed_triangle(sides)
    realized = oracle.point_from_components(tri, center_components(kind, sides))
    want = oracle.definitional_center(tri, kind)
    assert np.linalg.norm(realized - want) < 1e-12 + 1e-9 * sides.perimeter


def test_incenter_ir_is_side_quotients():
    ir = center_ir("I", SCALENE)
    a, b, c = SCALENE.as_tuple()
    assert ir.as_tuple() == pytest.approx((b / a, c / b, a / c))


@pytest.mark.parametrize("sides", [SCALENE, EQUI, validate_triangle(2, 3, 4)])
@pytest.mark.parametrize("kind", TRI_CENTER_KINDS)
def test_ir_consistent_with_components(sides, kind):
    try:
        ir = center_ir(kind, sides)
    except (RightAngleOrthocenter, ZeroComponent):
        pytest.skip("ratio vector undefined here")
    assert ir.lambda_ab * ir.lambda_bc * ir.lambda_ca == pytest.approx(1.0)
    via = components_via_ratios(kind, sides)
    direct = center_components(kind, sides)
    for x, y in zip(via.as_tuple(), direct.as_tuple()):
        assert x == pytest.approx(y, abs=1e-12)


def test_right_angle_makes_ratio_vectors_degenerate():
    # H sits at vertex C, so its cevian ratios blow up; Q lands on side AB
    with pytest.raises(RightAngleOrthocenter):
        center_ir("H", R345)
    with pytest.raises(ZeroComponent):
        center_ir("Q", R345)


def test_euler_line_ratio():
    out = euler_relation(SCALENE)
    assert out["gh_over_gq"] == pytest.approx(-2.0, abs=1e-12)
    assert out["collinearity_residual"] < 1e-12 * SCALENE.perimeter


def test_euler_relation_degenerate_at_equilateral():
    # G = H = Q: the ratio is reported by convention, the residual vanishes
    out = euler_relation(EQUI)
    assert out["gh_over_gq"] == -2.0
    assert out["collinearity_residual"] == 0.0


def test_excenter_segment_ratio_values():
    assert excenter_segment_ratio(R345) == pytest.approx(0.5)
    assert excenter_segment_ratio(EQUI) == pytest.approx(1 / 3)
