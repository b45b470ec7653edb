import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ldptoric import (
    BadWinding,
    DuplicateRay,
    FanValidationError,
    NonPrimitiveRay,
    NotCounterclockwise,
    NotStrictlyConvex,
    RayVector,
    UnimodularMap,
    angular_sort,
    apply_map,
    format_vertices,
    parse_vertices,
    same_cycle,
    twice_area,
    validate_fan,
    validate_ldp_polygon,
)


def V(*pairs):
    return [RayVector(x, y) for x, y in pairs]


def test_validate_fan_accepts_projective_plane():
    fan = validate_fan(V((1, 0), (0, 1), (-1, -1)))
    assert fan.d == 3
    assert fan.rays == tuple(V((1, 0), (0, 1), (-1, -1)))


def test_validate_fan_accepts_any_starting_rotation():
    fan = validate_fan(V((-1, -1), (1, 0), (0, 1)))
    assert fan.d == 3
    assert same_cycle(fan, validate_fan(V((1, 0), (0, 1), (-1, -1))))


def test_fan_cyclic_accessors():
    fan = validate_fan(V((1, 0), (0, 1), (-2, -3)))
    assert fan.ray(1) == RayVector(1, 0)
    assert fan.ray(0) == fan.ray(3) == RayVector(-2, -3)
    assert fan.ray(4) == fan.ray(1)
    assert [fan.cone_det(i) for i in (1, 2, 3)] == [1, 2, 3]
    assert fan.cone_det(0) == fan.cone_det(3)


def test_validate_fan_too_few_rays():
    with pytest.raises(ValueError, match="at least 3"):
        validate_fan(V((1, 0), (-1, 1)))


def test_validate_fan_nonprimitive_index():
    with pytest.raises(NonPrimitiveRay) as exc:
        validate_fan(V((1, 0), (0, 1), (-2, -4)))
    assert exc.value.index == 3
    assert "NonPrimitiveRay(3)" in str(exc.value)


def test_validate_fan_origin_is_nonprimitive():
    with pytest.raises(NonPrimitiveRay) as exc:
        validate_fan(V((1, 0), (0, 0), (0, 1)))
    assert exc.value.index == 2


def test_validate_fan_duplicate_index():
    with pytest.raises(DuplicateRay) as exc:
        validate_fan(V((1, 0), (0, 1), (1, 0)))
    assert exc.value.index == 3


def test_validate_fan_clockwise_pair():
    with pytest.raises(NotCounterclockwise) as exc:
        validate_fan(V((1, 0), (-1, -1), (0, 1)))
    assert exc.value.index == 1


def test_validate_fan_wraparound_pair_checked():
    # rays stay in a half-plane: the offending pair is (last, first)
    with pytest.raises(NotCounterclockwise) as exc:
        validate_fan(V((1, 0), (0, 1), (-1, 0)))
    assert exc.value.index == 3


def test_validate_fan_double_winding():
    # pentagram: consecutive determinants all positive, winds twice
    with pytest.raises(BadWinding) as exc:
        validate_fan(V((1, 0), (-1, 1), (0, -1), (1, 1), (-2, -1)))
    assert exc.value.winding == 2


def test_validation_order_primitivity_before_orientation():
    # both defects present; primitivity is reported first
    with pytest.raises(NonPrimitiveRay):
        validate_fan(V((2, 0), (-1, -1), (0, 1)))


def test_errors_share_base_class():
    for bad in (
        V((1, 0), (0, 1), (-2, -4)),
        V((1, 0), (0, 1), (1, 0)),
        V((1, 0), (-1, -1), (0, 1)),
        V((1, 0), (-1, 1), (0, -1), (1, 1), (-2, -1)),
    ):
        with pytest.raises(FanValidationError):
            validate_fan(bad)
    assert issubclass(FanValidationError, ValueError)


def test_validate_ldp_polygon_examples():
    poly = validate_ldp_polygon(V((1, 0), (0, 1), (-2, -3)))
    assert poly.d == 3
    assert poly.vertices == tuple(V((1, 0), (0, 1), (-2, -3)))

    pentagon = validate_ldp_polygon(V((1, 0), (0, 1), (-1, 0), (1, -3), (2, -3)))
    assert pentagon.d == 5


def test_validate_ldp_polygon_collinear_vertex():
    # (-2, -1) lies on the segment from (0, 1) to (-3, -2)
    with pytest.raises(NotStrictlyConvex) as exc:
        validate_ldp_polygon(V((1, 0), (0, 1), (-2, -1), (-3, -2)))
    assert exc.value.index == 3


def test_valid_fan_that_is_not_a_polygon():
    # valid complete fan, but (0, 1) lies on the segment from (1, 0) to (-1, 2)
    points = V((1, 0), (0, 1), (-1, 2), (-1, -1))
    assert validate_fan(points).d == 4
    with pytest.raises(NotStrictlyConvex) as exc:
        validate_ldp_polygon(points)
    assert exc.value.index == 2

    # valid complete fan with a strictly reflex ray
    reflex = V((4, -1), (1, 1), (-1, 4), (-1, -1))
    assert validate_fan(reflex).d == 4
    with pytest.raises(NotStrictlyConvex) as exc:
        validate_ldp_polygon(reflex)
    assert exc.value.index == 2


def test_twice_area():
    assert twice_area(validate_ldp_polygon(V((1, 0), (0, 1), (-1, -1)))) == 3
    assert twice_area(validate_ldp_polygon(V((1, 0), (0, 1), (-2, -3)))) == 6
    assert twice_area(validate_fan(V((1, 0), (0, 1), (-1, 0), (0, -1)))) == 4
    assert twice_area(validate_ldp_polygon(V((1, 1), (-1, 1), (-1, -1), (1, -1)))) == 8
    assert twice_area(validate_ldp_polygon(V((1, 0), (0, 1), (-1, 0), (1, -3), (2, -3)))) == 11


def test_twice_area_unimodular_invariance():
    rng = random.Random(7)
    points = V((1, 0), (0, 1), (-1, 0), (1, -3), (2, -3))
    poly = validate_ldp_polygon(points)
    for _ in range(50):
        m = UnimodularMap(1, rng.randint(-3, 3), 0, 1)
        image = [apply_map(m, v) for v in points]
        assert twice_area(validate_ldp_polygon(image)) == twice_area(poly)


def test_angular_sort_matches_atan2():
    rng = random.Random(11)
    pts = []
    while len(pts) < 40:
        v = RayVector(rng.randint(-9, 9), rng.randint(-9, 9))
        if math.gcd(v.x, v.y) == 1 and v not in pts:
            pts.append(v)
    expected = sorted(pts, key=lambda v: math.atan2(v.y, v.x) % (2 * math.pi))
    assert angular_sort(pts) == expected


@given(st.permutations([(1, 0), (0, 1), (-1, 0), (1, -3), (2, -3)]))
def test_angular_sort_permutation_invariant(perm):
    pts = V(*perm)
    assert angular_sort(pts) == V((1, 0), (0, 1), (-1, 0), (1, -3), (2, -3))


def test_angular_sort_output_validates():
    pts = V((2, -3), (1, -3), (1, 0), (-1, 0), (0, 1))
    assert validate_ldp_polygon(angular_sort(pts)).d == 5


def test_same_cycle():
    a = validate_fan(V((1, 0), (0, 1), (-1, -1)))
    b = validate_fan(V((0, 1), (-1, -1), (1, 0)))
    assert same_cycle(a, b)
    assert same_cycle(b, a)
    c = validate_fan(V((1, 0), (0, 1), (-1, -2)))
    assert not same_cycle(a, c)
    square = validate_fan(V((1, 0), (0, 1), (-1, 0), (0, -1)))
    assert not same_cycle(a, square)


def test_parse_vertices():
    assert parse_vertices("1,0;0,1;-2,-3") == V((1, 0), (0, 1), (-2, -3))
    assert parse_vertices(" 1 , 0 ; 0 , 1 ; -2 , -3 ") == V((1, 0), (0, 1), (-2, -3))


def test_parse_vertices_bad_tokens():
    with pytest.raises(ValueError, match=r"bad vertex token '1'"):
        parse_vertices("1;0,1")
    with pytest.raises(ValueError, match=r"bad vertex token 'a,b'"):
        parse_vertices("1,0;a,b")
    with pytest.raises(ValueError, match="bad vertex token"):
        parse_vertices("1,0;;0,1")


def test_format_parse_roundtrip():
    pts = V((1, 0), (0, 1), (-1, 0), (1, -3), (2, -3))
    assert parse_vertices(format_vertices(pts)) == pts
    assert format_vertices(pts) == "1,0;0,1;-1,0;1,-3;2,-3"
