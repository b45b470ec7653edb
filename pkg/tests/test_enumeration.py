import pytest

from ldptoric import (
    BoxSpec,
    CatalogEntry,
    analyze,
    canonical_form,
    classify_catalog,
    enumerate_ldp,
    enumerate_raw,
    primitive_points,
    validate_ldp_polygon,
    verify_catalog,
)
from ldptoric.enumeration import _is_alternating_d5

from oracles import brute_force_classes


def test_box_spec_rejects_nonpositive():
    with pytest.raises(ValueError):
        BoxSpec(0)
    with pytest.raises(ValueError):
        BoxSpec(-2)
    assert BoxSpec(3).n == 3


def test_primitive_points_box_one():
    pts = [v.as_tuple() for v in primitive_points(1)]
    assert pts == [
        (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
    ]


def test_primitive_points_skip_imprimitive():
    pts = primitive_points(2)
    tuples = {v.as_tuple() for v in pts}
    assert (2, 2) not in tuples
    assert (0, 2) not in tuples
    assert (2, 1) in tuples
    assert len(pts) == 16


def test_box_one_class_count():
    entries = enumerate_ldp(1)
    assert len(entries) == 11
    assert sum(1 for e in entries if e.singular_count == 0) == 5


def test_box_two_class_count(box2_catalog):
    assert len(box2_catalog) == 156


def test_box_one_matches_brute_force_oracle():
    got = {e.vertices for e in enumerate_ldp(1)}
    want = brute_force_classes(1)
    assert got == want


def test_box_two_matches_brute_force_oracle(box2_catalog):
    got = {e.vertices for e in box2_catalog}
    want = brute_force_classes(2)
    assert got == want


def test_entries_sorted_and_deterministic(box1_catalog):
    again = enumerate_ldp(BoxSpec(1), jobs=2)
    assert [e.vertices for e in box1_catalog] == [e.vertices for e in again]
    keys = [(e.d, e.vertices) for e in box1_catalog]
    assert keys == sorted(keys)


def test_box_monotonicity(box1_catalog, box2_catalog):
    small = {e.vertices for e in box1_catalog}
    large = {e.vertices for e in box2_catalog}
    assert small <= large


def test_entry_data_matches_reanalysis(box1_catalog):
    for entry in box1_catalog:
        poly = validate_ldp_polygon(entry.vertices)
        rep = analyze(poly.cycle)
        assert entry.d == rep.d
        assert entry.picard_number == rep.picard_number
        assert entry.dets == rep.dets
        assert entry.f_values == rep.f_values
        assert entry.singular_count == rep.singular_count
        assert entry.family is None and entry.three_case is None
        # stored list is the canonical representative of its class
        assert tuple(v.as_tuple() for v in canonical_form(poly).vertices) == entry.vertices


def test_raw_cycles_are_rotations_of_valid_polygons():
    raws = enumerate_raw(1)
    assert len(raws) == 64
    for chain in raws:
        validate_ldp_polygon(chain)


def test_classify_catalog_fills_expected_fields(box2_catalog):
    classified = classify_catalog(box2_catalog)
    assert [e.vertices for e in classified] == [e.vertices for e in box2_catalog]
    for entry in classified:
        if entry.singular_count == 0 or entry.singular_count > 3:
            assert entry.family is None
            assert entry.three_case is None
        if entry.singular_count in (1, 2):
            assert entry.family is not None
            assert entry.three_case is None
        if entry.singular_count == 3:
            assert entry.three_case in ("picard_le_two", "family_d5", "blowup_of_picard3")
            if entry.d == 5:
                assert entry.family is not None
                assert entry.family.family == "three5"


def test_family_tags_match_vertex_count(box2_catalog):
    tag_by_d = {
        1: {3: "dais1", 4: "dais2", 5: "dais3"},
        2: {3: "two1", 4: "two2", 5: "two3"},
    }
    for entry in classify_catalog(box2_catalog):
        if entry.singular_count in (1, 2):
            assert entry.family.family == tag_by_d[entry.singular_count][entry.d]


def test_verify_catalog_box_one(box1_catalog):
    report = verify_catalog(box1_catalog)
    assert report.ok
    assert report.total == 11
    assert report.one_singular_unmatched == []
    assert report.two_singular_unmatched == []
    assert report.three_singular_unclassified == []
    assert report.alternating_d5 == []
    assert report.noncontiguous == []
    assert report.half_plane_violations == []


def test_verify_catalog_box_two(box2_catalog):
    report = verify_catalog(box2_catalog)
    assert report.ok
    assert report.total == 156


def test_verification_report_serialization(box1_catalog):
    data = verify_catalog(box1_catalog).to_dict()
    assert list(data) == [
        "total",
        "one_singular_unmatched",
        "two_singular_unmatched",
        "three_singular_unclassified",
        "alternating_d5",
        "noncontiguous",
        "half_plane_violations",
        "ok",
        "note",
    ]
    assert data["ok"] is True
    assert data["total"] == 11
    assert "box" in data["note"]


def test_alternating_pattern_detector():
    assert _is_alternating_d5((1, 3, 5), 5)
    assert _is_alternating_d5((2, 4, 1), 5)  # rotation of {1, 3, 5}
    assert _is_alternating_d5((3, 5, 2), 5)
    # on a 5-cycle, any non-contiguous 3-subset is a rotation of {1, 3, 5}
    assert _is_alternating_d5((1, 3, 4), 5)
    assert not _is_alternating_d5((1, 2, 3), 5)
    assert not _is_alternating_d5((2, 3, 4), 5)
    assert not _is_alternating_d5((4, 5, 1), 5)
    assert not _is_alternating_d5((1, 3, 5), 6)
    assert not _is_alternating_d5((1, 3), 5)


def test_catalog_has_expected_d_range(box2_catalog):
    ds = sorted({e.d for e in box2_catalog})
    assert min(ds) == 3
    assert max(ds) >= 6
    by_sc = {}
    for e in box2_catalog:
        by_sc.setdefault(e.singular_count, 0)
        by_sc[e.singular_count] += 1
    # no 2-singular class beyond d=5, no 3-singular class beyond d=6
    assert all(e.d <= 5 for e in box2_catalog if e.singular_count == 2)
    assert all(e.d <= 6 for e in box2_catalog if e.singular_count == 3)


def test_smooth_classes_in_box_one(box1_catalog):
    smooth = [e for e in box1_catalog if e.singular_count == 0]
    assert len(smooth) == 5
    assert sorted(e.d for e in smooth) == [3, 4, 4, 5, 6]
