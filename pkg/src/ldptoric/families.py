"""Parametric families of LDP polygons with at most three singular points.

Seven families cover every class with one or two singular points and the
five-vertex classes with three:

  dais1   [(1,-1), (p,1), (-1,0)]                      d=3, one singular point
  dais2   [(1,-1), (p,1), (p-1,1), (-1,0)]             d=4, one singular point
  dais3   [(1,-1), (p,1), (p-1,1), (-1,0), (0,-1)]     d=5, one singular point
  two1    [(1,0), (0,1), (-p,-q)]                      d=3, two singular points
  two2    [(1,0), (0,1), (-1,p), (q,r)]                d=4, two singular points
  two3    [(1,0), (0,1), (-1,p+1), (-1,p), (q,r)]      d=5, two singular points
  three5  [(1,0), (0,1), (-1,p), (q,r), (s,t)]         d=5, three singular points

identify() decides membership for a concrete polygon; classify_three() sorts
the three-singular-point classes into the cases that exhaust them for d <= 6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import RayVector, apply_map, det2, solve_map
from .polygon import (
    FanValidationError,
    LdpPolygon,
    twice_area,
    validate_ldp_polygon,
)
from .surface import analyze, blow_down, blow_down_candidates
from .equivalence import are_equivalent

FAMILY_TAGS = ("dais1", "dais2", "dais3", "two1", "two2", "two3", "three5")

_PARAM_FIELDS = {
    "dais1": ("p",),
    "dais2": ("p",),
    "dais3": ("p",),
    "two1": ("p", "q"),
    "two2": ("p", "q", "r"),
    "two3": ("p", "q", "r"),
    "three5": ("p", "q", "r", "s", "t"),
}

_EXPECTED_SINGULAR = {
    "dais1": 1,
    "dais2": 1,
    "dais3": 1,
    "two1": 2,
    "two2": 2,
    "two3": 2,
    "three5": 3,
}


class InvalidParams(ValueError):
    def __init__(self, family: str, constraint: str):
        self.family = family
        self.constraint = constraint
        super().__init__(f"invalid parameters for {family}: violates {constraint}")


@dataclass(frozen=True, order=True)
class FamilyParams:
    """A family tag plus exactly the integer parameters that tag requires."""

    family: str
    p: int | None = None
    q: int | None = None
    r: int | None = None
    s: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.family!r}")
        required = _PARAM_FIELDS[self.family]
        for name in ("p", "q", "r", "s", "t"):
            value = getattr(self, name)
            if name in required and value is None:
                raise ValueError(f"family {self.family} requires parameter {name}")
            if name not in required and value is not None:
                raise ValueError(f"family {self.family} takes no parameter {name}")

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in _PARAM_FIELDS[self.family])

    def to_dict(self) -> dict:
        out: dict = {"family": self.family}
        for name in _PARAM_FIELDS[self.family]:
            out[name] = getattr(self, name)
        return out


@dataclass(frozen=True)
class FamilyInstance:
    params: FamilyParams
    polygon: LdpPolygon


def _constraints(fp: FamilyParams) -> list[tuple[str, bool]]:
    p, q, r, s, t = fp.p, fp.q, fp.r, fp.s, fp.t
    if fp.family in ("dais1", "dais2", "dais3"):
        return [("p >= 1", p >= 1)]
    if fp.family == "two1":
        return [
            ("p >= 2", p >= 2),
            ("q >= 2", q >= 2),
            ("gcd(p, q) == 1", math.gcd(p, q) == 1),
        ]
    if fp.family == "two2":
        return [
            ("p <= 1", p <= 1),
            ("r <= -p*q - 2", r <= -p * q - 2),
            ("r <= -2", r <= -2),
            ("r <= -q - 1", r <= -q - 1),
            ("r <= q - p*q - 1", r <= q - p * q - 1),
            ("gcd(q, r) == 1", math.gcd(q, r) == 1),
        ]
    if fp.family == "two3":
        return [
            ("p <= 0", p <= 0),
            ("q >= 1", q >= 1),
            ("q <= -r - 1", q <= -r - 1),
            ("gcd(q, r) == 1", math.gcd(q, r) == 1),
        ]
    # three5
    return [
        ("p <= 1", p <= 1),
        ("r <= -1", r <= -1),
        ("r <= -p*q - 2", r <= -p * q - 2),
        ("r <= q - p*q - 1", r <= q - p * q - 1),
        (
            "r <= -p*q + q*t - r*s + p*s + t - 1",
            r <= -p * q + q * t - r * s + p * s + t - 1,
        ),
        ("t <= -2", t <= -2),
        ("t <= -s - 1", t <= -s - 1),
        ("t <= q*t - r*s + r - 1", t <= q * t - r * s + r - 1),
        ("q*t - r*s >= 2", q * t - r * s >= 2),
        ("gcd(q, r) == 1", math.gcd(q, r) == 1),
        ("gcd(s, t) == 1", math.gcd(s, t) == 1),
    ]


def check_params(fp: FamilyParams) -> bool:
    """True iff the parameters satisfy every constraint of their family."""
    return all(ok for _, ok in _constraints(fp))


def _family_vertices(fp: FamilyParams) -> list[tuple[int, int]]:
    p, q, r, s, t = fp.p, fp.q, fp.r, fp.s, fp.t
    if fp.family == "dais1":
        return [(1, -1), (p, 1), (-1, 0)]
    if fp.family == "dais2":
        return [(1, -1), (p, 1), (p - 1, 1), (-1, 0)]
    if fp.family == "dais3":
        return [(1, -1), (p, 1), (p - 1, 1), (-1, 0), (0, -1)]
    if fp.family == "two1":
        return [(1, 0), (0, 1), (-p, -q)]
    if fp.family == "two2":
        return [(1, 0), (0, 1), (-1, p), (q, r)]
    if fp.family == "two3":
        return [(1, 0), (0, 1), (-1, p + 1), (-1, p), (q, r)]
    return [(1, 0), (0, 1), (-1, p), (q, r), (s, t)]


def generate(fp: FamilyParams) -> FamilyInstance:
    """Build and validate the family polygon; raise InvalidParams naming the
    first violated constraint when the parameters fall outside the family."""
    for name, ok in _constraints(fp):
        if not ok:
            raise InvalidParams(fp.family, name)
    polygon = validate_ldp_polygon(_family_vertices(fp))
    report = analyze(polygon.cycle)
    # The constraint systems are exactly the family membership conditions, so
    # a wrong singular count here is an internal error, not bad input.
    expected = _EXPECTED_SINGULAR[fp.family]
    if not report.is_log_del_pezzo or report.singular_count != expected:
        raise AssertionError(
            f"family {fp.family}{fp.as_tuple()} produced singular count "
            f"{report.singular_count}, expected {expected}"
        )
    return FamilyInstance(fp, polygon)


_E1 = RayVector(1, 0)
_E2 = RayVector(0, 1)


def _basis_readings(poly: LdpPolygon) -> list[tuple[RayVector, ...]]:
    """Vertex cycles of `poly` remapped so the leading two rays become the
    standard basis: one reading per adjacent determinant-1 ray pair, in both
    cycle orientations.  Every equivalence onto a polygon whose list starts
    (1,0), (0,1) shows up among these readings."""
    mirrored = tuple(RayVector(v.x, -v.y) for v in reversed(poly.vertices))
    readings: list[tuple[RayVector, ...]] = []
    for cyc in (poly.vertices, mirrored):
        d = len(cyc)
        for shift in range(d):
            rot = cyc[shift:] + cyc[:shift]
            if det2(rot[0], rot[1]) != 1:
                continue
            m = solve_map(rot[0], rot[1], _E1, _E2)
            assert m is not None  # determinant-1 pair onto a basis is always integral
            readings.append(tuple(apply_map(m, v) for v in rot))
    return readings


def _template_candidates(poly: LdpPolygon, tag: str) -> set[FamilyParams]:
    out: set[FamilyParams] = set()
    for rd in _basis_readings(poly):
        if tag == "two1":
            out.add(FamilyParams("two1", p=-rd[2].x, q=-rd[2].y))
        elif tag == "two2":
            if rd[2].x == -1:
                out.add(FamilyParams("two2", p=rd[2].y, q=rd[3].x, r=rd[3].y))
        elif tag == "two3":
            if rd[2].x == -1 and rd[3].x == -1 and rd[2].y == rd[3].y + 1:
                out.add(FamilyParams("two3", p=rd[3].y, q=rd[4].x, r=rd[4].y))
        elif tag == "three5":
            if rd[2].x == -1:
                out.add(
                    FamilyParams(
                        "three5", p=rd[2].y, q=rd[3].x, r=rd[3].y, s=rd[4].x, t=rd[4].y
                    )
                )
    return out


def _within_bound(fp: FamilyParams, bound: int) -> bool:
    return all(abs(v) <= bound for v in fp.as_tuple())


def identify(poly: LdpPolygon, bound: int | None = None) -> FamilyParams | None:
    """Family parameters of the class of `poly`, or None when no family matches.

    Searches parameters bounded by `bound` (default: twice the polygon area,
    which dominates every parameter of a matching family).  Deterministic:
    among all matching tuples the lexicographically smallest wins.  Singular
    counts outside 1..3, or a 3-singular polygon with d != 5, yield None.
    """
    report = analyze(poly.cycle)
    sc = report.singular_count
    d = poly.d
    if bound is None:
        bound = twice_area(poly)
    candidates: set[FamilyParams] = set()
    if sc == 1 and d in (3, 4, 5):
        tag = {3: "dais1", 4: "dais2", 5: "dais3"}[d]
        # A dais polygon has one cone of determinant p + 1 and d - 1 smooth
        # cones, so its twice-area is p + d and p is forced.
        p = twice_area(poly) - d
        if p >= 1:
            candidates.add(FamilyParams(tag, p=p))
    elif sc == 2 and d in (3, 4, 5):
        tag = {3: "two1", 4: "two2", 5: "two3"}[d]
        candidates = _template_candidates(poly, tag)
    elif sc == 3 and d == 5:
        candidates = _template_candidates(poly, "three5")
    else:
        return None
    viable = sorted(
        (fp for fp in candidates if check_params(fp) and _within_bound(fp, bound)),
        key=lambda fp: fp.as_tuple(),
    )
    for fp in viable:
        instance = generate(fp)
        if are_equivalent(instance.polygon, poly) is not None:
            return fp
    return None


def classify_three(poly: LdpPolygon) -> str:
    """Case tag for a polygon with exactly three singular points.

    picard_le_two for d <= 4; family_d5 when the d=5 family matches;
    blowup_of_picard3 when removing some sum-of-neighbours ray of a d=6
    polygon leaves a valid LDP polygon that still has three singular points;
    none otherwise (no log del Pezzo class with three singular points has
    d >= 7).
    """
    report = analyze(poly.cycle)
    if report.singular_count != 3:
        raise ValueError(
            f"classify_three needs exactly 3 singular cones, got {report.singular_count}"
        )
    d = poly.d
    if d <= 4:
        return "picard_le_two"
    if d == 5:
        return "family_d5" if identify(poly) is not None else "none"
    if d == 6:
        for i in blow_down_candidates(poly.cycle):
            smaller = blow_down(poly.cycle, i)
            try:
                sub = validate_ldp_polygon(smaller.rays)
            except FanValidationError:
                continue
            if analyze(sub.cycle).singular_count == 3:
                return "blowup_of_picard3"
        return "none"
    return "none"
