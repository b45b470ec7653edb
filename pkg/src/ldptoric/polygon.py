"""Validated ray cycles of complete fans and convex LDP polygons.

A FanCycle is a counterclockwise cyclic list of pairwise distinct primitive
rays winding exactly once around the origin; it determines a complete fan.
An LdpPolygon additionally has every ray a strictly convex vertex of the hull,
which is exactly the log del Pezzo condition on the associated surface.

All validation-error indices reported here are 1-based, matching the cyclic
convention used by every external surface of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .lattice import RayVector, det2, is_primitive


class FanValidationError(ValueError):
    """Base class for fan and polygon validation failures."""


class NonPrimitiveRay(FanValidationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"NonPrimitiveRay({index}): ray {index} is not primitive")


class DuplicateRay(FanValidationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"DuplicateRay({index}): ray {index} repeats an earlier ray")


class NotCounterclockwise(FanValidationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(
            f"NotCounterclockwise({index}): consecutive rays {index} and {index + 1} "
            "do not turn counterclockwise"
        )


class BadWinding(FanValidationError):
    def __init__(self, winding: int):
        self.winding = winding
        super().__init__(f"BadWinding: rays wind {winding} times around the origin, need exactly 1")


class NotStrictlyConvex(FanValidationError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"NotStrictlyConvex({index}): ray {index} is not a strict vertex of the hull")


def _coerce(point) -> RayVector:
    if isinstance(point, RayVector):
        return point
    x, y = point
    return RayVector(int(x), int(y))


def _lower_half(v: RayVector) -> bool:
    # Angular half-plane split: False covers angles in [0, pi) starting at the
    # positive x axis, True covers [pi, 2*pi).
    return v.y < 0 or (v.y == 0 and v.x < 0)


def angle_less(u: RayVector, v: RayVector) -> bool:
    """Strict angular order on distinct directions, counterclockwise from (1, 0).

    Exact: decided by the half-plane split and one determinant sign, no
    floating point.  Distinct primitive vectors never share a direction, so
    this is a total order on them.
    """
    hu, hv = _lower_half(u), _lower_half(v)
    if hu != hv:
        return hv
    return det2(u, v) > 0


def angular_sort(points: Iterable[RayVector]) -> list[RayVector]:
    """Sort vectors by angle counterclockwise starting at the positive x axis."""
    def cmp(u: RayVector, v: RayVector) -> int:
        if u == v:
            return 0
        return -1 if angle_less(u, v) else 1

    return sorted(points, key=cmp_to_key(cmp))


@dataclass(frozen=True)
class FanCycle:
    """Counterclockwise cycle of primitive rays winding once around the origin."""

    rays: tuple[RayVector, ...]

    @property
    def d(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> RayVector:
        """1-based cyclic ray access: ray(0) == ray(d), ray(d + 1) == ray(1)."""
        return self.rays[(i - 1) % len(self.rays)]

    def cone_det(self, i: int) -> int:
        """Determinant of the i-th cone, spanned by ray(i) and ray(i + 1)."""
        return det2(self.ray(i), self.ray(i + 1))


@dataclass(frozen=True)
class LdpPolygon:
    """A FanCycle whose rays are strict vertices of their convex hull."""

    cycle: FanCycle

    @property
    def vertices(self) -> tuple[RayVector, ...]:
        return self.cycle.rays

    @property
    def d(self) -> int:
        return self.cycle.d


def same_cycle(a: FanCycle, b: FanCycle) -> bool:
    """True iff the two cycles agree up to a cyclic rotation (orientation kept)."""
    if a.d != b.d:
        return False
    if a.rays[0] not in b.rays:
        return False
    k = b.rays.index(a.rays[0])
    return all(a.rays[i] == b.rays[(k + i) % b.d] for i in range(a.d))


def validate_fan(points: Sequence) -> FanCycle:
    """Check the complete-fan conditions and return the validated cycle.

    Raises, in checking order: ValueError for fewer than 3 rays,
    NonPrimitiveRay, DuplicateRay, NotCounterclockwise (some consecutive pair
    has determinant <= 0), BadWinding (rays wind more than once).  Input order
    is preserved; any starting rotation is accepted.
    """
    rays = tuple(_coerce(p) for p in points)
    d = len(rays)
    if d < 3:
        raise ValueError(f"a complete fan needs at least 3 rays, got {d}")
    for i, v in enumerate(rays, start=1):
        if not is_primitive(v):
            raise NonPrimitiveRay(i)
    seen: set[RayVector] = set()
    for i, v in enumerate(rays, start=1):
        if v in seen:
            raise DuplicateRay(i)
        seen.add(v)
    for i in range(d):
        if det2(rays[i], rays[(i + 1) % d]) <= 0:
            raise NotCounterclockwise(i + 1)
    # Every step is now a strict ccw turn smaller than a half-turn, so the
    # winding number equals the count of wrap-arounds past the reference axis.
    winding = sum(1 for i in range(d) if not angle_less(rays[i], rays[(i + 1) % d]))
    if winding != 1:
        raise BadWinding(winding)
    return FanCycle(rays)


def vertex_turn(a: RayVector, b: RayVector, c: RayVector) -> int:
    """Cross product of edge vectors (b - a) and (c - b); positive for a strict left turn."""
    return det2(b - a, c - b)


def validate_ldp_polygon(points: Sequence) -> LdpPolygon:
    """Validate as fan, then require a strict left turn at every vertex.

    A ray that is a convex combination of its neighbours (collinear boundary
    point or interior point) raises NotStrictlyConvex at its 1-based index.
    """
    cycle = validate_fan(points)
    rays = cycle.rays
    d = len(rays)
    for i in range(d):
        if vertex_turn(rays[i - 1], rays[i], rays[(i + 1) % d]) <= 0:
            raise NotStrictlyConvex(i + 1)
    return LdpPolygon(cycle)


def twice_area(poly: LdpPolygon | FanCycle) -> int:
    """Twice the polygon area: the sum of all cone determinants.  Always positive."""
    cycle = poly.cycle if isinstance(poly, LdpPolygon) else poly
    return sum(cycle.cone_det(i) for i in range(1, cycle.d + 1))


def parse_vertices(text: str) -> list[RayVector]:
    """Parse the shared vertex text format "x,y;x,y;..." into ray vectors.

    Whitespace around tokens is ignored.  Malformed tokens raise ValueError
    naming the offending token; validation of the resulting cycle is separate.
    """
    tokens = text.split(";")
    out: list[RayVector] = []
    for token in tokens:
        parts = token.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad vertex token {token.strip()!r}: expected 'x,y'")
        try:
            x, y = int(parts[0].strip()), int(parts[1].strip())
        except ValueError:
            raise ValueError(f"bad vertex token {token.strip()!r}: coordinates must be integers") from None
        out.append(RayVector(x, y))
    return out


def format_vertices(points: Iterable[RayVector]) -> str:
    """Inverse of parse_vertices: "x,y;x,y;..." with no whitespace."""
    return ";".join(f"{v.x},{v.y}" for v in points)
