"""Singularity data of the toric surface behind a fan cycle.

Cone i (spanned by rays i and i + 1, both 1-based) carries a local index: the
determinant of its spanning pair.  Determinant 1 means a smooth cone, 2 or
more a singular point of that local index.  The f-value at a ray decides the
log del Pezzo condition: the surface is log del Pezzo iff f >= 1 everywhere,
and f(i) divided by the two adjacent cone determinants is the exact
anticanonical degree of the boundary divisor at ray i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import checked_i64, det2
from .polygon import FanCycle, LdpPolygon, validate_fan


def _as_cycle(fan: FanCycle | LdpPolygon) -> FanCycle:
    return fan.cycle if isinstance(fan, LdpPolygon) else fan


class ConeSingular(ValueError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"ConeSingular({index}): cone {index} has determinant >= 2, cannot subdivide by ray sum")


@dataclass(frozen=True)
class ConeRecord:
    """Local data of one cone: 1-based index, determinant, singularity flag."""

    index: int
    det: int
    singular: bool


@dataclass(frozen=True)
class SurfaceReport:
    d: int
    picard_number: int
    cones: tuple[ConeRecord, ...]
    f_values: tuple[int, ...]
    anticanonical_degrees: tuple[Fraction, ...]
    is_log_del_pezzo: bool
    singular_count: int

    @property
    def dets(self) -> tuple[int, ...]:
        return tuple(c.det for c in self.cones)

    def singular_indices(self) -> tuple[int, ...]:
        return tuple(c.index for c in self.cones if c.singular)


def f_value(cycle: FanCycle | LdpPolygon, i: int) -> int:
    """det(v_{i-1}, v_i) + det(v_i, v_{i+1}) + det(v_{i+1}, v_{i-1}) for 1 <= i <= d."""
    cycle = _as_cycle(cycle)
    if not 1 <= i <= cycle.d:
        raise IndexError(f"ray index {i} out of range 1..{cycle.d}")
    prev_ray, ray, next_ray = cycle.ray(i - 1), cycle.ray(i), cycle.ray(i + 1)
    return checked_i64(det2(prev_ray, ray) + det2(ray, next_ray) + det2(next_ray, prev_ray), "f value")


def analyze(cycle: FanCycle | LdpPolygon) -> SurfaceReport:
    """Full singularity and degree report for the surface of a validated cycle."""
    cycle = _as_cycle(cycle)
    d = cycle.d
    dets = tuple(cycle.cone_det(i) for i in range(1, d + 1))
    cones = tuple(ConeRecord(i, dets[i - 1], dets[i - 1] >= 2) for i in range(1, d + 1))
    f_values = tuple(f_value(cycle, i) for i in range(1, d + 1))
    degrees = tuple(
        Fraction(f_values[i - 1], dets[i - 2] * dets[i - 1]) for i in range(1, d + 1)
    )
    return SurfaceReport(
        d=d,
        picard_number=d - 2,
        cones=cones,
        f_values=f_values,
        anticanonical_degrees=degrees,
        is_log_del_pezzo=min(f_values) >= 1,
        singular_count=sum(1 for c in cones if c.singular),
    )


def blow_up(cycle: FanCycle | LdpPolygon, i: int) -> FanCycle:
    """Subdivide the smooth cone i by inserting the primitive ray v_i + v_{i+1}.

    Raises ConeSingular(i) when the cone determinant is not 1.  The result has
    d + 1 rays and the same multiset of singular cone determinants: the
    determinant-1 cone is replaced by two determinant-1 cones.
    """
    cycle = _as_cycle(cycle)
    if not 1 <= i <= cycle.d:
        raise IndexError(f"cone index {i} out of range 1..{cycle.d}")
    if cycle.cone_det(i) != 1:
        raise ConeSingular(i)
    inserted = cycle.ray(i) + cycle.ray(i + 1)
    rays = cycle.rays[:i] + (inserted,) + cycle.rays[i:]
    return FanCycle(rays)


def blow_down_candidates(cycle: FanCycle | LdpPolygon) -> list[int]:
    """1-based indices i with v_i == v_{i-1} + v_{i+1}; requires d >= 4.

    Removing such a ray always leaves a valid fan with d - 1 rays; whether the
    smaller fan is log del Pezzo is not checked here.
    """
    cycle = _as_cycle(cycle)
    if cycle.d < 4:
        raise ValueError("blow-down needs at least 4 rays")
    return [i for i in range(1, cycle.d + 1) if cycle.ray(i) == cycle.ray(i - 1) + cycle.ray(i + 1)]


def blow_down(cycle: FanCycle | LdpPolygon, i: int) -> FanCycle:
    """Remove ray i, which must equal the sum of its neighbours.  Exact inverse of blow_up."""
    cycle = _as_cycle(cycle)
    if cycle.d < 4:
        raise ValueError("blow-down needs at least 4 rays")
    if not 1 <= i <= cycle.d:
        raise IndexError(f"ray index {i} out of range 1..{cycle.d}")
    if cycle.ray(i) != cycle.ray(i - 1) + cycle.ray(i + 1):
        raise ValueError(f"ray {i} is not the sum of its neighbours")
    return validate_fan(cycle.rays[: i - 1] + cycle.rays[i:])


def nonsingular_arc_contiguous(report: SurfaceReport) -> bool:
    """True iff the singular cones form one contiguous cyclic arc.

    All-singular and all-nonsingular both count as contiguous.  Equivalent
    check: at most two singular/nonsingular boundaries around the cycle.
    """
    flags = [c.singular for c in report.cones]
    d = len(flags)
    boundaries = sum(1 for i in range(d) if flags[i] != flags[(i + 1) % d])
    return boundaries <= 2
