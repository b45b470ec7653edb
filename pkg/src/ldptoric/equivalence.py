"""GL(2, Z) equivalence testing and canonical forms for LDP polygons.

Two polygons are equivalent when an integer matrix of determinant +-1 maps
the vertex set of one onto the other.  Any such map carries adjacent vertex
pairs to adjacent vertex pairs, so equivalence is decidable by solving for
the map on one fixed pair against every ordered adjacent pair of the target.

The canonical form picks a distinguished representative of each class: every
rotation of the vertex cycle (and of the mirrored, re-reversed cycle, unless
restricted to determinant +1) is normalized by the unique determinant-one map
that sends its leading vertex to (1, 0) and its second vertex to (k, D) with
0 <= k < D; the lexicographically least normalized vertex list wins.  The
candidate set depends only on the equivalence class, never on the input
coordinates or starting vertex, which makes the form a valid dedup key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .lattice import (
    IDENTITY_MAP,
    RayVector,
    UnimodularMap,
    apply_map,
    compose_maps,
    det2,
    solve_map,
)
from .polygon import LdpPolygon, format_vertices, twice_area, validate_ldp_polygon


@dataclass(frozen=True)
class CanonicalForm:
    """Distinguished vertex list of an equivalence class; itself a valid polygon."""

    vertices: tuple[RayVector, ...]

    def text(self) -> str:
        return format_vertices(self.vertices)

    def as_polygon(self) -> LdpPolygon:
        return validate_ldp_polygon(self.vertices)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g and g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _map_to_first_axis(v: RayVector) -> UnimodularMap:
    """A determinant +1 map sending the primitive vector v to (1, 0)."""
    g, s, t = _ext_gcd(v.x, v.y)
    if g != 1:
        raise ValueError(f"{v} is not primitive")
    # Second row (-y, x) keeps the determinant at s*x + t*y == 1.
    return UnimodularMap(s, t, -v.y, v.x)


def _normalize_anchored(rays: tuple[RayVector, ...]) -> tuple[RayVector, ...]:
    # Unique det +1 image with rays[0] -> (1, 0) and rays[1] -> (k, D), 0 <= k < D.
    to_axis = _map_to_first_axis(rays[0])
    second = apply_map(to_axis, rays[1])
    span = second.y
    shear = UnimodularMap(1, (second.x % span - second.x) // span, 0, 1)
    full = compose_maps(shear, to_axis)
    return tuple(apply_map(full, v) for v in rays)


def _mirrored_cycle(vertices: tuple[RayVector, ...]) -> tuple[RayVector, ...]:
    # Reflect across the x axis and reverse the reading to restore ccw order.
    return tuple(RayVector(v.x, -v.y) for v in reversed(vertices))


def canonical_form(poly: LdpPolygon, orientation_preserving: bool = False) -> CanonicalForm:
    """Deterministic, equivalence-invariant representative of the class of `poly`.

    With orientation_preserving=True only determinant +1 maps are allowed, so
    a chiral polygon and its mirror image get distinct forms.
    """
    cycles = [poly.vertices]
    if not orientation_preserving:
        cycles.append(_mirrored_cycle(poly.vertices))
    best: tuple[RayVector, ...] | None = None
    best_key: tuple[tuple[int, int], ...] | None = None
    for cyc in cycles:
        d = len(cyc)
        for shift in range(d):
            candidate = _normalize_anchored(cyc[shift:] + cyc[:shift])
            key = tuple(v.as_tuple() for v in candidate)
            if best_key is None or key < best_key:
                best, best_key = candidate, key
    assert best is not None
    return CanonicalForm(best)


def are_equivalent(
    q: LdpPolygon, r: LdpPolygon, orientation_preserving: bool = False
) -> UnimodularMap | None:
    """A unimodular map carrying the vertex set of q onto that of r, or None.

    Complete search: an equivalence must send the adjacent pair (v1, v2) of q
    to an ordered adjacent pair of r (reversed order for determinant -1 maps),
    so all 2 * d such targets are tried via solve_map.
    """
    if q.d != r.d or twice_area(q) != twice_area(r):
        return None
    v1, v2 = q.vertices[0], q.vertices[1]
    r_set = set(r.vertices)
    rv = r.vertices
    for j in range(r.d):
        targets = [(rv[j], rv[(j + 1) % r.d])]
        if not orientation_preserving:
            targets.append((rv[(j + 1) % r.d], rv[j]))
        for w1, w2 in targets:
            m = solve_map(v1, v2, w1, w2)
            if m is None:
                continue
            if orientation_preserving and m.det() != 1:
                continue
            if {apply_map(m, v) for v in q.vertices} == r_set:
                return m
    return None


def apply_to_polygon(m: UnimodularMap, poly: LdpPolygon) -> LdpPolygon:
    """Image polygon under a determinant +-1 map, re-validated.

    A determinant -1 map reverses the cycle orientation, so the image list is
    reversed before validation.
    """
    det = m.det()
    if det not in (1, -1):
        raise ValueError(f"map determinant {det} is not +-1")
    images = [apply_map(m, v) for v in poly.vertices]
    if det == -1:
        images.reverse()
    return validate_ldp_polygon(images)


_ELEMENTARY_MAPS = (
    UnimodularMap(1, 1, 0, 1),
    UnimodularMap(1, -1, 0, 1),
    UnimodularMap(1, 0, 1, 1),
    UnimodularMap(1, 0, -1, 1),
    UnimodularMap(0, 1, 1, 0),
)


def random_unimodular_map(rng: random.Random, max_entry: int = 5) -> UnimodularMap:
    """Random product of elementary shears and the swap, entries capped at max_entry."""
    m = IDENTITY_MAP
    for _ in range(rng.randint(1, 12)):
        candidate = compose_maps(rng.choice(_ELEMENTARY_MAPS), m)
        entries = (candidate.a, candidate.b, candidate.c, candidate.d)
        if max(abs(e) for e in entries) > max_entry:
            break
        m = candidate
    return m
