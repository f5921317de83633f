"""Linking numbers and writhes of closed oriented polylines in R^3.

Two routes to the linking number are provided and cross-checked in the
test suite:

* ``linking_number_pl`` -- exact signed crossing count of a generic
  projection, computed with rational arithmetic (half the signed sum of
  inter-curve crossings).
* ``gauss_linking_quadrature`` -- midpoint-rule evaluation of the Gauss
  double integral, floating point.

Crossing sign convention: the sign of a crossing is the orientation of
the frame (over-strand tangent, under-strand tangent, projection axis),
fixed so that the standard positively-oriented Hopf link has linking
number +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BandObstructed,
    CurvesIntersect,
    NonGenericProjection,
    ParseError,
)

Vec3 = tuple[Fraction, Fraction, Fraction]

# Degeneracy tolerance, relative to the bounding-box diagonal.
DEGENERACY_TOL = 1e-9


def _to_vec3(point) -> Vec3:
    x, y, z = point
    return (Fraction(x), Fraction(y), Fraction(z))


@dataclass(frozen=True)
class PolyCurve:
    """Closed oriented polyline; the vertex list is implicitly closed.

    Coordinates are held exactly (as rationals) so that crossing
    predicates are error-free.
    """

    vertices: tuple[Vec3, ...]

    def __init__(self, points: Iterable) -> None:
        verts = tuple(_to_vec3(p) for p in points)
        if len(verts) < 3:
            raise ParseError("a closed curve needs at least 3 vertices")
        for a, b in zip(verts, verts[1:] + verts[:1]):
            if a == b:
                raise ParseError("consecutive vertices coincide")
        object.__setattr__(self, "vertices", verts)

    def __len__(self) -> int:
        return len(self.vertices)

    def segments(self) -> list[tuple[Vec3, Vec3]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def reversed(self) -> "PolyCurve":
        return PolyCurve(tuple(reversed(self.vertices)))

    def translated(self, offset) -> "PolyCurve":
        dx, dy, dz = _to_vec3(offset)
        return PolyCurve(
            tuple((x + dx, y + dy, z + dz) for x, y, z in self.vertices)
        )

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)


@dataclass(frozen=True)
class ProjectionAxis:
    """Unit direction along which curves are projected."""

    direction: Vec3

    def __init__(self, direction) -> None:
        d = _to_vec3(direction)
        norm2 = float(d[0] * d[0] + d[1] * d[1] + d[2] * d[2])
        if abs(sqrt(norm2) - 1.0) > 1e-12:
            raise ParseError(f"axis direction {direction} is not unit length")
        object.__setattr__(self, "direction", d)


EZ = ProjectionAxis((0, 0, 1))


def _cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a: Vec3, b: Vec3) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _plane_basis(axis: ProjectionAxis) -> tuple[Vec3, Vec3, Vec3]:
    """Rational basis (u, v, w) with w the axis and (u, v, w) right-handed.

    u and v are orthogonal to w but not normalized; only orientation
    signs are consumed downstream, so scaling is irrelevant.
    """
    w = axis.direction
    i = min(range(3), key=lambda t: abs(w[t]))
    e = tuple(Fraction(int(t == i)) for t in range(3))
    u = _cross(e, w)
    v = _cross(w, u)
    return u, v, w


def _bbox_diagonal(curves: Sequence[PolyCurve]) -> float:
    pts = np.concatenate([c.as_array() for c in curves])
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0))) or 1.0


def _segment_distance(p0, p1, q0, q1) -> float:
    """Min distance between 3D segments, sampled; guard only, not exact."""
    t = np.linspace(0.0, 1.0, 9)
    a = p0[None, :] + t[:, None] * (p1 - p0)[None, :]
    b = q0[None, :] + t[:, None] * (q1 - q0)[None, :]
    d = a[:, None, :] - b[None, :, :]
    return float(np.sqrt((d * d).sum(axis=2)).min())


def _sample_points(curve: PolyCurve, per_seg: int = 5) -> np.ndarray:
    verts = curve.as_array()
    nxt = np.roll(verts, -1, axis=0)
    t = np.arange(per_seg) / per_seg
    pts = verts[:, None, :] + t[None, :, None] * (nxt - verts)[:, None, :]
    return pts.reshape(-1, 3)


def _check_disjoint(m: PolyCurve, n: PolyCurve, tol: float) -> None:
    a, b = _sample_points(m), _sample_points(n)
    d = a[:, None, :] - b[None, :, :]
    if float(np.sqrt((d * d).sum(axis=2)).min()) < tol:
        raise CurvesIntersect("curves approach within tolerance; not a valid link")


@dataclass(frozen=True)
class Crossing:
    """A transverse crossing of two projected segments."""

    sign: int
    height_gap: Fraction  # over height minus under height, > 0


def _segment_crossings(
    seg1: tuple[Vec3, Vec3],
    seg2: tuple[Vec3, Vec3],
    basis: tuple[Vec3, Vec3, Vec3],
) -> Crossing | None:
    """Crossing of two projected segments, or None if they miss.

    Raises NonGenericProjection on parallel overlaps, endpoint
    touchings, or a segment projecting to a point; raises
    CurvesIntersect if the preimages meet in R^3.
    """
    u, v, w = basis
    p0, p1 = seg1
    q0, q1 = seg2
    d1 = (p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2])
    d2 = (q1[0] - q0[0], q1[1] - q0[1], q1[2] - q0[2])
    a1 = (_dot(d1, u), _dot(d1, v))
    a2 = (_dot(d2, u), _dot(d2, v))
    if a1 == (0, 0) or a2 == (0, 0):
        raise NonGenericProjection("segment parallel to projection axis")
    denom = a1[0] * a2[1] - a1[1] * a2[0]
    r = (
        _dot(q0, u) - _dot(p0, u),
        _dot(q0, v) - _dot(p0, v),
    )
    if denom == 0:
        # Parallel projections: collinear overlap is degenerate.
        if r[0] * a1[1] == r[1] * a1[0]:
            raise NonGenericProjection("collinear projected segments")
        return None
    s = Fraction(r[0] * a2[1] - r[1] * a2[0], denom)
    t = Fraction(r[0] * a1[1] - r[1] * a1[0], denom)
    if s <= 0 or s >= 1 or t <= 0 or t >= 1:
        if (0 <= s <= 1 and t in (0, 1)) or (0 <= t <= 1 and s in (0, 1)):
            raise NonGenericProjection("projected crossing at a vertex")
        return None
    h1 = _dot(p0, w) + s * _dot(d1, w)
    h2 = _dot(q0, w) + t * _dot(d2, w)
    if h1 == h2:
        raise CurvesIntersect("curves meet in R^3 at a projected crossing")
    if h1 > h2:
        over, under, gap = a1, a2, h1 - h2
    else:
        over, under, gap = a2, a1, h2 - h1
    orient = over[0] * under[1] - over[1] * under[0]
    if orient == 0:
        raise NonGenericProjection("tangential crossing")
    return Crossing(sign=1 if orient > 0 else -1, height_gap=gap)


def _projected_boxes(curve: PolyCurve, basis) -> np.ndarray:
    """Per-segment 2D bounding boxes (xmin, ymin, xmax, ymax) in projection."""
    u, v, _ = basis
    verts = curve.as_array()
    uu = np.array([float(x) for x in u])
    vv = np.array([float(x) for x in v])
    p = np.stack([verts @ uu, verts @ vv], axis=1)
    q = np.roll(p, -1, axis=0)
    return np.concatenate([np.minimum(p, q), np.maximum(p, q)], axis=1)


def _candidate_pairs(
    box1: np.ndarray, box2: np.ndarray, margin: float
) -> np.ndarray:
    """Index pairs whose projected boxes overlap (float prefilter).

    The margin absorbs float rounding; exact predicates decide the rest.
    """
    overlap = (
        (box1[:, None, 0] <= box2[None, :, 2] + margin)
        & (box2[None, :, 0] <= box1[:, None, 2] + margin)
        & (box1[:, None, 1] <= box2[None, :, 3] + margin)
        & (box2[None, :, 1] <= box1[:, None, 3] + margin)
    )
    return np.argwhere(overlap)


def linking_number_pl(
    m: PolyCurve, n: PolyCurve, axis: ProjectionAxis = EZ
) -> int:
    """Linking number as half the signed crossing count of the projection."""
    diag = _bbox_diagonal([m, n])
    _check_disjoint(m, n, DEGENERACY_TOL * diag)
    basis = _plane_basis(axis)
    segs1, segs2 = m.segments(), n.segments()
    boxes1 = _projected_boxes(m, basis)
    boxes2 = _projected_boxes(n, basis)
    total = 0
    for i, j in _candidate_pairs(boxes1, boxes2, 1e-7 * diag):
        crossing = _segment_crossings(segs1[i], segs2[j], basis)
        if crossing is not None:
            total += crossing.sign
    if total % 2 != 0:
        raise NonGenericProjection("odd signed crossing count")
    return total // 2


def writhe_pl(curve: PolyCurve, axis: ProjectionAxis = EZ) -> int:
    """Writhe: signed count of self-crossings of the projection.

    The paper-level half-sum over ordered pairs collapses to a plain sum
    over unordered crossings.
    """
    basis = _plane_basis(axis)
    segs = curve.segments()
    nseg = len(segs)
    boxes = _projected_boxes(curve, basis)
    diag = _bbox_diagonal([curve])
    total = 0
    for i, j in _candidate_pairs(boxes, boxes, 1e-7 * diag):
        if j <= i or j == i + 1 or (i == 0 and j == nseg - 1):
            continue  # each unordered pair once; adjacent share a vertex
        crossing = _segment_crossings(segs[i], segs[j], basis)
        if crossing is not None:
            total += crossing.sign
    return total


def _resample(curve: PolyCurve, subdivisions: int) -> tuple[np.ndarray, np.ndarray]:
    """Midpoints and tangent*dl arrays with roughly `subdivisions` samples."""
    verts = curve.as_array()
    nseg = len(verts)
    per_seg = max(1, -(-subdivisions // nseg))
    mids, tangents = [], []
    t = (np.arange(per_seg) + 0.5) / per_seg
    for i in range(nseg):
        a, b = verts[i], verts[(i + 1) % nseg]
        mids.append(a[None, :] + t[:, None] * (b - a)[None, :])
        tangents.append(np.repeat((b - a)[None, :] / per_seg, per_seg, axis=0))
    return np.concatenate(mids), np.concatenate(tangents)


def gauss_linking_quadrature(
    m: PolyCurve, n: PolyCurve, subdivisions: int = 128
) -> float:
    """Gauss double integral (1/4pi) oint oint det(t1, t2, r) / |r|^3."""
    tol = DEGENERACY_TOL * _bbox_diagonal([m, n])
    _check_disjoint(m, n, tol)
    x1, t1 = _resample(m, subdivisions)
    x2, t2 = _resample(n, subdivisions)
    r = x1[:, None, :] - x2[None, :, :]
    dist = np.sqrt((r * r).sum(axis=2))
    cross = np.cross(t1[:, None, :], t2[None, :, :])
    integrand = (cross * r).sum(axis=2) / dist**3
    # Fixed summation order for reproducibility.
    return float(integrand.sum()) / (4.0 * np.pi)


def connected_sum_pl(
    m1: PolyCurve,
    m2: PolyCurve,
    band: tuple[int, int],
    avoid: Sequence[PolyCurve] = (),
    axis: ProjectionAxis = EZ,
) -> PolyCurve:
    """Join two disjoint closed curves by a band at the given vertices.

    The band replaces the edge entering vertex ``band[0]`` of ``m1`` and
    the edge entering ``band[1]`` of ``m2`` by two straight connector
    segments.  If a connector comes near any input curve, or crosses a
    curve in ``avoid`` in projection, the band is obstructed and the sum
    would not satisfy the linking-additivity hypothesis.
    """
    i1, i2 = band
    if not (0 <= i1 < len(m1) and 0 <= i2 < len(m2)):
        raise ParseError("band vertex index out of range")
    a = m1.vertices[i1:] + m1.vertices[:i1]
    b = m2.vertices[i2:] + m2.vertices[:i2]
    result = PolyCurve(a + b)

    tol = DEGENERACY_TOL * _bbox_diagonal([m1, m2, *avoid])
    new_segs = [(a[-1], b[0]), (b[-1], a[0])]
    new_f = [(np.array(p, dtype=float), np.array(q, dtype=float)) for p, q in new_segs]
    for curve in (m1, m2, *avoid):
        arr = curve.as_array()
        for i in range(len(arr)):
            q0, q1 = arr[i], arr[(i + 1) % len(arr)]
            for p0, p1 in new_f:
                # Segments sharing a band endpoint legitimately touch.
                if any(np.allclose(p, q) for p in (p0, p1) for q in (q0, q1)):
                    continue
                if _segment_distance(p0, p1, q0, q1) < tol:
                    raise BandObstructed("band passes through a curve")
    basis = _plane_basis(axis)
    for curve in avoid:
        for seg2 in curve.segments():
            for seg1 in new_segs:
                if _segment_crossings(seg1, seg2, basis) is not None:
                    raise BandObstructed(
                        "band adds projection crossings with a protected curve"
                    )
    return result


def circle(
    center, radius, normal, n: int = 64, phase: float = 0.0
) -> PolyCurve:
    """Regular n-gon approximating a circle with the given plane normal.

    Oriented counterclockwise when viewed from the tip of ``normal``.
    """
    c = np.array(center, dtype=float)
    w = np.array(normal, dtype=float)
    w = w / np.linalg.norm(w)
    ref = np.eye(3)[int(np.argmin(np.abs(w)))]
    u = np.cross(ref, w)
    u /= np.linalg.norm(u)
    v = np.cross(w, u)
    angles = phase + 2.0 * np.pi * np.arange(n) / n
    pts = c + radius * (np.cos(angles)[:, None] * u + np.sin(angles)[:, None] * v)
    return PolyCurve([tuple(p) for p in pts])


def curves_to_dict(curves: Sequence[PolyCurve]) -> dict:
    return {
        "components": [
            [[float(x), float(y), float(z)] for x, y, z in c.vertices]
            for c in curves
        ]
    }


def curves_from_dict(data: dict) -> list[PolyCurve]:
    try:
        comps = data["components"]
        return [PolyCurve([tuple(p) for p in comp]) for comp in comps]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed curve document: {exc}") from exc
