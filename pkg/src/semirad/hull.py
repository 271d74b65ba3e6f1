"""Planar convex hull and point-to-hull distance.

Points live in the complex plane but are handled as (x, y) pairs.  The
hull is built with Andrew's monotone chain; the distance routine handles
the degenerate cases (empty set, single point, collinear points) that
arise from operators whose numerical range collapses to a segment or a
point.
"""

from __future__ import annotations

import numpy as np

# Cross products below this magnitude (on unit-scaled data) count as collinear.
_ORIENT_EPS = 1e-14


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Convex hull of an (n, 2) point array, counter-clockwise, no repeats.

    Collinear boundary points are dropped.  Degenerate inputs come back
    as-is: a single point as shape (1, 2), a collinear set as its two
    extreme points (2, 2).
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array, got {pts.shape}")
    if pts.shape[0] == 0:
        return pts.reshape(0, 2)
    # Deduplicate via lexicographic sort.
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    keep = np.ones(len(pts), dtype=bool)
    keep[1:] = np.any(np.abs(np.diff(pts, axis=0)) > 0.0, axis=1)
    pts = pts[keep]
    n = len(pts)
    if n <= 2:
        return pts

    scale = max(float(np.max(np.abs(pts))), 1.0)
    eps = _ORIENT_EPS * scale * scale

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= eps:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= eps:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if not hull:
        # Fully collinear: monotone chain collapses; keep the two extremes.
        return pts[[0, -1]]
    if len(hull) < 3:
        return np.asarray(hull, dtype=np.float64).reshape(len(hull), 2)
    return np.asarray(hull, dtype=np.float64)


def _point_segment_distance(p, a, b) -> float:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.hypot(*(p - a)))
    t = float((p - a) @ ab) / denom
    t = min(1.0, max(0.0, t))
    proj = a + t * ab
    return float(np.hypot(*(p - proj)))


def point_in_hull(point, hull: np.ndarray, tol: float = 0.0) -> bool:
    """Whether *point* lies in the convex region spanned by *hull* vertices.

    ``tol`` expands the region: points within distance ``tol`` outside
    still count as inside.
    """
    return distance_to_hull(point, hull) <= tol


def distance_to_hull(point, hull: np.ndarray) -> float:
    """Euclidean distance from *point* to the convex region of *hull*.

    Zero when the point lies inside or on the boundary.  *hull* may be
    degenerate (a point or a segment); it must be the output of
    :func:`convex_hull` or vertex-ordered the same way.
    """
    p = np.asarray(point, dtype=np.float64)
    hull = np.asarray(hull, dtype=np.float64)
    n = len(hull)
    if n == 0:
        return float("inf")
    if n == 1:
        return float(np.hypot(*(p - hull[0])))
    if n == 2:
        return _point_segment_distance(p, hull[0], hull[1])

    scale = max(float(np.max(np.abs(hull))), float(np.max(np.abs(p))), 1.0)
    eps = _ORIENT_EPS * scale * scale
    inside = True
    best = float("inf")
    for i in range(n):
        a = hull[i]
        b = hull[(i + 1) % n]
        if _cross(a, b, p) < -eps:
            inside = False
        best = min(best, _point_segment_distance(p, a, b))
    return 0.0 if inside else best
