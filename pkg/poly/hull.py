"""
poly/hull.py
~~~~~~~~~~~~
Planar convex hulls of root sets, used to check that the roots of R_n'
sit inside the hull of the roots of R_n.

Points are Python complex numbers; double precision is plenty for the
1e-9 containment tolerance.
"""

from __future__ import annotations

import math
from typing import Iterable


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def convex_hull_2d(points: Iterable[complex]) -> list[complex]:
    """Counter-clockwise hull vertices (monotone chain).

    Collinear input collapses to its two extreme points, a single point
    to itself.
    """
    pts = sorted({complex(p) for p in points}, key=lambda p: (p.real, p.imag))
    if len(pts) <= 2:
        return pts

    lower: list[complex] = []
    for p in pts:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)

    upper: list[complex] = []
    for p in reversed(pts):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)

    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 1 else [pts[0], pts[-1]]


def _segment_distance(q: complex, a: complex, b: complex) -> float:
    ab = b - a
    length2 = ab.real ** 2 + ab.imag ** 2
    if length2 == 0.0:
        return abs(q - a)
    t = ((q - a).real * ab.real + (q - a).imag * ab.imag) / length2
    t = min(1.0, max(0.0, t))
    return abs(q - (a + t * ab))


def distance_to_hull(q: complex, hull: list[complex]) -> float:
    """Euclidean distance from ``q`` to the closed hull (0 inside)."""
    q = complex(q)
    if not hull:
        return math.inf
    if len(hull) == 1:
        return abs(q - hull[0])
    if len(hull) == 2:
        return _segment_distance(q, hull[0], hull[1])

    edges = list(zip(hull, hull[1:] + hull[:1]))
    if all(_cross(a, b, q) >= 0.0 for a, b in edges):
        return 0.0
    return min(_segment_distance(q, a, b) for a, b in edges)


def point_in_hull(q: complex, hull: list[complex], tol: float = 1e-9) -> bool:
    return distance_to_hull(q, hull) <= tol
