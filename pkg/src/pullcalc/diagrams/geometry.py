"""Flat drawable pieces and the exact-ish predicates the verifier needs.

Two piece kinds are enough for every diagram here: straight segments
and half circles (always a full semicircle, bulging either west or
east).  Intersection tests work with a small absolute tolerance; the
builders only ever produce coordinates on the half-integer grid, so
there is no real numeric danger, but hand-built diagrams get sensible
answers too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Point = tuple  # (x, y)


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point


@dataclass(frozen=True)
class HalfCircle:
    center: Point
    radius: float
    side: str  # "west" or "east": which half of the circle is drawn
    start: Point
    end: Point


def half_circle(center, radius, side, start_at_top=True) -> HalfCircle:
    """A semicircle between the top and bottom points of its circle."""
    if side not in ("west", "east"):
        raise ValueError("side must be 'west' or 'east'")
    cx, cy = center
    top = (cx, cy + radius)
    bottom = (cx, cy - radius)
    if start_at_top:
        return HalfCircle(center, radius, side, top, bottom)
    return HalfCircle(center, radius, side, bottom, top)


def dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def reverse_piece(piece):
    if isinstance(piece, Segment):
        return Segment(piece.end, piece.start)
    return HalfCircle(piece.center, piece.radius, piece.side, piece.end, piece.start)


def _flip_side(side: str) -> str:
    return "east" if side == "west" else "west"


def reflect_piece_x(piece, axis: float):
    """Mirror across the vertical line x = axis."""

    def f(p):
        return (2.0 * axis - p[0], p[1])

    if isinstance(piece, Segment):
        return Segment(f(piece.start), f(piece.end))
    return HalfCircle(
        f(piece.center), piece.radius, _flip_side(piece.side), f(piece.start), f(piece.end)
    )


def rotate_piece_180(piece, center: Point):
    """Rotate half a turn about a point."""
    cx, cy = center

    def f(p):
        return (2.0 * cx - p[0], 2.0 * cy - p[1])

    if isinstance(piece, Segment):
        return Segment(f(piece.start), f(piece.end))
    return HalfCircle(
        f(piece.center), piece.radius, _flip_side(piece.side), f(piece.start), f(piece.end)
    )


def bounding_box(piece):
    """(xmin, ymin, xmax, ymax); arcs get the tight half-disc box."""
    if isinstance(piece, Segment):
        (x1, y1), (x2, y2) = piece.start, piece.end
        return (min(x1, x2), min(y1, y2), max(x1, x2), max(y1, y2))
    cx, cy = piece.center
    r = piece.radius
    if piece.side == "west":
        return (cx - r, cy - r, cx, cy + r)
    return (cx, cy - r, cx + r, cy + r)


def seg_point_distance(seg: Segment, p: Point) -> float:
    (x1, y1), (x2, y2) = seg.start, seg.end
    dx, dy = x2 - x1, y2 - y1
    den = dx * dx + dy * dy
    if den == 0.0:
        return math.hypot(p[0] - x1, p[1] - y1)
    t = ((p[0] - x1) * dx + (p[1] - y1) * dy) / den
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - (x1 + t * dx), p[1] - (y1 + t * dy))


def piece_point_distance(piece, p: Point) -> float:
    if isinstance(piece, Segment):
        return seg_point_distance(piece, p)
    cx, cy = piece.center
    vx, vy = p[0] - cx, p[1] - cy
    n = math.hypot(vx, vy)
    on_half = vx <= 0.0 if piece.side == "west" else vx >= 0.0
    if n > 0.0 and on_half:
        return abs(n - piece.radius)
    return min(dist(p, piece.start), dist(p, piece.end))


def _on_half(arc: HalfCircle, p: Point, tol: float) -> bool:
    if arc.side == "west":
        return p[0] <= arc.center[0] + tol
    return p[0] >= arc.center[0] - tol


def _seg_seg(a: Segment, b: Segment, tol: float):
    (x1, y1), (x2, y2) = a.start, a.end
    (x3, y3), (x4, y4) = b.start, b.end
    rx, ry = x2 - x1, y2 - y1
    sx, sy = x4 - x3, y4 - y3
    qpx, qpy = x3 - x1, y3 - y1
    rlen = math.hypot(rx, ry)
    slen = math.hypot(sx, sy)
    denom = rx * sy - ry * sx
    if abs(denom) > tol * max(rlen * slen, 1e-12):
        t = (qpx * sy - qpy * sx) / denom
        u = (qpx * ry - qpy * rx) / denom
        et = tol / max(rlen, tol)
        eu = tol / max(slen, tol)
        if -et <= t <= 1.0 + et and -eu <= u <= 1.0 + eu:
            return [(x1 + t * rx, y1 + t * ry)], False
        return [], False
    # parallel lines: either disjoint or collinear
    if abs(qpx * ry - qpy * rx) > tol * max(rlen, 1.0):
        return [], False
    rr = rx * rx + ry * ry
    if rr <= tol * tol:
        if seg_point_distance(b, a.start) <= tol:
            return [a.start], False
        return [], False
    t0 = (qpx * rx + qpy * ry) / rr
    t1 = t0 + (sx * rx + sy * ry) / rr
    lo, hi = min(t0, t1), max(t0, t1)
    eps = tol / math.sqrt(rr)
    begin = max(0.0, lo)
    end = min(1.0, hi)
    if begin > end + eps:
        return [], False
    if end - begin <= eps:
        tm = (begin + end) / 2.0
        return [(x1 + tm * rx, y1 + tm * ry)], False
    return [], True  # a shared sub-segment


def _seg_circle_points(seg: Segment, center: Point, radius: float, tol: float):
    (x1, y1), (x2, y2) = seg.start, seg.end
    dx, dy = x2 - x1, y2 - y1
    fx, fy = x1 - center[0], y1 - center[1]
    a = dx * dx + dy * dy
    if a <= tol * tol:
        if abs(math.hypot(fx, fy) - radius) <= tol:
            return [seg.start]
        return []
    b = 2.0 * (fx * dx + fy * dy)
    c = fx * fx + fy * fy - radius * radius
    disc = b * b - 4.0 * a * c
    scale = abs(b * b) + abs(4.0 * a * c) + 1.0
    if disc < 0.0:
        if disc < -tol * scale:
            return []
        disc = 0.0
    sq = math.sqrt(disc)
    eps = tol / math.sqrt(a)
    pts = []
    for t in ((-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)):
        if -eps <= t <= 1.0 + eps:
            p = (x1 + t * dx, y1 + t * dy)
            if not any(dist(p, q) <= tol for q in pts):
                pts.append(p)
    return pts


def _seg_arc(seg: Segment, arc: HalfCircle, tol: float):
    pts = _seg_circle_points(seg, arc.center, arc.radius, tol)
    return [p for p in pts if _on_half(arc, p, tol)], False


def _arc_arc(a: HalfCircle, b: HalfCircle, tol: float):
    (cx1, cy1), r1 = a.center, a.radius
    (cx2, cy2), r2 = b.center, b.radius
    d = math.hypot(cx2 - cx1, cy2 - cy1)
    if d <= tol:
        if abs(r1 - r2) > tol:
            return [], False  # concentric, different radii
        if a.side == b.side:
            return [], True  # the very same semicircle
        return [(cx1, cy1 + r1), (cx1, cy1 - r1)], False  # shared poles
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return [], False
    aa = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d)
    h2 = r1 * r1 - aa * aa
    h = math.sqrt(max(h2, 0.0))
    ux, uy = (cx2 - cx1) / d, (cy2 - cy1) / d
    bx, by = cx1 + aa * ux, cy1 + aa * uy
    cands = [(bx - h * uy, by + h * ux)]
    if h > tol:
        cands.append((bx + h * uy, by - h * ux))
    pts = [p for p in cands if _on_half(a, p, tol) and _on_half(b, p, tol)]
    return pts, False


def piece_intersections(a, b, tol=1e-9):
    """All contact points of two pieces, plus an overlap flag.

    The flag is set when the pieces share a whole sub-curve rather
    than isolated points.
    """
    a_seg = isinstance(a, Segment)
    b_seg = isinstance(b, Segment)
    if a_seg and b_seg:
        return _seg_seg(a, b, tol)
    if a_seg:
        return _seg_arc(a, b, tol)
    if b_seg:
        return _seg_arc(b, a, tol)
    return _arc_arc(a, b, tol)
