"""Planar primitives: angles, angular interval sets, circle/quad arcs, exact overlap.

Angles are radians everywhere, normalized to [0, 2*pi).  Lengths are in rhomb-edge
units.  The exact overlap predicate works on the binary-float values themselves,
embedded losslessly as rationals, so "touching" versus "overlapping" is decided
exactly with respect to the coordinates actually computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

TWO_PI = 2.0 * math.pi

#: gaps smaller than this are merged when building interval sets (float noise
#: at shared rhomb edges)
MERGE_EPS = 1e-12

Point2 = tuple[float, float]


def normalize_angle(a: float) -> float:
    """Map an angle to [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod can round up to 2*pi
        a -= TWO_PI
    return a


@dataclass(frozen=True)
class AngularIntervalSet:
    """A union of arcs on the circle, canonical and pairwise disjoint.

    Each stored interval is (start, end) with start in [0, 2*pi) and
    start < end <= start + 2*pi; end > 2*pi marks an arc wrapping through 0.
    """

    intervals: tuple[tuple[float, float], ...] = ()

    @staticmethod
    def empty() -> "AngularIntervalSet":
        return AngularIntervalSet(())

    @staticmethod
    def full_circle() -> "AngularIntervalSet":
        return AngularIntervalSet(((0.0, TWO_PI),))

    @staticmethod
    def from_intervals(
        pairs: Iterable[tuple[float, float]], merge_eps: float = MERGE_EPS
    ) -> "AngularIntervalSet":
        """Build a canonical set from CCW (start, end) arcs.

        end < start is read as wrapping through 0.  Arcs of length below
        merge_eps are dropped; arcs separated by gaps below merge_eps are
        merged.
        """
        norm: list[tuple[float, float]] = []
        for a, b in pairs:
            length = b - a
            if length >= TWO_PI - merge_eps:
                return AngularIntervalSet.full_circle()
            length = math.fmod(length, TWO_PI)
            if length < 0.0:
                length += TWO_PI
            if length <= merge_eps:
                continue
            s = normalize_angle(a)
            norm.append((s, s + length))
        if not norm:
            return AngularIntervalSet(())
        norm.sort()
        merged = [list(norm[0])]
        for s, e in norm[1:]:
            if s <= merged[-1][1] + merge_eps:
                merged[-1][1] = max(merged[-1][1], e)
            else:
                merged.append([s, e])
        # wrap-around: the last interval may reach past 2*pi into leading ones
        while len(merged) > 1 and merged[-1][1] >= merged[0][0] + TWO_PI - merge_eps:
            s0, e0 = merged.pop(0)
            merged[-1][1] = max(merged[-1][1], e0 + TWO_PI)
        total = sum(e - s for s, e in merged)
        if total >= TWO_PI - merge_eps:
            return AngularIntervalSet.full_circle()
        return AngularIntervalSet(tuple((s, e) for s, e in merged))

    def __bool__(self) -> bool:
        return bool(self.intervals)

    @property
    def measure(self) -> float:
        return sum(e - s for s, e in self.intervals)

    def union(self, other: "AngularIntervalSet") -> "AngularIntervalSet":
        return AngularIntervalSet.from_intervals(self.intervals + other.intervals)

    def rotated(self, delta: float) -> "AngularIntervalSet":
        return AngularIntervalSet.from_intervals(
            tuple((s + delta, e + delta) for s, e in self.intervals)
        )

    def contains_angle(self, phi: float, tol: float = 0.0) -> bool:
        phi = normalize_angle(phi)
        for s, e in self.intervals:
            if s - tol <= phi <= e + tol or s - tol <= phi + TWO_PI <= e + tol:
                return True
        return False


def shortest_covering_arc(s: AngularIntervalSet) -> float | None:
    """Angle of the shortest single arc covering every interval of ``s``.

    Returns None for an empty set (no intersection), which is distinct from a
    zero-measure answer.  For a single interval this is its measure; in general
    it is 2*pi minus the largest gap between consecutive intervals.
    """
    ivs = s.intervals
    if not ivs:
        return None
    if len(ivs) == 1:
        return min(ivs[0][1] - ivs[0][0], TWO_PI)
    max_gap = 0.0
    for i, (start, end) in enumerate(ivs):
        nxt = ivs[(i + 1) % len(ivs)][0]
        gap = nxt - end
        if gap < 0.0:
            gap += TWO_PI
        if gap > max_gap:
            max_gap = gap
    return TWO_PI - max_gap


def covering_arc_of_angles(angles: Sequence[float]) -> float | None:
    """Shortest arc covering a finite set of directions (max-gap rule)."""
    if not angles:
        return None
    srt = sorted(normalize_angle(a) for a in angles)
    if len(srt) == 1:
        return 0.0
    max_gap = srt[0] + TWO_PI - srt[-1]
    for a, b in zip(srt, srt[1:]):
        if b - a > max_gap:
            max_gap = b - a
    return TWO_PI - max_gap


# ---------------------------------------------------------------------------
# convex quadrilaterals and circle intersection


@dataclass(frozen=True)
class ConvexQuad:
    """Four vertices in CCW order; zero-area quads must be flagged degenerate."""

    vertices: tuple[Point2, Point2, Point2, Point2]
    degenerate: bool = False

    DEGENERATE_AREA = 1e-14

    @staticmethod
    def from_vertices(vs: Sequence[Point2]) -> "ConvexQuad":
        """Orient to CCW; auto-flag degenerate when the area vanishes."""
        if len(vs) != 4:
            raise ValueError("quad needs exactly 4 vertices")
        area2 = _signed_area2(vs)
        if abs(area2) <= ConvexQuad.DEGENERATE_AREA:
            return ConvexQuad(tuple(vs), degenerate=True)  # type: ignore[arg-type]
        if area2 < 0.0:
            vs = list(reversed(vs))
        q = ConvexQuad(tuple(vs))  # type: ignore[arg-type]
        if not q.is_convex():
            raise ValueError("quad is not convex")
        return q

    def is_convex(self, tol: float = 1e-12) -> bool:
        vs = self.vertices
        for i in range(4):
            a, b, c = vs[i], vs[(i + 1) % 4], vs[(i + 2) % 4]
            cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])
            if cross < -tol:
                return False
        return True

    def contains(self, p: Point2, tol: float = 1e-12) -> bool:
        """Closed containment test (boundary counts as inside)."""
        if self.degenerate:
            return False
        vs = self.vertices
        for i in range(4):
            a, b = vs[i], vs[(i + 1) % 4]
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cross < -tol:
                return False
        return True

    def edges(self) -> list[tuple[Point2, Point2]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % 4]) for i in range(4)]


def shrink_convex(vs: Sequence[Point2], delta: float) -> list[Point2] | None:
    """Offset every edge of a convex polygon inward by ``delta``.

    Returns the shrunk vertices (edge-line intersections) or None when the
    polygon is too thin to survive the offset.  Used to ignore hairline
    contacts: two convex regions overlap by more than a sliver of width
    ~delta iff their shrunk versions still intersect.
    """
    pts = list(vs)
    area2 = _signed_area2(pts)
    if abs(area2) <= ConvexQuad.DEGENERATE_AREA:
        return None
    if area2 < 0.0:
        pts = list(reversed(pts))
    n = len(pts)
    lines = []  # (nx, ny, c) with nx*x + ny*y = c on the shifted edge line
    for i in range(n):
        (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % n]
        ex, ey = x1 - x0, y1 - y0
        length = math.hypot(ex, ey)
        if length < 1e-15:
            return None
        nx, ny = ey / length, -ex / length  # outward normal for CCW order
        lines.append((nx, ny, nx * x0 + ny * y0 - delta))
    out: list[Point2] = []
    for i in range(n):
        a = lines[i - 1]
        b = lines[i]
        det = a[0] * b[1] - a[1] * b[0]
        if abs(det) < 1e-15:
            return None
        x = (a[2] * b[1] - b[2] * a[1]) / det
        y = (a[0] * b[2] - b[0] * a[2]) / det
        out.append((x, y))
    if _signed_area2(out) <= ConvexQuad.DEGENERATE_AREA:
        return None
    for i in range(n):
        p, q, r = out[i], out[(i + 1) % n], out[(i + 2) % n]
        if (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0]) <= 0.0:
            return None
    # over-shrinking past the inradius produces a point-reflected phantom that
    # is still convex and CCW; it is exposed by violating the shifted planes
    for x, y in out:
        for nx, ny, c in lines:
            if nx * x + ny * y > c + 1e-12:
                return None
    return out


def _signed_area2(vs: Sequence[Point2]) -> float:
    s = 0.0
    n = len(vs)
    for i in range(n):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


@dataclass(frozen=True)
class CircleQuadArcs:
    """Arcs of a circle lying inside a quad, plus isolated touch angles.

    Zero-measure contacts (tangency, degenerate quad) are reported in
    ``touches`` and never as intervals: the overlap machinery cares about
    interior points only.
    """

    intervals: AngularIntervalSet
    touches: tuple[float, ...] = ()


def _segment_circle_params(p: Point2, q: Point2, r: float) -> list[float]:
    """Parameters t in [0,1] where segment p+t(q-p) meets the circle |x|=r."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    a = dx * dx + dy * dy
    if a < 1e-30:
        return []
    b = 2.0 * (p[0] * dx + p[1] * dy)
    c = p[0] * p[0] + p[1] * p[1] - r * r
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    ts = [(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
    out = []
    for t in ts:
        if -1e-12 <= t <= 1.0 + 1e-12:
            out.append(min(max(t, 0.0), 1.0))
    return out


def circle_quad_arcs(center: Point2, r: float, q: ConvexQuad) -> CircleQuadArcs:
    """Angular intervals phi with center + r*(cos phi, sin phi) inside quad ``q``.

    The circle is intersected with each edge; the resulting angular partition is
    classified by midpoint membership.  At most 4 intervals can result.
    """
    if r <= 0.0:
        raise ValueError("radius must be positive")
    vs = [(x - center[0], y - center[1]) for x, y in q.vertices]
    shifted = ConvexQuad(tuple(vs), degenerate=q.degenerate)  # type: ignore[arg-type]

    crossings: list[float] = []
    for p0, p1 in shifted.edges():
        for t in _segment_circle_params(p0, p1, r):
            x = p0[0] + t * (p1[0] - p0[0])
            y = p0[1] + t * (p1[1] - p0[1])
            crossings.append(math.atan2(y, x) % TWO_PI)

    if q.degenerate:
        return CircleQuadArcs(AngularIntervalSet.empty(), tuple(sorted(set(crossings))))

    # dedupe circularly (circle through a quad vertex hits two edges there)
    crossings.sort()
    dedup: list[float] = []
    for a in crossings:
        if not dedup or a - dedup[-1] > MERGE_EPS:
            dedup.append(a)
    if len(dedup) > 1 and dedup[0] + TWO_PI - dedup[-1] <= MERGE_EPS:
        dedup.pop()

    if not dedup:
        probe = (r, 0.0)
        if shifted.contains(probe):
            return CircleQuadArcs(AngularIntervalSet.full_circle())
        return CircleQuadArcs(AngularIntervalSet.empty())

    arcs: list[tuple[float, float]] = []
    inside_flags: list[bool] = []
    m = len(dedup)
    for i in range(m):
        a = dedup[i]
        b = dedup[(i + 1) % m]
        if i == m - 1:
            b += TWO_PI
        mid = 0.5 * (a + b)
        p = (r * math.cos(mid), r * math.sin(mid))
        ins = shifted.contains(p)
        inside_flags.append(ins)
        if ins:
            arcs.append((a, b))

    touches = tuple(
        dedup[i]
        for i in range(m)
        if not inside_flags[i] and not inside_flags[(i - 1) % m]
    )
    return CircleQuadArcs(AngularIntervalSet.from_intervals(arcs), touches)


# ---------------------------------------------------------------------------
# exact interior-overlap predicate (rational arithmetic)

FPoint = tuple[Fraction, Fraction]


def _fr(poly: Sequence[Point2]) -> list[FPoint]:
    # Fraction(float) embeds the binary double exactly (denominator a power of 2)
    return [(Fraction(x), Fraction(y)) for x, y in poly]


def _orient(a: FPoint, b: FPoint, c: FPoint) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: FPoint, b: FPoint, p: FPoint) -> bool:
    """p collinear with ab and within its bounding box (closed)."""
    if _orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def _segments_properly_cross(p1: FPoint, p2: FPoint, q1: FPoint, q2: FPoint) -> bool:
    o1 = _orient(p1, p2, q1)
    o2 = _orient(p1, p2, q2)
    o3 = _orient(q1, q2, p1)
    o4 = _orient(q1, q2, p2)
    return o1 * o2 < 0 and o3 * o4 < 0


def _segments_touch(p1: FPoint, p2: FPoint, q1: FPoint, q2: FPoint) -> bool:
    if _segments_properly_cross(p1, p2, q1, q2):
        return True
    for a, b, p in ((p1, p2, q1), (p1, p2, q2), (q1, q2, p1), (q1, q2, p2)):
        if _on_segment(a, b, p):
            return True
    return False


def _area2(poly: Sequence[FPoint]) -> Fraction:
    s = Fraction(0)
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def _check_simple(poly: Sequence[FPoint]) -> None:
    n = len(poly)
    if n < 3:
        raise ValueError("not simple: fewer than 3 vertices")
    for i in range(n):
        if poly[i] == poly[(i + 1) % n]:
            raise ValueError("not simple: repeated consecutive vertex")
    for i in range(n):
        a1, a2 = poly[i], poly[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            b1, b2 = poly[j], poly[(j + 1) % n]
            if _segments_touch(a1, a2, b1, b2):
                raise ValueError("not simple: self-intersection")


def _point_on_boundary(poly: Sequence[FPoint], p: FPoint) -> bool:
    n = len(poly)
    return any(_on_segment(poly[i], poly[(i + 1) % n], p) for i in range(n))


def _point_strictly_inside(poly: Sequence[FPoint], p: FPoint) -> bool:
    if _point_on_boundary(poly, p):
        return False
    # exact crossing number with the half-open rule on y
    inside = False
    n = len(poly)
    px, py = p
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            # x of the edge at height py, compared exactly
            xi = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if px < xi:
                inside = not inside
    return inside


def _interior_point(poly: Sequence[FPoint]) -> FPoint:
    """A point strictly interior to a simple polygon with nonzero area."""
    n = len(poly)
    sign = 1 if _area2(poly) > 0 else -1
    for i in range(n):
        a, b, c = poly[(i - 1) % n], poly[i], poly[(i + 1) % n]
        if _orient(a, b, c) != sign:
            continue
        blocked = False
        for j in range(n):
            p = poly[j]
            if p in (a, b, c):
                continue
            if (
                _orient(a, b, p) * sign >= 0
                and _orient(b, c, p) * sign >= 0
                and _orient(c, a, p) * sign >= 0
            ):
                blocked = True
                break
        if not blocked:
            return ((a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3)
    raise ValueError("could not find an ear; polygon may be degenerate")


def _is_convex_exact(poly: Sequence[FPoint]) -> bool:
    n = len(poly)
    sign = 1 if _area2(poly) > 0 else -1
    for i in range(n):
        if _orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) * sign < 0:
            return False
    return True


def _convex_interiors_overlap(pa: Sequence[FPoint], pb: Sequence[FPoint]) -> bool:
    """Exact separating-axis test: convex interiors are disjoint iff some edge
    line of one polygon has the two polygons on opposite closed sides."""
    for poly, other in ((pa, pb), (pb, pa)):
        n = len(poly)
        sign = 1 if _area2(poly) > 0 else -1
        for i in range(n):
            e1, e2 = poly[i], poly[(i + 1) % n]
            # interior of `poly` is strictly on side `sign` of edge (e1, e2);
            # if `other` lies entirely on the closed opposite side, separated
            if all(_orient(e1, e2, p) * sign <= 0 for p in other):
                return False
    return True


def polygons_interior_overlap(a: Sequence[Point2], b: Sequence[Point2]) -> bool:
    """True iff the open interiors of two simple polygons intersect.

    Boundary-only contact (shared edges, shared vertices) returns False.  All
    predicates are evaluated in exact rational arithmetic on the float inputs.
    Convex inputs take an exact separating-axis path, which also catches
    sliver overlaps thinner than any vertex spacing.
    """
    pa, pb = _fr(a), _fr(b)
    _check_simple(pa)
    _check_simple(pb)
    if _area2(pa) == 0 or _area2(pb) == 0:
        return False
    if _is_convex_exact(pa) and _is_convex_exact(pb):
        return _convex_interiors_overlap(pa, pb)
    na, nb = len(pa), len(pb)
    for i in range(na):
        for j in range(nb):
            if _segments_properly_cross(
                pa[i], pa[(i + 1) % na], pb[j], pb[(j + 1) % nb]
            ):
                return True
    for p in pa:
        if _point_strictly_inside(pb, p):
            return True
    for p in pb:
        if _point_strictly_inside(pa, p):
            return True
    if _point_strictly_inside(pb, _interior_point(pa)):
        return True
    if _point_strictly_inside(pa, _interior_point(pb)):
        return True
    return False
