"""Seven element-decomposed scores for how close a triangulation is to Delaunay.

Three decompositions are used:

* quadrilaterals (an interior edge plus its two triangles) -- scored in
  isolation, lower is better, 0 is perfect;
* edges -- scored against every other point, higher is better, pi is
  perfect for the tangent-angle score and 1 for the covered-fraction score;
* triangles -- scored against every other point, higher is better, 1 is
  perfect.

The Delaunay triangulation, and only it, is perfect on every element of
every metric.  All values are invariant under similarity transformations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .delaunay import VoronoiDiagram, voronoi
from .errors import SiteOutsideCircle
from .geom import (
    Circle,
    Orientation,
    Point,
    PointSet,
    Segment,
    SegmentSide,
    angle_at,
    chord_overlap_length,
    circular_segment_area,
    circumcircle,
    clip_polygon_halfplane,
    in_circumcircle,
    inscribed_circle,
    orientation,
    polygon_area,
)
from .triangulation import Quadrilateral, Triangulation, interior_quadrilaterals

TWO_PI = 2.0 * math.pi


class ScoreOrientation(Enum):
    LOWER_BETTER = "lower_better"
    HIGHER_BETTER = "higher_better"


@dataclass(frozen=True)
class ElementScore:
    element: tuple
    value: float
    orientation: ScoreOrientation


QUADRILATERAL_METRICS = ("opposing_angles", "dual_edge_ratio", "dual_area_overlap")
EDGE_METRICS = ("lens", "shrunk_circle")
TRIANGLE_METRICS = ("triangular_lens", "shrunk_circumcircle")
ALL_METRICS = QUADRILATERAL_METRICS + EDGE_METRICS + TRIANGLE_METRICS

METRIC_ORIENTATION = {
    **{m: ScoreOrientation.LOWER_BETTER for m in QUADRILATERAL_METRICS},
    **{m: ScoreOrientation.HIGHER_BETTER for m in EDGE_METRICS + TRIANGLE_METRICS},
}

PERFECT_VALUE = {
    "opposing_angles": 0.0,
    "dual_edge_ratio": 0.0,
    "dual_area_overlap": 0.0,
    "lens": math.pi,
    "shrunk_circle": 1.0,
    "triangular_lens": 1.0,
    "shrunk_circumcircle": 1.0,
}


# --- quadrilateral scores ----------------------------------------------------


def _locally_delaunay(q: Quadrilateral) -> bool:
    pu, pv, pp, pq = q.coords()
    return not in_circumcircle(pu, pv, pp, pq)


def opposing_angles(q: Quadrilateral) -> ElementScore:
    """Excess of the two opposing angles over pi (0 when locally Delaunay)."""
    pu, pv, pp, pq = q.coords()
    excess = angle_at(pp, pu, pv) + angle_at(pq, pu, pv) - math.pi
    return ElementScore(
        (*q.key()[0], *q.key()[1]),
        max(0.0, excess),
        ScoreOrientation.LOWER_BETTER,
    )


def dual_edge_ratio(q: Quadrilateral) -> ElementScore:
    """Distance between the two circumcenters over the edge length.

    Zero when the quadrilateral is locally Delaunay; otherwise the two
    centers sit in inverted order and their separation measures how far.
    """
    if _locally_delaunay(q):
        value = 0.0
    else:
        pu, pv, pp, pq = q.coords()
        cp = circumcircle(pu, pv, pp).center
        cq = circumcircle(pu, pv, pq).center
        value = math.dist(cp, cq) / math.dist(pu, pv)
    return ElementScore(
        (*q.key()[0], *q.key()[1]), value, ScoreOrientation.LOWER_BETTER
    )


def _bisector_halfplane(keep: Point, cut: Point):
    """Halfplane of points closer to `keep` than to `cut`, as n . x <= c."""
    n = (cut[0] - keep[0], cut[1] - keep[1])
    c = (
        cut[0] * cut[0]
        + cut[1] * cut[1]
        - keep[0] * keep[0]
        - keep[1] * keep[1]
    ) / 2.0
    return n, c


def _line_intersection(n1, c1, n2, c2) -> Point | None:
    det = n1[0] * n2[1] - n1[1] * n2[0]
    if det == 0.0:
        return None
    return Point((c1 * n2[1] - c2 * n1[1]) / det, (n1[0] * c2 - n2[0] * c1) / det)


def _dual_overlap_area(pu: Point, pv: Point, pp: Point, pq: Point) -> float:
    # Work in a frame centred on the quadrilateral for conditioning.
    ox = (pu[0] + pv[0] + pp[0] + pq[0]) / 4.0
    oy = (pu[1] + pv[1] + pp[1] + pq[1]) / 4.0
    u, v, p, q = (
        Point(w[0] - ox, w[1] - oy) for w in (pu, pv, pp, pq)
    )
    halfplanes = [
        _bisector_halfplane(p, u),
        _bisector_halfplane(q, u),
        _bisector_halfplane(q, v),
        _bisector_halfplane(p, v),
    ]
    cp = circumcircle(u, v, p).center
    cq = circumcircle(u, v, q).center
    mu = circumcircle(u, p, q).center
    mv = circumcircle(v, p, q).center
    poly = [cp, mu, cq, mv]
    scale = max(abs(w) for pt in poly for w in pt) or 1.0
    ok = True
    signs = set()
    for i in range(4):
        o = orientation(poly[i], poly[(i + 1) % 4], poly[(i + 2) % 4])
        if o is Orientation.COLLINEAR:
            ok = False
            break
        signs.add(o)
    if len(signs) != 1:
        ok = False
    if ok:
        for n, c in halfplanes:
            bound = 1e-9 * max(1.0, math.hypot(*n)) * max(1.0, scale)
            if any(n[0] * x + n[1] * y - c > bound for x, y in poly):
                ok = False
                break
    if ok:
        return polygon_area(poly)
    # Fallback: clip a box around every pairwise bisector intersection.
    corners = [w for w in (cp, cq, mu, mv)]
    for i in range(4):
        for j in range(i + 1, 4):
            w = _line_intersection(*halfplanes[i], *halfplanes[j])
            if w is not None and math.isfinite(w[0]) and math.isfinite(w[1]):
                corners.append(w)
    xs = [w[0] for w in corners]
    ys = [w[1] for w in corners]
    pad = max(max(xs) - min(xs), max(ys) - min(ys), math.dist(u, v)) + 1.0
    box = [
        Point(min(xs) - pad, min(ys) - pad),
        Point(max(xs) + pad, min(ys) - pad),
        Point(max(xs) + pad, max(ys) + pad),
        Point(min(xs) - pad, max(ys) + pad),
    ]
    region = box
    for n, c in halfplanes:
        region = clip_polygon_halfplane(region, n, c)
        if not region:
            return 0.0
    return polygon_area(region)


def dual_area_overlap(q: Quadrilateral) -> ElementScore:
    """Overlap area of the two opposing local cells over the squared edge length.

    The cell of p is bounded by the bisectors of (p, u) and (p, v); for a
    locally Delaunay quadrilateral it is disjoint from q's cell.
    """
    if _locally_delaunay(q):
        value = 0.0
    else:
        pu, pv, pp, pq = q.coords()
        value = _dual_overlap_area(pu, pv, pp, pq) / math.dist(pu, pv) ** 2
    return ElementScore(
        (*q.key()[0], *q.key()[1]), value, ScoreOrientation.LOWER_BETTER
    )


# --- edge scores -------------------------------------------------------------


def _lens_value(ps: PointSet, u: int, v: int) -> float:
    """Tangent angle of the widest empty lens over the edge, capped at pi.

    Each side contributes pi minus the largest angle the edge subtends from
    a point strictly on that side (pi when the side is empty); by the
    inscribed-angle theorem this is the tangent direction of the largest
    empty arc on that side.
    """
    pts = ps.points
    pu, pv = pts[u], pts[v]
    best = {Orientation.CCW: 0.0, Orientation.CW: 0.0}
    for i, pw in enumerate(pts):
        if i == u or i == v:
            continue
        side = orientation(pu, pv, pw)
        if side is Orientation.COLLINEAR:
            continue
        ang = angle_at(pw, pu, pv)
        if ang > best[side]:
            best[side] = ang
    theta = (math.pi - best[Orientation.CCW]) + (math.pi - best[Orientation.CW])
    return min(math.pi, theta)


def lens(edge, ps: PointSet, t: Triangulation) -> ElementScore:
    u, v = min(edge), max(edge)
    if not t.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the triangulation")
    return ElementScore((u, v), _lens_value(ps, u, v), ScoreOrientation.HIGHER_BETTER)


def _shrunk_circle_value(ps: PointSet, vd: VoronoiDiagram, u: int, v: int) -> float:
    """Largest fraction of the edge covered by an empty circle.

    The best empty circle is centred on the Voronoi diagram, the coverage is
    convex along its edges, and unbounded edges are dominated by their
    bounded endpoint, so only the maximal circles at Voronoi vertices need
    testing.
    """
    seg = Segment(ps.points[u], ps.points[v])
    length = math.dist(seg.a, seg.b)
    best = 0.0
    for vert in vd.vertices:
        overlap = chord_overlap_length(vert.circle(), seg)
        if overlap > best:
            best = overlap
    return min(1.0, max(0.0, best / length))


def shrunk_circle(edge, ps: PointSet, vd: VoronoiDiagram) -> ElementScore:
    u, v = min(edge), max(edge)
    return ElementScore(
        (u, v), _shrunk_circle_value(ps, vd, u, v), ScoreOrientation.HIGHER_BETTER
    )


# --- triangle scores ---------------------------------------------------------


def _segment_area_on_side(circle: Circle, a: Point, b: Point, side: Orientation) -> float:
    """Area of the circular segment cut by chord ab on the given side of a->b."""
    center_side = orientation(a, b, circle.center)
    if center_side is side:
        kind = SegmentSide.CONTAINS_CENTER
    else:
        kind = SegmentSide.OPPOSITE_CENTER  # includes center-on-chord: halves agree
    return circular_segment_area(circle, Segment(a, b), kind)


def _triangular_lens_value(ps: PointSet, tri) -> float:
    pts = ps.points
    iu, iv, iw = tri
    corners = (pts[iu], pts[iv], pts[iw])
    circ = circumcircle(*corners)
    r2 = circ.radius * circ.radius
    tri_area = polygon_area(corners)
    denom = math.pi * r2 - tri_area
    inside = [
        i
        for i, p in enumerate(pts)
        if i not in tri
        and (p[0] - circ.center[0]) ** 2 + (p[1] - circ.center[1]) ** 2 < r2
    ]
    total = 0.0
    for a, b, opposite in ((iu, iv, iw), (iv, iw, iu), (iw, iu, iv)):
        pa, pb, pc = pts[a], pts[b], pts[opposite]
        inner = orientation(pa, pb, pc)
        outer = Orientation.CW if inner is Orientation.CCW else Orientation.CCW
        best_ang = 0.0
        best_pt = None
        for i in inside:
            p = pts[i]
            if orientation(pa, pb, p) is not outer:
                continue
            ang = angle_at(p, pa, pb)
            if ang > best_ang:
                best_ang, best_pt = ang, p
        if best_pt is None:
            total += _segment_area_on_side(circ, pa, pb, outer)
        else:
            arc = circumcircle(pa, pb, best_pt)
            total += _segment_area_on_side(arc, pa, pb, outer)
    return total / denom


def triangular_lens(tri, ps: PointSet) -> ElementScore:
    """Fraction of the circumcircle outside the triangle covered by the three
    largest empty arcs, one per side."""
    key = tuple(sorted(tri))
    return ElementScore(
        key, _triangular_lens_value(ps, key), ScoreOrientation.HIGHER_BETTER
    )


# --- local diagram of a circle and its interior sites ------------------------


@dataclass(frozen=True)
class Ellipse:
    """Locus of centers of circles tangent internally to a boundary circle
    and passing through one interior site: foci at the circle center and the
    site, focal-distance sum equal to the circle radius."""

    center: Point
    axis: tuple[float, float]  # unit direction toward the far-from-site vertex
    a: float  # semi-major
    b: float  # semi-minor
    c: float  # focal half-distance
    site: Point

    def point_at(self, theta: float) -> Point:
        ca, sa = math.cos(theta), math.sin(theta)
        ex, ey = self.axis
        return Point(
            self.center[0] + self.a * ca * ex - self.b * sa * ey,
            self.center[1] + self.a * ca * ey + self.b * sa * ex,
        )

    def radius_at(self, theta: float) -> float:
        # distance to the site focus; maximal at theta = 0
        return self.a + self.c * math.cos(theta)


@dataclass(frozen=True)
class EllipticalSegment:
    site: Point
    ellipse: Ellipse
    theta_lo: float
    theta_hi: float


@dataclass(frozen=True)
class StraightSegment:
    sites: tuple[Point, Point]
    a: Point
    b: Point


@dataclass(frozen=True)
class LocalVoronoiDiagram:
    circle: Circle
    sites: tuple[Point, ...]
    segments: tuple[EllipticalSegment | StraightSegment, ...]


def _site_ellipse(circle: Circle, site: Point) -> Ellipse:
    o, big_r = circle
    d = math.dist(o, site)
    center = Point((o[0] + site[0]) / 2.0, (o[1] + site[1]) / 2.0)
    if d > 1e-15 * big_r:
        axis = ((o[0] - site[0]) / d, (o[1] - site[1]) / d)
    else:
        axis = (1.0, 0.0)
    a = big_r / 2.0
    cf = d / 2.0
    return Ellipse(center, axis, a, math.sqrt(max(0.0, a * a - cf * cf)), cf, site)


def _intersect_intervals(xs, ys):
    out = []
    for lo1, hi1 in xs:
        for lo2, hi2 in ys:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if hi > lo:
                out.append((lo, hi))
    return out


def _ellipse_halfplane_arcs(ell: Ellipse, n, c):
    """Arcs (in parameter space, within [0, 2pi]) where n . x(theta) <= c."""
    ex, ey = ell.axis
    big_a = ell.a * (n[0] * ex + n[1] * ey)
    big_b = ell.b * (-n[0] * ey + n[1] * ex)
    big_c = c - (n[0] * ell.center[0] + n[1] * ell.center[1])
    rad = math.hypot(big_a, big_b)
    if rad <= abs(big_c) or rad == 0.0:
        mid = ell.point_at(1.0)  # arbitrary probe
        return [(0.0, TWO_PI)] if n[0] * mid[0] + n[1] * mid[1] <= c else []
    phi = math.atan2(big_b, big_a)
    delta = math.acos(max(-1.0, min(1.0, big_c / rad)))
    roots = sorted(((phi - delta) % TWO_PI, (phi + delta) % TWO_PI))
    t1, t2 = roots
    arcs = []
    for lo, hi in ((t1, t2), (t2, t1 + TWO_PI)):
        mid = ell.point_at((lo + hi) / 2.0)
        if n[0] * mid[0] + n[1] * mid[1] <= c:
            if hi <= TWO_PI:
                arcs.append((lo, hi))
            else:  # wraps; split at 2pi
                arcs.append((lo, TWO_PI))
                if hi - TWO_PI > 0.0:
                    arcs.append((0.0, hi - TWO_PI))
    return arcs


def local_voronoi(c: Circle, inside_sites: Sequence[Point]) -> LocalVoronoiDiagram:
    """Locus of centers of maximal circles empty of the sites and contained
    in the given circle: elliptical arcs (circle boundary vs one site) and
    straight bisector pieces (two sites)."""
    o, big_r = c
    sites = tuple(Point(float(p[0]), float(p[1])) for p in inside_sites)
    for s in sites:
        if math.dist(o, s) >= big_r:
            raise SiteOutsideCircle(f"site {s} is not strictly inside {c}")
    segments: list[EllipticalSegment | StraightSegment] = []
    ellipses = [_site_ellipse(c, s) for s in sites]
    for i, s in enumerate(sites):
        ell = ellipses[i]
        arcs = [(0.0, TWO_PI)]
        for j, other in enumerate(sites):
            if j == i:
                continue
            n, cc = _bisector_halfplane(s, other)
            arcs = _intersect_intervals(arcs, _ellipse_halfplane_arcs(ell, n, cc))
            if not arcs:
                break
        for lo, hi in sorted(arcs):
            segments.append(EllipticalSegment(s, ell, lo, hi))
    for i in range(len(sites)):
        for j in range(i + 1, len(sites)):
            si, sj = sites[i], sites[j]
            mid = Point((si[0] + sj[0]) / 2.0, (si[1] + sj[1]) / 2.0)
            dx, dy = sj[0] - si[0], sj[1] - si[1]
            norm = math.hypot(dx, dy)
            d = (-dy / norm, dx / norm)
            lo, hi = -math.inf, math.inf
            for k, other in enumerate(sites):
                if k in (i, j):
                    continue
                n, cc = _bisector_halfplane(si, other)
                a0 = n[0] * mid[0] + n[1] * mid[1] - cc
                a1 = n[0] * d[0] + n[1] * d[1]
                if a1 == 0.0:
                    if a0 > 0.0:
                        lo, hi = 1.0, 0.0
                        break
                    continue
                t = -a0 / a1
                if a1 > 0.0:
                    hi = min(hi, t)
                else:
                    lo = max(lo, t)
            if lo >= hi:
                continue
            # keep only the part whose circles fit inside the boundary circle:
            # |x - si| + |x - o| <= R, i.e. x inside the site's ellipse
            ell = ellipses[i]
            ex, ey = ell.axis
            px, py = mid[0] - ell.center[0], mid[1] - ell.center[1]
            p1, p2 = px * ex + py * ey, -px * ey + py * ex
            d1, d2 = d[0] * ex + d[1] * ey, -d[0] * ey + d[1] * ex
            qa = (d1 / ell.a) ** 2 + (d2 / ell.b) ** 2
            qb = 2.0 * (p1 * d1 / ell.a**2 + p2 * d2 / ell.b**2)
            qc = (p1 / ell.a) ** 2 + (p2 / ell.b) ** 2 - 1.0
            disc = qb * qb - 4.0 * qa * qc
            if disc <= 0.0:
                continue
            root = math.sqrt(disc)
            lo = max(lo, (-qb - root) / (2.0 * qa))
            hi = min(hi, (-qb + root) / (2.0 * qa))
            if lo >= hi:
                continue
            segments.append(
                StraightSegment(
                    (si, sj),
                    Point(mid[0] + lo * d[0], mid[1] + lo * d[1]),
                    Point(mid[0] + hi * d[0], mid[1] + hi * d[1]),
                )
            )
    return LocalVoronoiDiagram(c, sites, tuple(segments))


# --- largest contained empty circle ------------------------------------------


def _dist_point_segment(x: Point, a: Point, b: Point) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    t = ((x[0] - a[0]) * dx + (x[1] - a[1]) * dy) / (dx * dx + dy * dy)
    t = max(0.0, min(1.0, t))
    return math.hypot(x[0] - a[0] - t * dx, x[1] - a[1] - t * dy)


def _crossings(f, lo: float, hi: float, samples: int = 129) -> list[float]:
    """Roots of f on [lo, hi] located by sampling plus bisection."""
    if hi <= lo:
        return []
    xs = [lo + (hi - lo) * k / (samples - 1) for k in range(samples)]
    vals = [f(x) for x in xs]
    roots = []
    for k in range(samples - 1):
        v0, v1 = vals[k], vals[k + 1]
        if v0 == 0.0:
            roots.append(xs[k])
            continue
        if v0 * v1 < 0.0:
            a, b = xs[k], xs[k + 1]
            fa = v0
            for _ in range(80):
                m = (a + b) / 2.0
                fm = f(m)
                if fm == 0.0:
                    break
                if fa * fm < 0.0:
                    b = m
                else:
                    a, fa = m, fm
            roots.append((a + b) / 2.0)
    if vals[-1] == 0.0:
        roots.append(xs[-1])
    return roots


def _shrunk_circumcircle_value(ps: PointSet, tri) -> float:
    pts = ps.points
    corners = tuple(pts[i] for i in tri)
    circ = circumcircle(*corners)
    o, big_r = circ
    r2 = big_r * big_r
    sites = [
        p
        for i, p in enumerate(pts)
        if i not in tri and (p[0] - o[0]) ** 2 + (p[1] - o[1]) ** 2 < r2
    ]
    if not sites:
        return 1.0
    inc = inscribed_circle(*corners)
    sides = [
        (corners[0], corners[1]),
        (corners[1], corners[2]),
        (corners[2], corners[0]),
    ]
    diagram = local_voronoi(circ, sites)
    candidates: list[tuple[Point, float]] = []
    for seg in diagram.segments:
        if isinstance(seg, StraightSegment):
            sa, sb = seg.a, seg.b
            site = seg.sites[0]

            def pos(t, sa=sa, sb=sb):
                return Point(sa[0] + t * (sb[0] - sa[0]), sa[1] + t * (sb[1] - sa[1]))

            def rad(t, site=site, pos=pos):
                return math.dist(pos(t), site)

            params = [0.0, 1.0]
            for a, b in sides:
                params.extend(
                    _crossings(
                        lambda t: _dist_point_segment(pos(t), a, b) - rad(t), 0.0, 1.0
                    )
                )
            candidates.extend((pos(t), rad(t)) for t in params)
        else:
            ell = seg.ellipse

            params = [seg.theta_lo, seg.theta_hi]
            for a, b in sides:
                params.extend(
                    _crossings(
                        lambda th: _dist_point_segment(ell.point_at(th), a, b)
                        - ell.radius_at(th),
                        seg.theta_lo,
                        seg.theta_hi,
                    )
                )
            candidates.extend((ell.point_at(th), ell.radius_at(th)) for th in params)
    slack = 1e-9 * big_r
    best = inc.radius  # the incircle is always empty and meets all three sides
    for x, r in candidates:
        if r <= best:
            continue
        if all(_dist_point_segment(x, a, b) <= r + slack for a, b in sides):
            best = r
    best = min(best, big_r)
    ri2 = inc.radius * inc.radius
    return max(0.0, min(1.0, (best * best - ri2) / (r2 - ri2)))


def shrunk_circumcircle(tri, ps: PointSet, vd: VoronoiDiagram | None = None) -> ElementScore:
    """Area of the largest empty circle inside the circumcircle that meets
    all three sides, between the inscribed circle (0) and the circumcircle (1).

    `vd` mirrors the covered-fraction score's signature; at this scale the
    local diagram is rebuilt per triangle from the contained points alone.
    """
    key = tuple(sorted(tri))
    return ElementScore(
        key, _shrunk_circumcircle_value(ps, key), ScoreOrientation.HIGHER_BETTER
    )


# --- whole-triangulation evaluation ------------------------------------------


class Evaluator:
    """Caches per-element values for one point set.

    Edge and triangle scores depend only on the element and the point set,
    and quadrilateral scores only on the four defining points, so scores are
    shared across all triangulations of the same point set.  This is what
    makes exhaustive optimization cheap.
    """

    def __init__(self, ps: PointSet):
        self.point_set = ps
        self._vd: VoronoiDiagram | None = None
        self._cache: dict[str, dict] = {m: {} for m in ALL_METRICS}

    def voronoi(self) -> VoronoiDiagram:
        if self._vd is None:
            self._vd = voronoi(self.point_set)
        return self._vd

    def _quad_value(self, metric: str, quad: Quadrilateral) -> float:
        key = quad.key()
        cache = self._cache[metric]
        if key not in cache:
            fn = {
                "opposing_angles": opposing_angles,
                "dual_edge_ratio": dual_edge_ratio,
                "dual_area_overlap": dual_area_overlap,
            }[metric]
            cache[key] = fn(quad).value
        return cache[key]

    def _edge_value(self, metric: str, edge) -> float:
        cache = self._cache[metric]
        if edge not in cache:
            if metric == "lens":
                cache[edge] = _lens_value(self.point_set, *edge)
            else:
                cache[edge] = _shrunk_circle_value(self.point_set, self.voronoi(), *edge)
        return cache[edge]

    def _triangle_value(self, metric: str, tri) -> float:
        cache = self._cache[metric]
        if tri not in cache:
            if metric == "triangular_lens":
                cache[tri] = _triangular_lens_value(self.point_set, tri)
            else:
                cache[tri] = _shrunk_circumcircle_value(self.point_set, tri)
        return cache[tri]

    def scores(self, t: Triangulation, metric: str) -> list[ElementScore]:
        if metric not in ALL_METRICS:
            raise ValueError(f"unknown metric {metric!r}")
        orient = METRIC_ORIENTATION[metric]
        if metric in QUADRILATERAL_METRICS:
            return [
                ElementScore(
                    (*quad.key()[0], *quad.key()[1]),
                    self._quad_value(metric, quad),
                    orient,
                )
                for quad in interior_quadrilaterals(t)
            ]
        if metric in EDGE_METRICS:
            return [
                ElementScore(e, self._edge_value(metric, e), orient)
                for e in t.edges()
            ]
        return [
            ElementScore(tri, self._triangle_value(metric, tri), orient)
            for tri in t.triangles
        ]

    def values(self, t: Triangulation, metric: str) -> tuple[float, ...]:
        return tuple(s.value for s in self.scores(t, metric))


def evaluate(t: Triangulation, metric: str) -> list[ElementScore]:
    """One score per element of the metric's decomposition, in canonical order."""
    return Evaluator(t.point_set).scores(t, metric)
