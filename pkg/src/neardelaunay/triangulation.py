"""Triangulations over a point set: representation, validation, enumeration.

A triangulation is stored canonically: each triangle as an ascending index
triple, the triple set sorted lexicographically.  That single ordering
defines determinism for enumeration, tie-breaking and file output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EnumerationTooLarge, MismatchedPointSets
from .geom import (
    Orientation,
    Point,
    PointSet,
    orientation,
    polygon_area,
    validate_general_position,
)

Triple = tuple[int, int, int]
EdgeKey = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 12


def _canon_triples(triangles) -> tuple[Triple, ...]:
    return tuple(sorted(tuple(sorted(t)) for t in triangles))


class Triangulation:
    """Immutable triangle set over a PointSet."""

    __slots__ = ("point_set", "triangles", "_edge_map", "_length", "_degree")

    def __init__(self, point_set: PointSet, triangles):
        self.point_set = point_set
        self.triangles: tuple[Triple, ...] = _canon_triples(triangles)
        self._edge_map: dict[EdgeKey, tuple[Triple, ...]] | None = None
        self._length: float | None = None
        self._degree: int | None = None

    def edge_map(self) -> dict[EdgeKey, tuple[Triple, ...]]:
        """Sorted edge -> incident triangles."""
        if self._edge_map is None:
            m: dict[EdgeKey, list[Triple]] = {}
            for t in self.triangles:
                i, j, k = t
                for e in ((i, j), (i, k), (j, k)):
                    m.setdefault(e, []).append(t)
            self._edge_map = {e: tuple(ts) for e, ts in m.items()}
        return self._edge_map

    def edges(self) -> tuple[EdgeKey, ...]:
        return tuple(sorted(self.edge_map()))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edge_map()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Triangulation)
            and self.point_set == other.point_set
            and self.triangles == other.triangles
        )

    def __hash__(self) -> int:
        return hash((self.point_set, self.triangles))

    def __repr__(self) -> str:
        return f"Triangulation({len(self.triangles)} triangles)"


@dataclass(frozen=True)
class Quadrilateral:
    """An interior edge (u, v) plus the opposing vertices (p, q) of its two triangles."""

    point_set: PointSet
    u: int
    v: int
    p: int
    q: int

    def __post_init__(self):
        pts = self.point_set.points
        su = orientation(pts[self.u], pts[self.v], pts[self.p])
        sv = orientation(pts[self.u], pts[self.v], pts[self.q])
        if (
            su is Orientation.COLLINEAR
            or sv is Orientation.COLLINEAR
            or su is sv
        ):
            raise ValueError(
                f"opposing vertices {self.p}, {self.q} must lie strictly on "
                f"opposite sides of edge ({self.u}, {self.v})"
            )

    def coords(self) -> tuple[Point, Point, Point, Point]:
        pts = self.point_set.points
        return pts[self.u], pts[self.v], pts[self.p], pts[self.q]

    def key(self) -> tuple[EdgeKey, EdgeKey]:
        return (
            (min(self.u, self.v), max(self.u, self.v)),
            (min(self.p, self.q), max(self.p, self.q)),
        )


# --- constraints -----------------------------------------------------------


@dataclass(frozen=True)
class RequiredEdges:
    edges: frozenset[EdgeKey]

    def __init__(self, edges):
        norm = frozenset((min(i, j), max(i, j)) for i, j in edges)
        object.__setattr__(self, "edges", norm)


@dataclass(frozen=True)
class MinTotalLength:
    """Total edge length at least factor times the Delaunay total length."""

    factor: float

    def __post_init__(self):
        if not self.factor > 0:
            raise ValueError("length factor must be positive")


@dataclass(frozen=True)
class MaxTotalLength:
    factor: float

    def __post_init__(self):
        if not self.factor > 0:
            raise ValueError("length factor must be positive")


@dataclass(frozen=True)
class MaxDegree:
    bound: int

    def __post_init__(self):
        if self.bound < 3:
            raise ValueError("degree bound must be at least 3")


Constraint = RequiredEdges | MinTotalLength | MaxTotalLength | MaxDegree


# --- queries ---------------------------------------------------------------


def interior_quadrilaterals(t: Triangulation) -> list[Quadrilateral]:
    """One quadrilateral per non-hull edge, ordered by edge."""
    quads = []
    for edge, tris in sorted(t.edge_map().items()):
        if len(tris) != 2:
            continue
        u, v = edge
        p = next(i for i in tris[0] if i not in edge)
        q = next(i for i in tris[1] if i not in edge)
        quads.append(Quadrilateral(t.point_set, u, v, p, q))
    return quads


def total_edge_length(t: Triangulation) -> float:
    if t._length is None:
        pts = t.point_set.points
        t._length = sum(math.dist(pts[i], pts[j]) for i, j in t.edge_map())
    return t._length


def max_degree(t: Triangulation) -> int:
    if t._degree is None:
        deg: dict[int, int] = {}
        for i, j in t.edge_map():
            deg[i] = deg.get(i, 0) + 1
            deg[j] = deg.get(j, 0) + 1
        t._degree = max(deg.values())
    return t._degree


def satisfies(t: Triangulation, c: Constraint, dt_length: float) -> bool:
    """Check a constraint; dt_length is the Delaunay triangulation's total length."""
    if isinstance(c, RequiredEdges):
        return all(e in t.edge_map() for e in c.edges)
    if isinstance(c, MinTotalLength):
        return total_edge_length(t) >= c.factor * dt_length
    if isinstance(c, MaxTotalLength):
        return total_edge_length(t) <= c.factor * dt_length
    if isinstance(c, MaxDegree):
        return max_degree(t) <= c.bound
    raise TypeError(f"unknown constraint {c!r}")


def edge_diff(t1: Triangulation, t2: Triangulation) -> set[EdgeKey]:
    """Edges of t1 that are absent from t2."""
    if t1.point_set != t2.point_set:
        raise MismatchedPointSets("triangulations are over different point sets")
    return set(t1.edge_map()) - set(t2.edge_map())


def _triangles_overlap(pa: Sequence[Point], pb: Sequence[Point]) -> bool:
    # Clip pa against pb's halfplanes; positive leftover area means overlap.
    # The area threshold scales with the triangles' own extent so the test
    # is translation-invariant.
    from .geom import clip_polygon_halfplane

    if orientation(*pb) is Orientation.CW:
        pb = (pb[0], pb[2], pb[1])
    poly = list(pa)
    pts = list(pa) + list(pb)
    scale = max(
        max(p[0] for p in pts) - min(p[0] for p in pts),
        max(p[1] for p in pts) - min(p[1] for p in pts),
    ) or 1.0
    for i in range(3):
        a, b = pb[i], pb[(i + 1) % 3]
        # inside is the left of a->b: n . x <= c with n the right normal
        n = (b[1] - a[1], a[0] - b[0])
        c = n[0] * a[0] + n[1] * a[1]
        poly = clip_polygon_halfplane(poly, n, c)
        if not poly:
            return False
    return polygon_area(poly) > 1e-12 * scale * scale


def validate(t: Triangulation) -> bool:
    """True iff the triangle set is a triangulation of the point set's hull.

    Checks index sanity, non-degenerate triangles, full vertex usage, the
    Euler counts for 2n - h - 2 triangles and 3n - h - 3 edges, and pairwise
    disjointness of triangle interiors.
    """
    ps = t.point_set
    n = len(ps)
    pts = ps.points
    tris = t.triangles
    if len(set(tris)) != len(tris) or not tris:
        return False
    used = set()
    for tri in tris:
        i, j, k = tri
        if not (0 <= i < j < k < n):
            return False
        if orientation(pts[i], pts[j], pts[k]) is Orientation.COLLINEAR:
            return False
        used.update(tri)
    if len(used) != n:
        return False
    hull = ps.hull()
    h = len(hull)
    if len(tris) != 2 * n - h - 2:
        return False
    if len(t.edge_map()) != 3 * n - h - 3:
        return False
    if any(len(owners) > 2 for owners in t.edge_map().values()):
        return False
    # disjoint triangles inside the hull tile it iff the areas add up
    hull_area = polygon_area([pts[i] for i in hull])
    covered = sum(polygon_area([pts[i] for i in tri]) for tri in tris)
    if abs(covered - hull_area) > 1e-9 * hull_area:
        return False
    for a in range(len(tris)):
        ta = [pts[i] for i in tris[a]]
        for b in range(a + 1, len(tris)):
            tb = [pts[i] for i in tris[b]]
            if len(set(tris[a]) & set(tris[b])) == 3:
                return False
            if _triangles_overlap(ta, tb):
                return False
    return True


# --- flips and enumeration -------------------------------------------------


def flip_partner(tris: frozenset[Triple], edge: EdgeKey) -> tuple[int, int] | None:
    """Opposing vertices (p, q) of an edge if it is interior, else None."""
    u, v = edge
    opp = [i for t in tris if u in t and v in t for i in t if i != u and i != v]
    if len(opp) != 2:
        return None
    return opp[0], opp[1]


def flip(ps: PointSet, tris: frozenset[Triple], edge: EdgeKey) -> frozenset[Triple] | None:
    """Replace interior edge (u, v) with the opposite diagonal (p, q).

    Returns None when the edge is not interior or the surrounding
    quadrilateral is not strictly convex (the flip would fold over).
    """
    partner = flip_partner(tris, edge)
    if partner is None:
        return None
    u, v = edge
    p, q = partner
    pts = ps.points
    su = orientation(pts[p], pts[q], pts[u])
    sv = orientation(pts[p], pts[q], pts[v])
    if su is Orientation.COLLINEAR or sv is Orientation.COLLINEAR or su is sv:
        return None
    old1 = tuple(sorted((u, v, p)))
    old2 = tuple(sorted((u, v, q)))
    new1 = tuple(sorted((u, p, q)))
    new2 = tuple(sorted((v, p, q)))
    return (tris - {old1, old2}) | {new1, new2}


def _edges_of(tris: frozenset[Triple]) -> set[EdgeKey]:
    out = set()
    for i, j, k in tris:
        out.add((i, j))
        out.add((i, k))
        out.add((j, k))
    return out


def _interior_edges(tris: frozenset[Triple]) -> list[EdgeKey]:
    count: dict[EdgeKey, int] = {}
    for i, j, k in tris:
        for e in ((i, j), (i, k), (j, k)):
            count[e] = count.get(e, 0) + 1
    return [e for e, c in count.items() if c == 2]


def scan_triangulation(ps: PointSet) -> Triangulation:
    """Some valid triangulation: insert points in lexicographic order,
    connecting each new point to the hull edges it sees."""
    validate_general_position(ps)
    pts = ps.points
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    a, b, c = order[0], order[1], order[2]
    tris = {tuple(sorted((a, b, c)))}
    if orientation(pts[a], pts[b], pts[c]) is Orientation.CCW:
        hull = [a, b, c]
    else:
        hull = [a, c, b]
    for idx in order[3:]:
        p = pts[idx]
        m = len(hull)
        visible = [
            orientation(pts[hull[i]], pts[hull[(i + 1) % m]], p) is Orientation.CW
            for i in range(m)
        ]
        for i in range(m):
            if visible[i]:
                tris.add(tuple(sorted((hull[i], hull[(i + 1) % m], idx))))
        # replace the visible chain by the new point
        start = next(i for i in range(m) if visible[i] and not visible[i - 1])
        new_hull = [hull[start]]
        i = start
        while visible[i]:
            i = (i + 1) % m
        new_hull.append(idx)
        while i != start:
            new_hull.append(hull[i])
            i = (i + 1) % m
        hull = new_hull
    return Triangulation(ps, tris)


def enumerate_triangulations(
    ps: PointSet, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[Triangulation]:
    """Every triangulation of ps exactly once, in lexicographic order of the
    canonical triangle set.

    Walks the flip graph (connected for full triangulations of a point set)
    from a seed triangulation, then yields in sorted order.
    """
    if len(ps) > cap:
        raise EnumerationTooLarge(
            f"{len(ps)} points exceeds enumeration cap {cap}"
        )
    validate_general_position(ps)
    seed = frozenset(scan_triangulation(ps).triangles)
    seen = {seed}
    stack = [seed]
    while stack:
        cur = stack.pop()
        for edge in _interior_edges(cur):
            nxt = flip(ps, cur, edge)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    for tris in sorted(tuple(sorted(s)) for s in seen):
        yield Triangulation(ps, tris)


def count_triangulations(ps: PointSet, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    return sum(1 for _ in enumerate_triangulations(ps, cap))
