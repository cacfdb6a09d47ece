"""Planar convex-polygon kernel.

Polygons are immutable: an (n, 2) float64 vertex array in counter-clockwise
order, starting at the lexicographically smallest vertex (min x, then min y),
together with derived edge data (outer unit normals and offsets).  Edge i runs
from vertex i to vertex i+1 (mod n).  All operations are pure functions.

Tolerances (coordinates are O(1) throughout the repo):
  EPS_NUM       predicate tolerance,
  EPS_COLLINEAR area-based collinearity threshold used during construction,
  EPS_MERGE     crossing-point deduplication radius.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateInput, EmptyIntersection, ParseError, SingularMatrix

EPS_NUM = 1e-9
EPS_COLLINEAR = 1e-12
EPS_MERGE = 1e-7
EPS_CERT = 1e-7


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (n, 2) array of planar points")
    return pts


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class ConvexPolygon:
    """Full-dimensional compact convex polygon.

    vertices : (n, 2) CCW, lexicographic start, read-only
    normals  : (n, 2) outer unit normal of edge i = [v_i, v_{i+1}]
    offsets  : (n,)   normals[i] . x = offsets[i] on edge i
    """

    vertices: np.ndarray
    normals: np.ndarray = field(repr=False)
    offsets: np.ndarray = field(repr=False)

    def __post_init__(self):
        for arr in (self.vertices, self.normals, self.offsets):
            arr.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.vertices)

    def area(self) -> float:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]))

    def centroid(self) -> np.ndarray:
        v = self.vertices
        w = np.roll(v, -1, axis=0)
        c = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
        a = 0.5 * np.sum(c)
        return (v + w).T @ c / (6.0 * a)

    def contains_point(self, x, tol: float = EPS_NUM) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(self.normals @ x - self.offsets <= tol))


def _edges_of(vertices: np.ndarray):
    d = np.roll(vertices, -1, axis=0) - vertices
    lengths = np.hypot(d[:, 0], d[:, 1])
    normals = np.column_stack((d[:, 1], -d[:, 0])) / lengths[:, None]
    offsets = np.einsum("ij,ij->i", normals, vertices)
    return normals, offsets


def _from_ccw(vertices: np.ndarray) -> ConvexPolygon:
    """Wrap vertices already known to be strictly convex and CCW.

    Only rotates the start index to the lexicographic minimum; coordinates are
    kept exact (used by the vertex-wise transforms).
    """
    start = int(np.lexsort((vertices[:, 1], vertices[:, 0]))[0])
    vertices = np.roll(vertices, -start, axis=0).copy()
    normals, offsets = _edges_of(vertices)
    return ConvexPolygon(vertices, normals, offsets)


def _dedupe_collinear(ccw: np.ndarray) -> np.ndarray:
    """Drop duplicate and collinear vertices from a convex CCW loop.

    Stack-based sweep: a vertex is judged against the neighbors that survive,
    so clusters of near-duplicates collapse to one point instead of vanishing.
    """
    out = [np.asarray(p, dtype=float) for p in ccw]
    changed = True
    while changed and len(out) >= 3:
        changed = False
        res: list[np.ndarray] = []
        for q in out:
            if res and np.hypot(*(q - res[-1])) <= 1e-14:
                changed = True
                continue
            while len(res) >= 2 and _cross(res[-2], res[-1], q) <= EPS_COLLINEAR:
                res.pop()
                changed = True
            res.append(q)
        while len(res) >= 3:  # close the loop across the seam
            if np.hypot(*(res[0] - res[-1])) <= 1e-14:
                res.pop()
            elif _cross(res[-2], res[-1], res[0]) <= EPS_COLLINEAR:
                res.pop()
            elif _cross(res[-1], res[0], res[1]) <= EPS_COLLINEAR:
                res.pop(0)
            else:
                break
            changed = True
        out = res
    return np.array(out)


def make_polygon(points) -> ConvexPolygon:
    """Canonical convex polygon from arbitrary points.

    Convex hull, duplicates and collinear vertices removed, CCW orientation,
    lexicographically smallest starting vertex.  Raises DegenerateInput when
    the hull collapses to a point or segment.
    """
    pts = _as_points(points)
    if len(pts) < 3:
        raise DegenerateInput("need at least 3 points")
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]

    def half_hull(seq):
        # exact popping; the EPS_COLLINEAR cleanup runs on the finished hull,
        # where it cannot evict true corners in favor of perturbed edge points
        hull = []
        for p in seq:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0.0:
                hull.pop()
            hull.append(p)
        return hull

    lower = half_hull(pts)
    upper = half_hull(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("points are collinear within tolerance")
    verts = _dedupe_collinear(np.array(hull))
    if len(verts) < 3:
        raise DegenerateInput("points are collinear within tolerance")
    return _from_ccw(verts)


# ---------------------------------------------------------------------------
# support / gauge


@dataclass(frozen=True)
class Face:
    """Identifies where a support value is attained: a vertex or a whole edge."""

    kind: str  # "vertex" | "edge"
    index: int


def support_value(P: ConvexPolygon, u) -> float:
    u = np.asarray(u, dtype=float)
    return float(np.max(P.vertices @ u))


def support(P: ConvexPolygon, u) -> tuple[float, Face]:
    """Support function h_P(u) = max_v u.v with the attaining face.

    Two consecutive maximizers within EPS_NUM identify an edge.
    """
    u = np.asarray(u, dtype=float)
    if np.hypot(u[0], u[1]) <= 0.0:
        raise ValueError("direction must be nonzero")
    dots = P.vertices @ u
    i = int(np.argmax(dots))
    value = float(dots[i])
    n = P.n
    if dots[(i + 1) % n] >= value - EPS_NUM:
        return value, Face("edge", i)
    if dots[(i - 1) % n] >= value - EPS_NUM:
        return value, Face("edge", (i - 1) % n)
    return value, Face("vertex", i)


def gauge_value(P, x) -> float:
    """Gauge of x w.r.t. a body containing 0 in its interior.

    min rho >= 0 with x in rho*P, i.e. max over edges of (a.x)/b.  Accepts a
    GaugeBody or a bare ConvexPolygon (gauges.py enforces 0-interior on
    GaugeBody construction).
    """
    body = getattr(P, "body", P)
    x = np.asarray(x, dtype=float)
    vals = (body.normals @ x) / body.offsets
    return max(float(np.max(vals)), 0.0)


def gauge_values(P, xs: np.ndarray) -> np.ndarray:
    """Vectorized gauge over an (m, 2) batch of points."""
    body = getattr(P, "body", P)
    vals = xs @ body.normals.T / body.offsets
    return np.maximum(vals.max(axis=1), 0.0)


# ---------------------------------------------------------------------------
# set operations


def _clip_halfplane(verts: list[np.ndarray], a, b: float) -> list[np.ndarray]:
    """Sutherland-Hodgman clip of a CCW loop by {x : a.x <= b}."""
    if not verts:
        return []
    a = np.asarray(a, dtype=float)
    out = []
    m = len(verts)
    d = [float(a @ v) - b for v in verts]
    for i in range(m):
        j = (i + 1) % m
        di, dj = d[i], d[j]
        if di <= 1e-12:
            out.append(verts[i])
        if (di > 1e-12) != (dj > 1e-12) and abs(di - dj) > 0.0:
            t = di / (di - dj)
            out.append(verts[i] + t * (verts[j] - verts[i]))
    return out


def intersect(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Intersection polygon; raises EmptyIntersection when interiors miss."""
    verts = list(P.vertices)
    for a, b in zip(Q.normals, Q.offsets):
        verts = _clip_halfplane(verts, a, b)
        if not verts:
            raise EmptyIntersection("polygon interiors do not overlap")
    try:
        return make_polygon(np.array(verts))
    except DegenerateInput:
        raise EmptyIntersection("polygon interiors do not overlap") from None


def from_halfplanes(halfplanes: Iterable[tuple[Sequence[float], float]],
                    bound: float = 64.0) -> ConvexPolygon:
    """Intersection of halfplanes {a.x <= b}, clipped to [-bound, bound]^2."""
    box = [np.array(p, dtype=float) for p in
           [(-bound, -bound), (bound, -bound), (bound, bound), (-bound, bound)]]
    verts = box
    for a, b in halfplanes:
        verts = _clip_halfplane(verts, a, b)
        if not verts:
            raise EmptyIntersection("halfplane system has empty interior")
    return make_polygon(np.array(verts))


def hull_union(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Convex hull of the union of the two vertex sets."""
    return make_polygon(np.vstack((P.vertices, Q.vertices)))


def _bottom_start(verts: np.ndarray) -> np.ndarray:
    start = int(np.lexsort((verts[:, 0], verts[:, 1]))[0])
    return np.roll(verts, -start, axis=0)


def minkowski_sum(P: ConvexPolygon, Q: ConvexPolygon) -> ConvexPolygon:
    """Minkowski sum by the classic edge merge; at most |P|+|Q| vertices."""
    a = _bottom_start(P.vertices)
    b = _bottom_start(Q.vertices)
    ea = np.roll(a, -1, axis=0) - a
    eb = np.roll(b, -1, axis=0) - b
    n, m = len(a), len(b)
    i = j = 0
    out = []
    while i < n or j < m:
        out.append(a[i % n] + b[j % m])
        if i >= n:
            j += 1
        elif j >= m:
            i += 1
        else:
            c = ea[i][0] * eb[j][1] - ea[i][1] * eb[j][0]
            if c > 0.0:
                i += 1
            elif c < 0.0:
                j += 1
            else:
                i += 1
                j += 1
    verts = _dedupe_collinear(np.array(out))
    if len(verts) < 3:
        raise DegenerateInput("Minkowski sum degenerated")
    return _from_ccw(verts)


def negate(P: ConvexPolygon) -> ConvexPolygon:
    # det(-I) = +1 in the plane: point reflection keeps CCW orientation
    return _from_ccw(-P.vertices)


def scale(P: ConvexPolygon, rho: float) -> ConvexPolygon:
    if not rho > 0.0:
        raise ValueError("scale factor must be positive")
    return _from_ccw(rho * P.vertices)


def translate(P: ConvexPolygon, t) -> ConvexPolygon:
    t = np.asarray(t, dtype=float)
    return _from_ccw(P.vertices + t)


def linear_map(P: ConvexPolygon, M) -> ConvexPolygon:
    """Image under a nonsingular 2x2 map; reverses order when det < 0."""
    M = np.asarray(M, dtype=float)
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det) < 1e-12:
        raise SingularMatrix("linear map is singular within tolerance")
    verts = P.vertices @ M.T
    if det < 0.0:
        verts = verts[::-1]
    return _from_ccw(verts)


def contains(P: ConvexPolygon, Q: ConvexPolygon, tol: float = EPS_NUM) -> bool:
    """True iff every vertex of Q satisfies every edge inequality of P."""
    slack = Q.vertices @ P.normals.T - P.offsets
    return bool(np.max(slack) <= tol)


# ---------------------------------------------------------------------------
# boundary intersections


@dataclass(frozen=True)
class CrossingSet:
    """Isolated points and maximal shared segments of two polygon boundaries."""

    points: list
    segments: list  # [(endpoint, endpoint), ...]

    @property
    def component_count(self) -> int:
        """Isolated points plus both endpoints of every overlap segment."""
        return len(self.points) + 2 * len(self.segments)


def _segment_hit(p1, p2, q1, q2):
    """Intersection of two segments: None, ('point', x) or ('segment', (a, b))."""
    d1 = p2 - p1
    d2 = q2 - q1
    l1 = np.hypot(*d1)
    l2 = np.hypot(*d2)
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    r = q1 - p1
    if abs(denom) > 1e-12 * l1 * l2:
        t = (r[0] * d2[1] - r[1] * d2[0]) / denom
        u = (r[0] * d1[1] - r[1] * d1[0]) / denom
        et, eu = EPS_NUM / l1, EPS_NUM / l2
        if -et <= t <= 1.0 + et and -eu <= u <= 1.0 + eu:
            return ("point", p1 + np.clip(t, 0.0, 1.0) * d1)
        return None
    # parallel: does q's line coincide with p's?
    if abs(r[0] * d1[1] - r[1] * d1[0]) > EPS_NUM * l1:
        return None
    axis = d1 / l1
    s1, s2 = float((q1 - p1) @ axis), float((q2 - p1) @ axis)
    lo = max(0.0, min(s1, s2))
    hi = min(l1, max(s1, s2))
    if hi - lo > EPS_MERGE:
        return ("segment", (p1 + lo * axis, p1 + hi * axis))
    if hi - lo >= -EPS_NUM:
        return ("point", p1 + 0.5 * (lo + hi) * axis)
    return None


def _point_segment_dist(x, a, b) -> float:
    d = b - a
    t = np.clip(((x - a) @ d) / (d @ d), 0.0, 1.0)
    return float(np.hypot(*(x - (a + t * d))))


def _merge_segments(segs):
    """Union collinear overlapping/adjacent segments into maximal ones."""
    segs = [tuple(s) for s in segs]
    changed = True
    while changed:
        changed = False
        out = []
        while segs:
            a1, b1 = segs.pop()
            d1 = b1 - a1
            l1 = np.hypot(*d1)
            merged = False
            for k, (a2, b2) in enumerate(out):
                d2 = b2 - a2
                cross_dir = d1[0] * d2[1] - d1[1] * d2[0]
                if abs(cross_dir) > 1e-9 * l1 * np.hypot(*d2):
                    continue
                off = a2 - a1
                if abs(off[0] * d1[1] - off[1] * d1[0]) > EPS_NUM * l1:
                    continue
                axis = d1 / l1
                ss = sorted([0.0, l1, float((a2 - a1) @ axis), float((b2 - a1) @ axis)])
                span = [float((a2 - a1) @ axis), float((b2 - a1) @ axis)]
                lo2, hi2 = min(span), max(span)
                if lo2 > l1 + EPS_MERGE or hi2 < -EPS_MERGE:
                    continue
                out[k] = (a1 + ss[0] * axis, a1 + ss[3] * axis)
                merged = True
                changed = True
                break
            if not merged:
                out.append((a1, b1))
        segs = out
    return segs


def boundary_intersections(P: ConvexPolygon, Q: ConvexPolygon) -> CrossingSet:
    """All isolated crossing/touching points and maximal shared segments of
    bd(P) and bd(Q), points merged within EPS_MERGE and sorted by polar angle.
    """
    pts = []
    segs = []
    pv, qv = P.vertices, Q.vertices
    for i in range(P.n):
        p1, p2 = pv[i], pv[(i + 1) % P.n]
        for j in range(Q.n):
            hit = _segment_hit(p1, p2, qv[j], qv[(j + 1) % Q.n])
            if hit is None:
                continue
            if hit[0] == "point":
                pts.append(hit[1])
            else:
                segs.append(hit[1])
    segs = _merge_segments(segs)
    kept = []
    for x in pts:
        if any(_point_segment_dist(x, a, b) <= EPS_MERGE for a, b in segs):
            continue
        if any(np.hypot(*(x - y)) <= EPS_MERGE for y in kept):
            continue
        kept.append(x)
    kept.sort(key=lambda x: (np.arctan2(x[1], x[0]), x[0], x[1]))
    segs.sort(key=lambda s: np.arctan2(s[0][1] + s[1][1], s[0][0] + s[1][0]))
    return CrossingSet(points=kept, segments=[(a, b) for a, b in segs])


# ---------------------------------------------------------------------------
# metrics


def _point_polygon_dists(xs: np.ndarray, P: ConvexPolygon) -> np.ndarray:
    """Euclidean distance of each point to P (0 inside), vectorized."""
    inside = np.max(xs @ P.normals.T - P.offsets, axis=1) <= 0.0
    a = P.vertices
    b = np.roll(a, -1, axis=0)
    d = b - a
    dd = np.einsum("ij,ij->i", d, d)
    res = np.empty(len(xs))
    for lo in range(0, len(xs), 512):
        chunk = xs[lo:lo + 512]
        t = np.clip(((chunk[:, None, :] - a) * d).sum(-1) / dd, 0.0, 1.0)
        proj = a + t[:, :, None] * d
        dist = np.linalg.norm(chunk[:, None, :] - proj, axis=-1).min(axis=1)
        res[lo:lo + 512] = dist
    res[inside] = 0.0
    return res


def hausdorff_distance(P: ConvexPolygon, Q: ConvexPolygon) -> float:
    """Hausdorff distance between convex polygons (max vertex-to-body gap)."""
    return float(max(_point_polygon_dists(P.vertices, Q).max(),
                     _point_polygon_dists(Q.vertices, P).max()))


# ---------------------------------------------------------------------------
# polygon file format (repo-wide): {"vertices": [[x, y], ...]}, CCW


def read_polygon(path) -> ConvexPolygon:
    """Read the shared JSON polygon format, re-canonicalizing the vertices."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        verts = doc["vertices"]
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"cannot read polygon file {path!r}: {exc}") from exc
    try:
        return make_polygon(verts)
    except (ValueError, DegenerateInput) as exc:
        raise ParseError(f"invalid polygon in {path!r}: {exc}") from exc


def write_polygon(P: ConvexPolygon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"vertices": P.vertices.tolist()}, fh)
        fh.write("\n")
