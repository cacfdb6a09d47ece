"""Gauge-based functionals: breadth, width, diameter, circumradius, inradius,
Minkowski asymmetry, asymmetry points and well-spread triples.

The three radius-type quantities are 3-variable linear programs over the edge
constraints of the relevant polygon; see lp.py for the solver.  Certificates
follow the optimal-containment touching condition: contact points on the
boundary of the outer body whose outer normals capture 0 in their convex hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import geom
from .errors import AsymmetricGauge, LPFailure, NoTriple
from .geom import ConvexPolygon, EPS_CERT, EPS_MERGE, EPS_NUM
from .lp import solve_lp_lex


@dataclass(frozen=True)
class GaugeBody:
    """A convex polygon with the origin strictly interior, used as unit ball."""

    body: ConvexPolygon
    symmetric: bool

    @property
    def normals(self):
        return self.body.normals

    @property
    def offsets(self):
        return self.body.offsets

    @property
    def vertices(self):
        return self.body.vertices


def is_origin_symmetric(P: ConvexPolygon, tol: float = EPS_NUM) -> bool:
    """-P and P coincide as canonical vertex lists within tol."""
    neg = geom.negate(P)
    return neg.n == P.n and bool(np.max(np.abs(neg.vertices - P.vertices)) <= tol)


def make_gauge(P: ConvexPolygon, symmetric: bool | None = None) -> GaugeBody:
    """Wrap a polygon as a gauge body, checking the origin is interior.

    symmetric=None auto-detects 0-symmetry from the canonical vertex list.
    """
    if np.min(P.offsets) <= 1e-12:
        raise ValueError("gauge body must contain the origin in its interior")
    if symmetric is None:
        symmetric = is_origin_symmetric(P)
    elif symmetric and not is_origin_symmetric(P):
        raise ValueError("symmetric flag set but -P != P within tolerance")
    return GaugeBody(body=P, symmetric=symmetric)


@dataclass(frozen=True)
class ContainmentResult:
    """Optimal homothety K subset t + scale*C with its touching certificate.

    touching: 2-3 pairs (point on the outer boundary, outer unit normal) with
    0 in the convex hull of the normals within EPS_CERT.
    """

    scale: float
    translation: np.ndarray
    touching: list


@dataclass(frozen=True)
class AsymmetryResult:
    """Minkowski asymmetry s, a Minkowski center, and the boundary contacts of
    K - c with -(K - c)/s."""

    s: float
    center: np.ndarray
    asym_points: list


# ---------------------------------------------------------------------------
# breadth / width / diameter


def _require_symmetric(C: GaugeBody):
    if not C.symmetric:
        raise AsymmetricGauge("operation requires a symmetric gauge")


def breadth(K: ConvexPolygon, C: GaugeBody, u) -> float:
    """(h_K(u) + h_K(-u)) / h_C(u); the distance of the two supporting lines
    of K with normal u measured in the gauge of C."""
    _require_symmetric(C)
    u = np.asarray(u, dtype=float)
    dots = K.vertices @ u
    return float((dots.max() + (-dots).max()) / np.max(C.vertices @ u))


def _breadths(K: ConvexPolygon, C: GaugeBody, rays: np.ndarray) -> np.ndarray:
    dk = rays @ K.vertices.T
    dc = rays @ C.vertices.T
    return (dk.max(axis=1) - dk.min(axis=1)) / dc.max(axis=1)


def _merged_rays(K: ConvexPolygon, C: GaugeBody) -> np.ndarray:
    """Edge-normal rays of (K-K)/2 and of C, deduplicated and angle-sorted.

    The normal fan of the central symmetral is the union of the fans of K and
    -K, so no Minkowski sum is needed.  On each cone of the common fan both
    support functions are linear, hence the breadth ratio is extremal on rays.
    """
    rays = np.vstack((K.normals, -K.normals, C.normals))
    ang = np.arctan2(rays[:, 1], rays[:, 0])
    order = np.argsort(ang, kind="stable")
    rays, ang = rays[order], ang[order]
    keep = np.concatenate(([True], np.diff(ang) > 1e-12))
    return rays[keep]


def width(K: ConvexPolygon, C: GaugeBody) -> tuple[float, np.ndarray]:
    """Minimal breadth over the merged edge-normal rays, with its direction."""
    _require_symmetric(C)
    rays = _merged_rays(K, C)
    vals = _breadths(K, C, rays)
    i = int(np.argmin(vals))
    return float(vals[i]), rays[i]


def diameter(K: ConvexPolygon, C: GaugeBody) -> tuple[float, tuple]:
    """Maximal breadth, equal to max_{x,y in K} ||x-y||_C over vertex pairs.

    Since gauge_C is itself a max over the edge normals of C, the vertex-pair
    maximum collapses to the maximal breadth over C's normals; that identity
    is exercised against the naive pairwise oracle in the tests.
    """
    _require_symmetric(C)
    vals = _breadths(K, C, C.normals)
    i = int(np.argmax(vals))
    u = C.normals[i]
    dots = K.vertices @ u
    x = K.vertices[int(np.argmax(dots))]
    y = K.vertices[int(np.argmin(dots))]
    return float(vals[i]), (x.copy(), y.copy())


# ---------------------------------------------------------------------------
# containment LPs


def _support_all(P: ConvexPolygon, dirs: np.ndarray) -> np.ndarray:
    out = np.empty(len(dirs))
    step = 1024
    for lo in range(0, len(dirs), step):
        out[lo:lo + step] = (dirs[lo:lo + step] @ P.vertices.T).max(axis=1)
    return out


def _hull_distance(points: list[np.ndarray]) -> float:
    """Distance from the origin to the convex hull of up to 3 points."""
    if len(points) == 1:
        return float(np.hypot(*points[0]))
    if len(points) == 2:
        return geom._point_segment_dist(np.zeros(2), points[0], points[1])
    a, b, c = points
    s1 = geom._cross(a, b, np.zeros(2))
    s2 = geom._cross(b, c, np.zeros(2))
    s3 = geom._cross(c, a, np.zeros(2))
    if (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0):
        return 0.0
    z = np.zeros(2)
    return min(geom._point_segment_dist(z, a, b),
               geom._point_segment_dist(z, b, c),
               geom._point_segment_dist(z, c, a))


def _select_certificate(normals: np.ndarray, points: np.ndarray):
    """Smallest subset (pair, then triple) of touching normals hulling 0."""
    order = np.argsort(np.arctan2(normals[:, 1], normals[:, 0]), kind="stable")
    idx = list(order)
    for pair in combinations(idx, 2):
        if _hull_distance([normals[i] for i in pair]) <= EPS_CERT:
            return [(points[i].copy(), normals[i].copy()) for i in pair]
    for tri in combinations(idx, 3):
        if _hull_distance([normals[i] for i in tri]) <= EPS_CERT:
            return [(points[i].copy(), normals[i].copy()) for i in tri]
    return None


def _certificate(resid: np.ndarray, normals: np.ndarray, point_of) -> list:
    """Certificate from the tightest constraints, escalating the activity
    threshold until the touching normals capture 0 (the LP dual guarantees
    such a subset exists among the truly active constraints)."""
    for thr in (1e-10, 1e-9, 1e-8, 1e-7, 1e-6):
        active = np.nonzero(resid <= thr)[0]
        if len(active) < 2:
            continue
        pts = np.array([point_of(j) for j in active])
        cert = _select_certificate(normals[active], pts)
        if cert is not None:
            return cert
    raise LPFailure("no 2- or 3-point optimality certificate among active constraints")


def circumradius(K: ConvexPolygon, C: GaugeBody | ConvexPolygon) -> ContainmentResult:
    """Least rho with K subset t + rho*C, plus the touching certificate.

    LP over (t1, t2, rho): for every edge (a_j, b_j) of C require
    a_j.(v - t) <= rho*b_j for all vertices v of K, i.e.
    h_K(a_j) <= a_j.t + rho*b_j.
    """
    Cb = getattr(C, "body", C)
    hk = _support_all(K, Cb.normals)
    A = np.column_stack((-Cb.normals, -Cb.offsets))
    try:
        _, x = solve_lp_lex(np.array([0.0, 0.0, 1.0]), A, -hk)
    except LPFailure as exc:
        raise LPFailure(f"circumradius LP failed: {exc}") from exc
    t, rho = x[:2], float(x[2])
    resid = (Cb.normals @ t + rho * Cb.offsets - hk) / max(1.0, rho)
    argmax = np.argmax(Cb.normals @ K.vertices.T, axis=1)
    cert = _certificate(resid, Cb.normals, lambda j: K.vertices[argmax[j]])
    return ContainmentResult(scale=rho, translation=t, touching=cert)


def inradius(K: ConvexPolygon, C: GaugeBody | ConvexPolygon) -> ContainmentResult:
    """Largest rho with c + rho*C subset K; translation is the incenter
    (lexicographically smallest when the incenter set is not a point)."""
    Cb = getattr(C, "body", C)
    hc = _support_all(Cb, K.normals)
    A = np.column_stack((K.normals, hc))
    try:
        _, x = solve_lp_lex(np.array([0.0, 0.0, -1.0]), A, K.offsets)
    except LPFailure as exc:
        raise LPFailure(f"inradius LP failed: {exc}") from exc
    c, rho = x[:2], float(x[2])
    resid = (K.offsets - K.normals @ c - rho * hc) / max(1.0, rho)
    argmax = np.argmax(K.normals @ Cb.vertices.T, axis=1)
    cert = _certificate(resid, K.normals,
                        lambda j: c + rho * Cb.vertices[argmax[j]])
    return ContainmentResult(scale=rho, translation=c, touching=cert)


# ---------------------------------------------------------------------------
# Minkowski asymmetry


def _vertex_contacts(K0: ConvexPolygon, s: float, tol: float = 1e-6) -> list:
    # p in bd(-K0/s) iff s * gauge_{-K0}(p) = 1
    negK = geom.negate(K0)
    vals = s * geom.gauge_values(negK, K0.vertices)
    return [K0.vertices[i].copy() for i in np.nonzero(np.abs(vals - 1.0) <= tol)[0]]


def asymmetry_points(K0: ConvexPolygon, s: float) -> list:
    """Contacts of bd(K0) with bd(-(K0)/s) for Minkowski-centered K0.

    Vertices of K0 whose gauge w.r.t. -K0 equals s (within 1e-6) plus
    edge-interior contacts from the boundary intersection; for very large
    polygons (arc approximations) only the vertex route is used.
    """
    pts = _vertex_contacts(K0, s)
    if K0.n <= 256:
        Q = geom.scale(geom.negate(K0), 1.0 / s)
        hits = geom.boundary_intersections(K0, Q)
        for x in hits.points:
            pts.append(np.asarray(x))
        for a, b in hits.segments:
            pts.append(np.asarray(a))
            pts.append(np.asarray(b))
    kept: list[np.ndarray] = []
    for x in sorted(pts, key=lambda p: (np.arctan2(p[1], p[0]), p[0], p[1])):
        if not any(np.hypot(*(x - y)) <= EPS_MERGE for y in kept):
            kept.append(x)
    return kept


def minkowski_asymmetry(K: ConvexPolygon) -> AsymmetryResult:
    """Minkowski asymmetry s(K) = min{rho : K - c subset rho(c - K)}.

    LP over (d1, d2, rho) with d = (1 + rho)c: for every edge (a_j, b_j) of K
    require a_j.d - rho*b_j <= min_i a_j.v_i.
    """
    lower = -_support_all(K, -K.normals)  # min_i a_j . v_i
    A = np.column_stack((K.normals, -K.offsets))
    try:
        _, x = solve_lp_lex(np.array([0.0, 0.0, 1.0]), A, lower)
    except LPFailure as exc:
        raise LPFailure(f"asymmetry LP failed: {exc}") from exc
    rho = max(float(x[2]), 1.0)
    c = x[:2] / (1.0 + rho)
    K0 = geom.translate(K, -c)
    return AsymmetryResult(s=rho, center=c, asym_points=asymmetry_points(K0, rho))


def recentered(K: ConvexPolygon) -> tuple[float, ConvexPolygon]:
    """(s(K), K translated so that 0 is its Minkowski center)."""
    res = minkowski_asymmetry(K)
    return res.s, geom.translate(K, -res.center)


# ---------------------------------------------------------------------------
# well-spread triples


def _triangle_margin(tri: list[np.ndarray]) -> float:
    """Signed distance of 0 into the triangle (positive = strictly inside)."""
    a, b, c = tri
    if geom._cross(a, b, c) < 0.0:
        a, b, c = c, b, a
    m = np.inf
    for p, q in ((a, b), (b, c), (c, a)):
        d = q - p
        ln = np.hypot(*d)
        if ln <= 1e-15:
            return -np.inf
        m = min(m, (d[0] * (-p[1]) - d[1] * (-p[0])) / ln)
    return float(m)


def _normal_candidates(K: ConvexPolygon, p: np.ndarray) -> list[np.ndarray]:
    """Outer normals of all supporting halfspaces of K at p (cone extremes
    plus the cone midpoint for vertices, used by the certificate search)."""
    ks = [j for j in range(K.n)
          if abs(float(K.normals[j] @ p) - K.offsets[j]) <= 1e-7]
    cands = [K.normals[j].copy() for j in ks]
    if len(cands) == 2:
        mid = cands[0] + cands[1]
        ln = np.hypot(*mid)
        if ln > 1e-12:
            cands.append(mid / ln)
    return cands


def well_spread_triple(K: ConvexPolygon):
    """Three asymmetry points of a Minkowski-centered K with 0 strictly inside
    their hull and 0 in the hull of chosen outer normals.

    Returns (points, normals) as two 3-tuples; raises NoTriple when s(K) <= 1
    within tolerance or no certified triple exists.
    """
    res = minkowski_asymmetry(K)
    if res.s <= 1.0 + EPS_NUM:
        raise NoTriple(f"s(K) = {res.s} is 1 within tolerance")
    pts = asymmetry_points(K, res.s)
    if len(pts) < 3:
        raise NoTriple("fewer than 3 asymmetry points located")
    cand_normals = [_normal_candidates(K, p) for p in pts]
    for i, j, k in combinations(range(len(pts)), 3):
        tri = [pts[i], pts[j], pts[k]]
        if _triangle_margin(tri) <= -EPS_CERT:
            continue
        for ns in product(cand_normals[i], cand_normals[j], cand_normals[k]):
            if _hull_distance(list(ns)) <= EPS_CERT:
                return tuple(p.copy() for p in tri), tuple(n.copy() for n in ns)
    raise NoTriple("no certified well-spread triple found")
