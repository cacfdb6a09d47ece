"""Symmetrization bodies and ratios for Minkowski-centered polygons.

For K with Minkowski center 0 the three classical symmetrizations are the
intersection K * (-K), the central symmetral (K - K)/2 and the convex hull of
K and -K.  alpha and tau measure how tightly a rescaled outer symmetrization
covers the inner one; both are computed as vertex-gauge maxima (symmetry pins
the translation to 0), with the generic circumradius LP kept as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import geom
from .errors import UnclassifiedPoint
from .gauges import GaugeBody, make_gauge
from .geom import ConvexPolygon, CrossingSet


@dataclass(frozen=True)
class SymmetrizationTriple:
    """inner = K * (-K), central = (K - K)/2, outer = conv(K u (-K));
    all 0-symmetric with inner <= central <= outer."""

    inner: ConvexPolygon
    central: ConvexPolygon
    outer: ConvexPolygon


def symmetrize(K: ConvexPolygon) -> SymmetrizationTriple:
    negK = geom.negate(K)
    return SymmetrizationTriple(
        inner=geom.intersect(K, negK),
        central=geom.scale(geom.minkowski_sum(K, negK), 0.5),
        outer=geom.hull_union(K, negK),
    )


def _covering_ratio(inner: ConvexPolygon, outer: ConvexPolygon) -> float:
    """Least factor covering a 0-symmetric inner body by a scaled 0-symmetric
    outer body: the maximal outer-gauge over the inner vertices."""
    return float(np.max(geom.gauge_values(outer, inner.vertices)))


def alpha(K: ConvexPolygon) -> float:
    """Covering ratio of K * (-K) inside conv(K u (-K))."""
    t = symmetrize(K)
    return _covering_ratio(t.inner, t.outer)


def tau(K: ConvexPolygon) -> float:
    """Covering ratio of K * (-K) inside (K - K)/2."""
    t = symmetrize(K)
    return _covering_ratio(t.inner, t.central)


def alpha_tau(K: ConvexPolygon) -> tuple[float, float]:
    t = symmetrize(K)
    return _covering_ratio(t.inner, t.outer), _covering_ratio(t.inner, t.central)


def crossing_count(K: ConvexPolygon) -> CrossingSet:
    """bd(K) * bd(-K) as isolated points and overlap segments."""
    return geom.boundary_intersections(K, geom.negate(K))


def antipodal_parallel_support(K: ConvexPolygon, tol: float = 1e-7) -> bool:
    """True iff some p, -p in bd(K) admit parallel supporting lines, i.e. the
    normal cones of K and of -K share a direction at a common boundary point.

    Candidates are the crossing points (and segment endpoints) of
    bd(K) * bd(-K); at any such p the cones are compared as angle arcs.
    """
    negK = geom.negate(K)
    hits = crossing_count(K)
    cands = list(hits.points)
    for a, b in hits.segments:
        cands.extend([np.asarray(a), np.asarray(b), 0.5 * (np.asarray(a) + np.asarray(b))])
    for p in cands:
        arcs_k = _normal_arc(K, p, tol)
        arcs_n = _normal_arc(negK, p, tol)
        if arcs_k is None or arcs_n is None:
            continue
        if _arcs_overlap(arcs_k, arcs_n, tol):
            return True
    return False


def _normal_arc(P: ConvexPolygon, p: np.ndarray, tol: float):
    """Angular interval [lo, hi] of outer normals supporting P at p, or None
    if p is not on bd(P) within tol."""
    res = P.normals @ p - P.offsets
    onb = np.nonzero(np.abs(res) <= tol)[0]
    if len(onb) == 0 or np.max(res) > tol:
        return None
    angs = np.arctan2(P.normals[onb, 1], P.normals[onb, 0])
    if len(angs) == 1:
        return float(angs[0]), float(angs[0])
    lo, hi = float(np.min(angs)), float(np.max(angs))
    if hi - lo > np.pi:  # cone straddles the -pi/pi cut
        lo, hi = hi, lo + 2 * np.pi
    return lo, hi


def _arcs_overlap(a, b, tol: float) -> bool:
    for shift in (-2 * np.pi, 0.0, 2 * np.pi):
        if a[0] - tol <= b[1] + shift and b[0] + shift - tol <= a[1]:
            return True
    return False


def classify_touching_points(K: ConvexPolygon, tol: float = 1e-8) -> list:
    """Tag every touching point of K * (-K) and alpha(K) conv(K u (-K)).

    Case "i": the point lies on bd(K) * bd(-K).
    Case "ii": p/alpha leaves the hull gap, i.e. p/alpha lies in K u (-K).
    Ambiguous points (within tol of both) prefer case "i".  A point passing
    neither test raises UnclassifiedPoint, which must fail the test suite.
    """
    t = symmetrize(K)
    a = _covering_ratio(t.inner, t.outer)
    negK = geom.negate(K)

    cands = [v.copy() for v in
             t.inner.vertices[np.abs(geom.gauge_values(t.outer, t.inner.vertices) - a) <= tol]]
    hits = geom.boundary_intersections(t.inner, geom.scale(t.outer, a))
    cands.extend(np.asarray(x) for x in hits.points)
    for s0, s1 in hits.segments:
        cands.extend([np.asarray(s0), np.asarray(s1)])
    uniq: list[np.ndarray] = []
    for x in sorted(cands, key=lambda p: (np.arctan2(p[1], p[0]), p[0], p[1])):
        if not any(np.hypot(*(x - y)) <= geom.EPS_MERGE for y in uniq):
            uniq.append(x)

    out = []
    for p in uniq:
        on_k = abs(geom.gauge_value(K, p) - 1.0) <= tol
        on_nk = abs(geom.gauge_value(negK, p) - 1.0) <= tol
        if on_k and on_nk:
            out.append((p, "i"))
            continue
        q = p / a
        if min(geom.gauge_value(K, q), geom.gauge_value(negK, q)) <= 1.0 + tol:
            out.append((p, "ii"))
            continue
        raise UnclassifiedPoint(f"touching point {p} fits neither case")
    return out
