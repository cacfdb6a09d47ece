"""Completeness theory: pseudo-completeness, completeness via regular
supporting slabs, constant width, the diameter-width ratio and its closed-form
euclidean bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import geom
from .errors import DomainError, InconsistentCharacterization
from .gauges import (GaugeBody, _require_symmetric, breadth, circumradius,
                     diameter, inradius, minkowski_asymmetry, width)
from .geom import ConvexPolygon

SQRT3 = math.sqrt(3.0)

# default tolerances: exact polygon inputs vs arc-approximated families
TOL_EXACT = 1e-6
TOL_ARC = 1e-3


@dataclass(frozen=True)
class CompletenessReport:
    """Radii of K w.r.t. the gauge plus the three completeness predicates."""

    r: float
    R: float
    D: float
    w: float
    s: float
    pseudo_complete: bool
    complete: bool
    constant_width: bool
    dw_ratio: float


def regular_slab_normals(K: ConvexPolygon) -> np.ndarray:
    """Directions of regular supporting slabs: for a polygon, a slab is
    regular iff one of its two lines carries a whole edge, so the directions
    are the outer edge normals of K and of -K, deduplicated up to sign."""
    rays = np.vstack((K.normals, -K.normals))
    flip = (rays[:, 0] < -1e-12) | ((np.abs(rays[:, 0]) <= 1e-12) & (rays[:, 1] < 0))
    rays[flip] *= -1.0
    ang = np.arctan2(rays[:, 1], rays[:, 0])
    order = np.argsort(ang, kind="stable")
    rays, ang = rays[order], ang[order]
    keep = np.concatenate(([True], np.diff(ang) > 1e-9))
    return rays[keep]


def is_pseudo_complete(K: ConvexPolygon, C: GaugeBody,
                       tol: float = TOL_EXACT) -> tuple[bool, CompletenessReport]:
    """r + R = D test with the full report.

    When the defining equality holds, the equivalent chain
    (s+1) r = r + R = (s+1)/s R = D is cross-checked; a violation beyond tol
    raises InconsistentCharacterization (numerical falsification).
    """
    report = completeness_report(K, C, tol)
    return report.pseudo_complete, report


def is_complete(K: ConvexPolygon, C: GaugeBody, tol: float = TOL_EXACT) -> bool:
    """Complete iff every regular-slab breadth attains the diameter."""
    _require_symmetric(C)
    D, _ = diameter(K, C)
    return all(breadth(K, C, u) >= D - tol * max(1.0, D)
               for u in regular_slab_normals(K))


def is_constant_width(K: ConvexPolygon, C: GaugeBody, tol: float = TOL_EXACT) -> bool:
    """K - K = D * C within tol*D in Hausdorff distance."""
    _require_symmetric(C)
    D, _ = diameter(K, C)
    diff = geom.minkowski_sum(K, geom.negate(K))
    return geom.hausdorff_distance(diff, geom.scale(C.body, D)) <= tol * D


def dw_ratio(K: ConvexPolygon, C: GaugeBody) -> float:
    _require_symmetric(C)
    return diameter(K, C)[0] / width(K, C)[0]


def completeness_report(K: ConvexPolygon, C: GaugeBody,
                        tol: float = TOL_EXACT) -> CompletenessReport:
    _require_symmetric(C)
    r = inradius(K, C).scale
    R = circumradius(K, C).scale
    D, _ = diameter(K, C)
    w, _ = width(K, C)
    s = minkowski_asymmetry(K).s
    pseudo = abs(r + R - D) <= tol * D
    if pseudo:
        for name, value in (("(s+1)r", (s + 1.0) * r), ("(s+1)/s R", (s + 1.0) / s * R)):
            if abs(value - D) > tol * D:
                raise InconsistentCharacterization(
                    f"pseudo-complete but {name} = {value} != D = {D} beyond {tol}")
    return CompletenessReport(
        r=r, R=R, D=D, w=w, s=s,
        pseudo_complete=pseudo,
        complete=is_complete(K, C, tol),
        constant_width=is_constant_width(K, C, tol),
        dw_ratio=D / w,
    )


def euclidean_dw_bound(D: float) -> float:
    """Closed-form diameter-width bound for pseudo-complete euclidean bodies
    with circumradius 1 and diameter D, valid on sqrt(3) <= D < 2.

    1 / (sqrt(4 - D^2) * cos(2 arccos(D/2) - arcsin(D - 1))); the denominator
    vanishes as D -> 2, hence the domain cap at 2 - 1e-9.
    """
    if not SQRT3 - 1e-12 <= D <= 2.0 - 1e-9:
        raise DomainError(f"euclidean bound needs sqrt(3) <= D <= 2 - 1e-9, got {D}")
    denom = math.sqrt(4.0 - D * D) * math.cos(2.0 * math.acos(D / 2.0)
                                              - math.asin(D - 1.0))
    return 1.0 / denom


def tilde_s() -> float:
    """Asymmetry value maximizing min{(s+1)/2, s^2/(s^2-1)} on [1, 2].

    Evaluates the cube-root closed form and cross-checks it against the root
    of (s+1)/2 = s^2/(s^2-1) obtained by bisection (agreement 1e-10)."""
    closed = (1.0 + (19.0 - 3.0 * math.sqrt(33.0)) ** (1.0 / 3.0)
              + (19.0 + 3.0 * math.sqrt(33.0)) ** (1.0 / 3.0)) / 3.0
    lo, hi = 1.62, 2.0
    f = lambda s: (s + 1.0) / 2.0 - s * s / (s * s - 1.0)
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    assert abs(closed - root) <= 1e-10
    return closed
