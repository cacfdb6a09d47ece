"""Deterministic generators for every named body family.

Each generator returns its body already translated to a Minkowski center
whenever downstream functionals assume that; the recomputed asymmetry is
checked against the closed forms in the tests, not assumed here.
"""

from __future__ import annotations

import math

import numpy as np

from . import geom
from .errors import DomainError
from .gauges import GaugeBody, make_gauge, minkowski_asymmetry
from .geom import ConvexPolygon

PHI = (1.0 + math.sqrt(5.0)) / 2.0

_SQ3 = math.sqrt(3.0)
_P1 = np.array([0.0, 1.0])
_P2 = np.array([_SQ3 / 2.0, -0.5])
_P3 = np.array([-_SQ3 / 2.0, -0.5])

_DOM_EPS = 1e-12


def triangle() -> ConvexPolygon:
    """Regular Minkowski-centered triangle with euclidean circumradius 1."""
    return geom.make_polygon([_P1, _P2, _P3])


def golden_house() -> ConvexPolygon:
    """The five-gon conv{(+-1, 0), (+-1, -1), (0, phi)}; asymmetry phi and
    covering ratio 1, the extremal body of the ratio-1 regime."""
    return geom.make_polygon([(1, 0), (-1, 0), (1, -1), (-1, -1), (0, PHI)])


def k_t_asymmetry(t: float) -> float:
    """Closed-form asymmetry of the house family at roof height t."""
    return (t + math.sqrt(9 * t * t + 12 * t + 4)) / (2 * (t + 1))


def k_t(t: float) -> ConvexPolygon:
    """House conv{(+-1, 0), (+-1, -1), (0, t)}, 0 <= t < phi, translated to
    its Minkowski center (0, (t - s)/(s + 1)); keeps ratio 1 at every t."""
    if not 0.0 <= t < PHI - _DOM_EPS:
        raise DomainError(f"k_t needs 0 <= t < phi, got {t}")
    s = k_t_asymmetry(t)
    P = geom.make_polygon([(1, 0), (-1, 0), (1, -1), (-1, -1), (0, t)])
    return geom.translate(P, (0.0, -(t - s) / (s + 1.0)))


def regular_kgon(k: int) -> ConvexPolygon:
    """Regular k-gon, k odd >= 5, circumradius 1, centered at its centroid."""
    if k % 2 == 0 or k < 5:
        raise DomainError(f"regular_kgon needs odd k >= 5, got {k}")
    ang = np.pi / 2 + 2 * np.pi * np.arange(k) / k
    return geom.make_polygon(np.column_stack((np.cos(ang), np.sin(ang))))


def s_cap(s: float) -> ConvexPolygon:
    """Triangle cap S * (-sS): Minkowski centered with asymmetry s and
    covering ratio 2/(s+1), the lower boundary of the ratio region."""
    if not 1.0 - _DOM_EPS <= s <= 2.0 + _DOM_EPS:
        raise DomainError(f"s_cap needs s in [1, 2], got {s}")
    S = triangle()
    return geom.intersect(S, geom.scale(geom.negate(S), s))


def k_min(s: float) -> ConvexPolygon:
    """Smallest body of the equality sandwich at asymmetry s in (phi, 2]."""
    if not PHI < s <= 2.0 + _DOM_EPS:
        raise DomainError(f"k_min needs s in (phi, 2], got {s}")
    a = s / (s * s - 1.0)
    return geom.make_polygon([(a, 0), (-a, 0), (0, -s * s), (1, s), (-1, s)])


def k_max(s: float) -> ConvexPolygon:
    """Largest body of the equality sandwich; exposed on all of [1, 2] since
    the region sweep uses it below phi as well."""
    if not 1.0 - _DOM_EPS <= s <= 2.0 + _DOM_EPS:
        raise DomainError(f"k_max needs s in [1, 2], got {s}")
    y = s * (s * s - s - 1.0)
    return geom.make_polygon([(1, y), (-1, y), (0, -s * s), (1, s), (-1, s)])


def k_rho_domain(rho1: float, rho2: float) -> bool:
    lo = (rho1 * rho1 - rho1 + 1.0) / (rho1 + 1.0)
    return (1.0 - _DOM_EPS <= rho1 <= 2.0 + _DOM_EPS
            and lo - _DOM_EPS <= rho2 <= rho1 / 2.0 + _DOM_EPS)


def k_rho(rho1: float, rho2: float) -> ConvexPolygon:
    """conv(((-S) * rho1 S) u rho2 S), the family exhibiting case-(ii)
    touching points; Minkowski centeredness at 0 is verified by tests."""
    lo = (rho1 * rho1 - rho1 + 1.0) / (rho1 + 1.0)
    if not (1.0 - _DOM_EPS <= rho1 <= 2.0 + _DOM_EPS
            and lo - _DOM_EPS <= rho2 <= rho1 / 2.0 + _DOM_EPS):
        raise DomainError(f"(rho1, rho2) = ({rho1}, {rho2}) outside the domain")
    S = triangle()
    inner = geom.intersect(geom.negate(S), geom.scale(S, rho1))
    return geom.hull_union(inner, geom.scale(S, rho2))


def _rot(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def interpolate(s: float, t: float) -> ConvexPolygon:
    """Continuous deformation from the triangle cap to the sandwich shape.

    t = 0 is s_cap(s).  For t <= 1/2 the two edge lines supporting (s/2)p2
    and (s/2)p3 rotate (linearly in angle) about the bottom vertices q2, q3
    until orthogonal to the bottom edge; for t >= 1/2 the edge lines through
    -q2/s and -q3/s rotate about those points until concurrent at (s/2)p1.
    The covering ratio sweeps the whole admissible interval
    [2/(s+1), min(1, s/(s^2-1))].  The asymmetry is preserved exactly for
    s >= phi (and in practice down to s ~ 1.2); below that it can drift
    upward mid-path, so the result is translated to its Minkowski center
    before returning and callers should rely on the recomputed asymmetry.
    """
    if not (1.0 - _DOM_EPS <= s <= 2.0 + _DOM_EPS and -_DOM_EPS <= t <= 1.0 + _DOM_EPS):
        raise DomainError(f"interpolate needs s in [1, 2], t in [0, 1], got ({s}, {t})")
    t = min(max(t, 0.0), 1.0)
    qx = (s - 0.5) / _SQ3
    q2 = np.array([qx, -0.5])
    q3 = np.array([-qx, -0.5])
    piv_r = -q3 / s
    piv_l = -q2 / s

    u1 = min(2.0 * t, 1.0)
    u2 = max(2.0 * t - 1.0, 0.0)

    n_r1 = _rot(u1 * np.pi / 6.0) @ _P2
    n_l1 = _rot(-u1 * np.pi / 6.0) @ _P3

    # step-2 target: the line through the pivot and the apex (0, s/2)
    theta2 = math.atan2(qx / s, (s * s - 1.0) / (2.0 * s)) - np.pi / 6.0
    n_r2 = _rot(u2 * theta2) @ (-_P3)
    n_l2 = _rot(-u2 * theta2) @ (-_P2)

    halfplanes = [
        (_P1, s / 2.0),
        (-_P1, 0.5),
        (n_r1, float(n_r1 @ q2)),
        (n_l1, float(n_l1 @ q3)),
        (n_r2, float(n_r2 @ piv_r)),
        (n_l2, float(n_l2 @ piv_l)),
    ]
    P = geom.from_halfplanes(halfplanes, bound=8.0)
    return geom.translate(P, -minkowski_asymmetry(P).center)


def hood_radius() -> float:
    """Inradius constant of the hood, from the closed cube-root form.

    The radical solves (1 + r)^2 = 2 + 2 sqrt(1 - r^2): the two triangle
    edges from the apex have euclidean length exactly 1 + r.
    """
    t = (32.0 / 9.0) ** (1.0 / 3.0) * ((9 + math.sqrt(69)) ** (1.0 / 3.0)
                                       + (9 - math.sqrt(69)) ** (1.0 / 3.0))
    return (math.sqrt(t) + math.sqrt(16.0 / math.sqrt(t) - t)) / 2.0 - 1.0


def hood(m: int = 4096) -> tuple[ConvexPolygon, GaugeBody]:
    """Polygonal hood and a matching euclidean-disk gauge model.

    The circular part is replaced by chords of the inscribed regular m-gon
    (approximant inside the disk, O(1/m^2) radius defect); odd m is rounded
    up so the disk model is 0-symmetric.  Returns (hood, disk).
    """
    if m < 64:
        raise DomainError(f"hood needs m >= 64, got {m}")
    mm = m + (m % 2)
    r = hood_radius()
    ang = -np.pi / 2 + 2 * np.pi * np.arange(mm) / mm
    circle = np.column_stack((np.cos(ang), np.sin(ang)))
    pts = np.vstack((
        [[0.0, 1.0], [r, -math.sqrt(1 - r * r)], [-r, -math.sqrt(1 - r * r)]],
        r * circle,
    ))
    body = geom.make_polygon(pts)
    disk = make_gauge(geom.make_polygon(circle), symmetric=True)
    return body, disk


def c_lambda(K: ConvexPolygon, lam: float) -> GaugeBody:
    """Gauge C_lam = (1-lam)(K-K)/2 + lam (s+1)/2 (K * (-K)) for Minkowski-
    centered K; K is pseudo-complete w.r.t. every member of the family."""
    if not -_DOM_EPS <= lam <= 1.0 + _DOM_EPS:
        raise DomainError(f"c_lambda needs lambda in [0, 1], got {lam}")
    lam = min(max(lam, 0.0), 1.0)
    negK = geom.negate(K)
    s = minkowski_asymmetry(K).s
    central = geom.scale(geom.minkowski_sum(K, negK), 0.5)
    inner = geom.intersect(K, negK)
    if lam <= 0.0:
        C = central
    elif lam >= 1.0:
        C = geom.scale(inner, (s + 1.0) / 2.0)
    else:
        C = geom.minkowski_sum(geom.scale(central, 1.0 - lam),
                               geom.scale(inner, lam * (s + 1.0) / 2.0))
    return make_gauge(C, symmetric=True)
