"""Seeded random body generation for the verification suites.

Model: 6-14 points uniform in an annulus (random inner radius), convex hull,
an optional Minkowski blend toward the hull's negation, a random shear, then
translation to the Minkowski center.  The blend step exists because pure
annulus hulls almost never fall below asymmetry 1.05, and the suites need
samples spanning essentially the whole asymmetry range [1, 2]; diversity
matters more than any particular distribution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import geom
from .errors import DegenerateInput
from .gauges import GaugeBody, make_gauge, minkowski_asymmetry
from .geom import ConvexPolygon


@dataclass(frozen=True)
class RandomBody:
    """A recentered sample with its replay data."""

    label: str
    body: ConvexPolygon  # Minkowski centered
    s: float


def _raw_sample(rng: np.random.Generator) -> ConvexPolygon | None:
    n = int(rng.integers(6, 15))
    r0 = rng.uniform(0.0, 0.9)
    radii = rng.uniform(r0, 1.0, size=n)
    ang = rng.uniform(0.0, 2.0 * np.pi, size=n)
    pts = np.column_stack((radii * np.cos(ang), radii * np.sin(ang)))
    try:
        P = geom.make_polygon(pts)
    except DegenerateInput:
        return None
    if rng.uniform() < 0.25:
        beta = rng.uniform(0.0, 0.5)
        if beta > 1e-9:
            P = geom.minkowski_sum(geom.scale(P, 1.0 - beta),
                                   geom.scale(geom.negate(P), beta))
    shear = rng.uniform(-1.0, 1.0)
    return geom.linear_map(P, np.array([[1.0, shear], [0.0, 1.0]]))


def random_bodies(count: int, seed: int) -> list[RandomBody]:
    """`count` Minkowski-centered random bodies, reproducible from the seed."""
    rng = np.random.default_rng(seed)
    out: list[RandomBody] = []
    index = 0
    while len(out) < count:
        P = _raw_sample(rng)
        index += 1
        if P is None:
            continue
        res = minkowski_asymmetry(P)
        K = geom.translate(P, -res.center)
        out.append(RandomBody(label=f"random[seed={seed},draw={index}]",
                              body=K, s=res.s))
    return out


def random_symmetric_gauges(count: int, seed: int) -> list[GaugeBody]:
    """Symmetric gauges: hulls of K u (-K) over random bodies."""
    rng = np.random.default_rng(seed ^ 0x00FF00FF)
    out: list[GaugeBody] = []
    while len(out) < count:
        P = _raw_sample(rng)
        if P is None:
            continue
        out.append(make_gauge(geom.hull_union(P, geom.negate(P)), symmetric=True))
    return out
