"""Planar convex-geometry engine for Minkowski asymmetry, symmetrization
ratios, gauge-based radii, and completeness verification."""

from .errors import (AsymmetricGauge, ConvexSymError, DegenerateInput,
                     DomainError, EmptyIntersection, InconsistentCharacterization,
                     LPFailure, NoTriple, ParseError, SingularMatrix,
                     UnclassifiedPoint)
from .geom import (ConvexPolygon, CrossingSet, boundary_intersections, contains,
                   gauge_value, hausdorff_distance, hull_union, intersect,
                   linear_map, make_polygon, minkowski_sum, negate,
                   read_polygon, scale, support, translate, write_polygon)
from .gauges import (AsymmetryResult, ContainmentResult, GaugeBody, breadth,
                     circumradius, diameter, inradius, make_gauge,
                     minkowski_asymmetry, recentered, well_spread_triple, width)
from .symm import (SymmetrizationTriple, alpha, alpha_tau, classify_touching_points,
                   crossing_count, symmetrize, tau)
from .complete import (CompletenessReport, completeness_report, dw_ratio,
                       euclidean_dw_bound, is_complete, is_constant_width,
                       is_pseudo_complete, regular_slab_normals, tilde_s)
from . import families

__all__ = [name for name in dir() if not name.startswith("_")]
