"""Exception types shared across the package."""


class ConvexSymError(Exception):
    """Base class for all errors raised by convexsym."""


class DegenerateInput(ConvexSymError):
    """Input points span a point or a segment, not a full-dimensional body."""


class EmptyIntersection(ConvexSymError):
    """Polygon interiors do not overlap."""


class SingularMatrix(ConvexSymError):
    """Linear map has (numerically) vanishing determinant."""


class LPFailure(ConvexSymError):
    """Linear program was infeasible or the solver failed; indicates invalid
    input or a bug, never a regular outcome."""


class AsymmetricGauge(ConvexSymError):
    """Operation requires a symmetric gauge body but the flag is unset."""


class NoTriple(ConvexSymError):
    """No well-spread triple of asymmetry points found (s <= 1 within
    tolerance or certificate search failed)."""


class UnclassifiedPoint(ConvexSymError):
    """A touching point fits neither case of the touching-point dichotomy;
    this would numerically falsify it and must fail the test suite."""


class InconsistentCharacterization(ConvexSymError):
    """The radii-chain characterization of pseudo-completeness is violated
    beyond tolerance; numerical falsification, must fail the test suite."""


class DomainError(ConvexSymError):
    """Family or formula parameter outside its documented domain."""


class ParseError(ConvexSymError):
    """Malformed polygon file or CLI parameter."""
