"""Structured exception types raised across the library."""


class ToricError(Exception):
    """Base class for every error this package raises on bad input or
    failed internal certificates."""


class NotPointedError(ToricError):
    """The cone contains a line."""


class NotFullDimensionalError(ToricError):
    """The cone does not span the ambient space."""


class EmptyGeneratorsError(ToricError):
    """A generator list that must be non-empty was empty."""


class EmptyRegionError(ToricError):
    """An H-representation turned out to describe the empty set."""


class NegativeScaleError(ToricError):
    """Polyhedra scale only by nonnegative rationals."""


class DimensionMismatchError(ToricError):
    """Operands live in different ambient dimensions."""


class UnboundedMinimalSetError(ToricError):
    """Lattice point enumeration failed to stabilize inside the box cap."""


class PointOutsideSemigroupError(ToricError):
    """An exponent vector is not a lattice point of the ambient cone."""


class AmbientMismatchError(ToricError):
    """Ideal operands belong to different semigroup rings."""


class ZeroIdealError(ToricError):
    """The operation is undefined for the zero ideal."""


class PDividesDenominatorError(ToricError):
    """The exponent t has the characteristic p in its denominator, so no
    positive power of the operator pairs with an integral power of the
    coefficient ideal."""


class InadmissibleExponentError(ToricError):
    """The iteration count is not a positive multiple of the period."""


class NoStabilizationError(ToricError):
    """An iteration that must reach a fixed point exceeded its cap."""


class NotPrincipalError(ToricError):
    """The divisor data admits no rational solution: the log divisor is
    not Q-Cartier against this cone."""


class IndexNotCoprimeError(ToricError):
    """The divisor data has a rational but non-integral solution for w:
    the Q-Cartier index is not coprime to p for this exponent."""


class AllFixedIdealsZeroError(ToricError):
    """No nonzero fixed ideal exists (defensive; cannot occur for a
    full-dimensional shifted region)."""


class TooManyFacesError(ToricError):
    """The face lattice exceeds the enumeration cap."""


class PoolTooLargeError(ToricError):
    """Brute-force candidate pool exceeds the subset-enumeration cap."""


class UnsupportedPlotError(ToricError):
    """Figure emission is only available in dimension 2."""


class InstanceError(ToricError):
    """Problem-instance text failed to parse or validate."""
