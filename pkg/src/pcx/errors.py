"""Exception types shared across the package."""


class PcxError(Exception):
    """Base class for all pcx errors."""


# projective layer
class NearKernel(PcxError):
    """A functional evaluation fell below the evaluation tolerance."""


class DegeneratePair(PcxError):
    """Two points that were required to be distinct coincide."""


class LineInHyperplane(PcxError):
    """A line lies entirely inside the kernel of a functional."""


# domain layer
class OutsideChart(PcxError):
    """Point lies on the hyperplane at infinity of the domain's chart."""


class NotOnBoundary(PcxError):
    """Point is not within tolerance of the domain boundary."""


class EmptySlice(PcxError):
    """No interior point of the slice was found within the search budget."""


class InvalidDomain(PcxError):
    """Domain data violates a construction invariant."""


class DomainSpecError(PcxError):
    """Malformed JSON domain description; carries a field diagnostic."""

    def __init__(self, field, message):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


# metric layer
class PointOutsideDomain(PcxError):
    """Distance queried at a point not inside the domain."""


class SequenceNotConverging(PcxError):
    """A sequence required to converge shows no Cauchy tail."""


class PairBoundExceeded(PcxError):
    """A sequence pair violates its required distance bound."""


class NotAnAutomorphism(PcxError):
    """Map fails to preserve the domain on the sample grid."""


# spectral layer
class IllConditioned(PcxError):
    """Eigenvalue magnitude gap falls inside the ambiguity band."""


class RepellerTooClose(PcxError):
    """Trajectory start is too close to the repelling fixed point."""


class DetNotOne(PcxError):
    """2x2 real matrix is not unimodular."""


class NotBiProximal(PcxError):
    """Operation requires a bi-proximal map."""


# growth layer
class OverflowGuard(PcxError):
    """Predicted product magnitude exceeds the double-precision guard."""


class FlagNotPreserved(PcxError):
    """A generator does not preserve the given flag within tolerance."""


# quasi-geometry layer
class NotStarShaped(PcxError):
    """Domain is not star-shaped about the requested center."""


# normal-form layer
class GridTooCoarse(PcxError):
    """Interpolation error estimate exceeds the measured residual."""


class NotScalingInvariant(PcxError):
    """Graph function is not invariant under the scaling action."""


class XDependence(PcxError):
    """Graph function depends on the real tangential coordinate."""


class NotPositiveDefinite(PcxError):
    """Hermitian part of the quadric is not positive definite."""


class TakagiFailure(PcxError):
    """Takagi factorization residual exceeds tolerance."""


class NotDiagonalized(PcxError):
    """Quadric has not been put in normal form yet."""


# cli layer
class UnknownSuite(PcxError):
    """Requested verification suite does not exist."""


class ConfigInvalid(PcxError):
    """Configuration file failed validation; carries field diagnostics."""

    def __init__(self, field, message):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")
