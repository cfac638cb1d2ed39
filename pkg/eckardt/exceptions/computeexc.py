__all__ = (
    "BaseLocusPointException", "InverseUndefinedException", "DegenerateFormException", "NotOnHypersurfaceException",
    "CoincidentPointsException", "InvalidConfigException", "OutputWriteException", "TrackingFailureException",
    "SingularSurfaceException"
)
from .eckardtexc import ComputationException, InvalidInputException, NumericException


class BaseLocusPointException(ComputationException):
    """Indicates all five Salmon invariants vanish at a Sylvester point (equivalently
    :math:`\\sigma_4 = \\sigma_5 = 0`), so the point has no image in the moduli space."""
    pass


class InverseUndefinedException(ComputationException):
    """Indicates the inverse moduli map was requested at a point with :math:`I_{40} = 0`. The only such point
    of the inverse's indeterminacy locus is Q = (1:0:0:0:0)."""
    pass


class DegenerateFormException(ComputationException):
    """Indicates the exact Eckardt vertex criterion was requested for a degenerate Sylvester form (some
    coefficient is zero). Use the numeric detector (:func:`~.eckardt_numeric`) for those surfaces."""
    pass


class NotOnHypersurfaceException(ComputationException):
    """Indicates a local computation on the Eckardt hypersurface was requested at a point off it
    (:math:`I_{100} \\neq 0`)."""
    pass


class CoincidentPointsException(InvalidInputException):
    """Indicates a line was requested through coincident points, or too few distinct points were given."""
    pass


class InvalidConfigException(InvalidInputException):
    """Indicates a configuration object was built with values breaking its invariants."""
    pass


class OutputWriteException(InvalidInputException):
    """Indicates the requested output file could not be opened or written."""
    pass


class TrackingFailureException(NumericException):
    """Indicates homotopy tracking did not end with exactly 27 distinct lines.

    Attributes:
        diagnostics (List[Mapping[:class:`str`, Any]]): One record per tracked path (status, final ``t``, step count,
            residual).
    """

    def __init__(self, message: str, *, diagnostics=None):
        super().__init__(message)
        self.diagnostics = list(diagnostics) if diagnostics else []


class SingularSurfaceException(NumericException):
    """Indicates several tracked endpoints had singular Jacobians: the surface may be singular, so it carries no
    finite set of 27 lines."""
    pass
