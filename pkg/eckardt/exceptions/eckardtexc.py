class EckardtException(Exception):
    """Base class for all custom exceptions possibly raised by this library."""
    pass


class InvalidInputException(EckardtException):
    """Indicates the caller passed an input that breaks an operation's precondition (wrong arity, an index out of
    range, an all-zero projective point, and so on)."""
    pass


class ComputationException(EckardtException):
    """Indicates the input was well-formed, but the requested computation is undefined there (for example,
    the inverse of the moduli map at its base point)."""
    pass


class NumericException(EckardtException):
    """Any exception raised by the numerical (floating point) layer."""
    pass


class VerificationFailure(EckardtException):
    """Indicates an exact verification check did not hold.

    Attributes:
        item (:class:`str`): Name of the first failing item (e.g. a component label).
    """

    def __init__(self, message: str, *, item: str = ""):
        super().__init__(message)
        self.item: str = item
