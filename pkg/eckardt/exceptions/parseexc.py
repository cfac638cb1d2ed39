from .eckardtexc import InvalidInputException


class InputParseException(InvalidInputException):
    """Indicates textual or JSON input could not be correctly parsed, due to being corrupt, invalid,
    or unexpected."""
    pass


class RationalParseException(InputParseException):
    """Indicates a string could not be read as an exact rational number (``"p"`` or ``"p/q"``)."""
    pass


class JsonSchemaException(InputParseException):
    """Indicates that parsed JSON data did not correspond to the JSON shape expected by the library. For example,
    a JSON-based model such as :class:`~.SylvesterPoint` expected a list of five strings, but received a
    :class:`dict`."""
    pass
