__all__ = ("parse_coefficients", "read_input")
import json
import os
import re
from typing import Any, List, Mapping, Union

from ..arith.rat import Rat, parse_rat
from ..exceptions import InputParseException

_SEPARATOR_RE = re.compile(r"\s*,\s*")


def parse_coefficients(text: str) -> List[Rat]:
    """Reads a comma-separated list of rationals, tolerating surrounding brackets and whitespace.

    Args:
        text (:class:`str`): The list, e.g. ``"1,2,3/4"``.

    Returns:
        List[:class:`~fractions.Fraction`]: The parsed values, in order.

    Raises:
        :exc:`RationalParseException`: If an entry is not a rational.
        :exc:`InputParseException`: If the list is empty.

    Examples:
        .. testsetup::

            from eckardt.utils import parse_coefficients
        .. doctest::

            >>> [str(c) for c in parse_coefficients("1, -2,3/6")]
            ['1', '-2', '1/2']
            >>> [str(c) for c in parse_coefficients("(1,1,1,1,0)")]
            ['1', '1', '1', '1', '0']
    """
    body = text.strip().strip("()[]").strip()
    if not body:
        raise InputParseException("Empty coefficient list.")
    return [parse_rat(entry) for entry in _SEPARATOR_RE.split(body)]


def read_input(arg: str) -> Union[List[Rat], Mapping[str, Any]]:
    """Interprets a command-line input: a path to an existing JSON file is loaded, anything else is read by
    :func:`parse_coefficients`.

    Raises:
        :exc:`InputParseException`: If the file holds malformed JSON, or the text is not a coefficient list.
    """
    if os.path.isfile(arg):
        try:
            with open(arg, encoding="utf-8") as f:
                return json.load(f)
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise InputParseException(f"Malformed/non-JSON data in {arg!r}.") from e
    return parse_coefficients(arg)
