"""Exact rationals.

Rationals are :class:`fractions.Fraction` instances, which are always kept in lowest terms with a positive
denominator (zero is ``0/1``). This module adds parsing, the canonical string format and the conversions to and
from the ground field sympy computes in.
"""
__all__ = ("Rat", "RatLike", "as_rat", "parse_rat", "format_rat", "to_ground", "from_ground")
import re
from fractions import Fraction
from typing import Any, Union

from sympy import QQ, Rational

from ..exceptions.parseexc import RationalParseException

Rat = Fraction
"""Alias for :class:`fractions.Fraction`, the exact ground field element."""

RatLike = Union[int, Fraction, str]
"""Anything :func:`as_rat` accepts."""

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rat(text: str) -> Rat:
    """Parses a rational from its canonical string form (``"p"`` or ``"p/q"``).

    Args:
        text (:class:`str`): The string to parse.

    Returns:
        :class:`~fractions.Fraction`: The parsed rational, in lowest terms.

    Raises:
        :exc:`RationalParseException`: If the string is not an integer or integer fraction, or has a zero
            denominator.

    Examples:
        .. testsetup::

            from eckardt.arith.rat import parse_rat
        .. doctest::

            >>> parse_rat("6/4")
            Fraction(3, 2)
            >>> parse_rat("-7")
            Fraction(-7, 1)
    """
    match = _RAT_RE.match(text) if isinstance(text, str) else None
    if match is None:
        raise RationalParseException(f"Not a rational number: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise RationalParseException(f"Zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def as_rat(value: RatLike) -> Rat:
    """Converts an int, Fraction or rational string into a :class:`~fractions.Fraction`.

    Floats are refused: they would silently carry binary rounding into exact computations.

    Raises:
        :exc:`RationalParseException`: If the value is a malformed string or of an unsupported type.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RationalParseException("Booleans are not rationals.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise RationalParseException(f"Unsupported rational value of type {type(value).__name__}.")


def format_rat(value: Rat) -> str:
    """Formats a rational as ``"p/q"``, or ``"p"`` when the denominator is 1.

    Examples:
        .. testsetup::

            from fractions import Fraction
            from eckardt.arith.rat import format_rat
        .. doctest::

            >>> format_rat(Fraction(-3, 6))
            '-1/2'
            >>> format_rat(Fraction(4))
            '4'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_ground(value: RatLike) -> Any:
    """Converts a rational into an element of sympy's ground field :data:`~sympy.polys.domains.QQ`."""
    value = as_rat(value)
    return QQ(value.numerator, value.denominator)


def from_ground(element: Any) -> Rat:
    """Converts an element of :data:`~sympy.polys.domains.QQ` (or a sympy ``Rational``) back to a
    :class:`~fractions.Fraction`."""
    if isinstance(element, Rational):
        return Fraction(int(element.p), int(element.q))
    return Fraction(int(element.numerator), int(element.denominator))
