__all__ = ("SylvesterPoint",)
import typing
from fractions import Fraction
from typing import Any, Mapping, Sequence, Tuple

from .model_abc import JsonModel
from ..arith.rat import Rat, RatLike, as_rat, format_rat
from ..exceptions import InvalidInputException, JsonSchemaException, RationalParseException

Permutation = Tuple[int, ...]


class SylvesterPoint(JsonModel[Mapping[str, Any]]):
    """A cubic surface in Sylvester form, :math:`\\sum a_i z_i^3 = 0` on :math:`\\sum z_i = 0` in
    :math:`\\mathbb{P}^4`, stored through its projective coefficient vector :math:`(a_0 : \\ldots : a_4)`.

    Two points are equal when their coefficient vectors are proportional.

    Attributes:
        coeffs (Tuple[:class:`~fractions.Fraction`, ...]): The five coefficients, not all zero.

    .. testsetup:: *

        from eckardt.models.sylvester import SylvesterPoint
    """
    __slots__ = ("coeffs",)

    #: Number of coefficients (and of pentahedron faces).
    SIZE: typing.ClassVar[int] = 5

    def __init__(self, coeffs: Sequence[RatLike]):
        if len(coeffs) != SylvesterPoint.SIZE:
            raise InvalidInputException(f"A Sylvester form has 5 coefficients, got {len(coeffs)}.")
        values = tuple(as_rat(c) for c in coeffs)
        if not any(values):
            raise InvalidInputException("A projective point cannot have all coordinates zero.")
        self.coeffs: Tuple[Rat, ...] = values

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        """Builds a point from ``{"sylvester": ["a0", ..., "a4"]}``.

        Raises:
            :exc:`JsonSchemaException`: If the data does not have that shape.
        """
        try:
            return cls([as_rat(c) for c in json_data["sylvester"]])
        except (TypeError, KeyError, RationalParseException) as e:
            raise JsonSchemaException("Unexpected Sylvester point JSON data received.") from e

    def to_json_data(self):
        return {"sylvester": [format_rat(c) for c in self.coeffs]}

    @property
    def zero_count(self) -> int:
        """Number of vanishing coefficients."""
        return sum(1 for c in self.coeffs if not c)

    @property
    def is_degenerate(self) -> bool:
        """``True`` if some coefficient vanishes (degenerate Sylvester form)."""
        return self.zero_count > 0

    def permuted(self, perm: Permutation) -> "SylvesterPoint":
        """Applies a permutation of the coordinates: coefficient ``i`` moves to position ``perm[i]``.

        Examples:
            .. doctest::

                >>> SylvesterPoint([1, 2, 3, 4, 5]).permuted((1, 0, 2, 3, 4)).coeffs[:2]
                (Fraction(2, 1), Fraction(1, 1))
        """
        moved = [Fraction(0)] * SylvesterPoint.SIZE
        for i, target in enumerate(perm):
            moved[target] = self.coeffs[i]
        return SylvesterPoint(moved)

    def scaled(self, factor: RatLike) -> "SylvesterPoint":
        factor = as_rat(factor)
        if not factor:
            raise InvalidInputException("Scaling a projective point by zero.")
        return SylvesterPoint([c * factor for c in self.coeffs])

    def normalized(self) -> Tuple[Rat, ...]:
        """The representative whose first nonzero coordinate is 1."""
        lead = next(c for c in self.coeffs if c)
        return tuple(c / lead for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SylvesterPoint):
            return NotImplemented
        return self.normalized() == other.normalized()

    def __hash__(self):
        return hash(self.normalized())

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, index: int) -> Rat:
        return self.coeffs[index]

    def __str__(self):
        return "(" + ":".join(format_rat(c) for c in self.coeffs) + ")"

    def __repr__(self):
        return f"SylvesterPoint({','.join(format_rat(c) for c in self.coeffs)})"
