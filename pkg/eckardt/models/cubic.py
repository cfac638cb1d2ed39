__all__ = ("CubicForm3",)
import typing
from typing import Any, List, Mapping, Sequence, Tuple

from .model_abc import JsonModel
from ..arith.multipoly import MultiPoly, Exponents, monomials_of_degree
from ..arith.rat import Rat, RatLike, as_rat, format_rat
from ..exceptions import InvalidInputException, JsonSchemaException, RationalParseException

P3_VARIABLE_NAMES: Tuple[str, ...] = ("x0", "x1", "x2", "x3")


class CubicForm3(JsonModel[Mapping[str, Any]]):
    """A homogeneous cubic in :math:`x_0, \\ldots, x_3`, i.e. a cubic surface in :math:`\\mathbb{P}^3`.

    Attributes:
        poly (:class:`~.MultiPoly`): The cubic, in 4 variables, homogeneous of degree 3 and nonzero.

    .. testsetup:: *

        from eckardt.models.cubic import CubicForm3
    """
    __slots__ = ("poly",)

    MONOMIALS: typing.ClassVar[Tuple[Exponents, ...]] = tuple(monomials_of_degree(3, 4))
    """The 20 cubic monomials in graded-lex order (``x0^3`` first, ``x3^3`` last); coefficient vectors follow it."""

    def __init__(self, poly: MultiPoly):
        if poly.nvars != 4:
            raise InvalidInputException("A cubic surface form needs exactly 4 variables.")
        if poly.is_zero:
            raise InvalidInputException("A cubic form cannot be identically zero.")
        if poly.degree != 3 or not poly.is_homogeneous:
            raise InvalidInputException("Not a homogeneous cubic.")
        self.poly: MultiPoly = poly

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[RatLike]) -> "CubicForm3":
        """Builds a cubic from its 20 coefficients in :attr:`MONOMIALS` order.

        Examples:
            .. doctest::

                >>> str(CubicForm3.from_coefficients([0, 3] + [0] * 18))
                '3*x0^2*x1'
                >>> [i for i, c in enumerate(CubicForm3.fermat().coefficients) if c]
                [0, 10, 16, 19]
        """
        if len(coeffs) != len(CubicForm3.MONOMIALS):
            raise InvalidInputException(f"A cubic in 4 variables has 20 coefficients, got {len(coeffs)}.")
        return cls(MultiPoly(4, dict(zip(CubicForm3.MONOMIALS, coeffs))))

    @classmethod
    def fermat(cls) -> "CubicForm3":
        """The Fermat cubic :math:`x_0^3 + x_1^3 + x_2^3 + x_3^3`."""
        return cls(MultiPoly(4, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1}))

    @property
    def coefficients(self) -> List[Rat]:
        """The 20 coefficients, in :attr:`MONOMIALS` order."""
        return [self.poly.coefficient(m) for m in CubicForm3.MONOMIALS]

    def coefficient(self, exponents: Exponents) -> Rat:
        return self.poly.coefficient(exponents)

    def complex_coefficients(self) -> List[complex]:
        return [complex(c) for c in self.coefficients]

    def evaluate(self, point: Sequence[Any]) -> Any:
        return self.poly.evaluate(point)

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        """Builds a cubic from ``{"cubic": [20 rational strings]}``."""
        try:
            return cls.from_coefficients([as_rat(c) for c in json_data["cubic"]])
        except (TypeError, KeyError, RationalParseException) as e:
            raise JsonSchemaException("Unexpected cubic form JSON data received.") from e

    def to_json_data(self):
        return {"cubic": [format_rat(c) for c in self.coefficients]}

    def __eq__(self, other):
        if not isinstance(other, CubicForm3):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return self.poly.format(P3_VARIABLE_NAMES)

    def __repr__(self):
        return f"CubicForm3({self})"
