"""Factored polynomials: a rational scalar times a product of powers of sparse polynomials.

A :class:`FactoredPoly` is never expanded by evaluation, substitution or differentiation, which keeps objects such as
:math:`I_{100} = \\sigma_5^{18} \\prod_{i<j} (a_j - a_i)` (total degree 100) cheap to handle.
"""
__all__ = ("FactoredPoly", "FactoredSum", "derive", "substitute", "evaluate")
import typing
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union, Any

from .multipoly import MultiPoly
from .rat import Rat, RatLike, as_rat, format_rat
from ..exceptions import InvalidInputException

TValue = TypeVar("TValue")


class FactoredPoly:
    """A polynomial stored as ``scalar * prod(base ** exponent)``.

    Construction normalizes the factor list: constant bases are folded into the scalar, equal bases are merged
    (exponents added), and a zero scalar drops every factor. Hence no base is constant, bases are pairwise distinct,
    and the polynomial is identically zero exactly when the scalar is zero.

    Attributes:
        nvars (:class:`int`): Number of variables.
        scalar (:class:`~fractions.Fraction`): The constant factor.
        factors (Tuple[Tuple[:class:`~.MultiPoly`, :class:`int`], ...]): ``(base, exponent)`` pairs, exponents
            positive.

    .. testsetup:: *

        from fractions import Fraction
        from eckardt.arith.multipoly import MultiPoly, elem_sym
        from eckardt.arith.factored import FactoredPoly
    """
    __slots__ = ("nvars", "scalar", "factors")

    #: Largest total degree :meth:`expand` accepts unless told otherwise.
    EXPANSION_LIMIT: typing.ClassVar[int] = 24

    def __init__(self, nvars: int, scalar: RatLike = 1,
                 factors: Iterable[Tuple[MultiPoly, int]] = ()):
        self.nvars: int = int(nvars)
        value = as_rat(scalar)
        merged: Dict[MultiPoly, int] = {}
        for base, exponent in factors:
            if base.nvars != self.nvars:
                raise InvalidInputException("Factor lives in a ring with a different variable count.")
            exponent = int(exponent)
            if exponent < 0:
                raise InvalidInputException("Factor exponents must be positive.")
            if exponent == 0:
                continue
            if base.is_constant:
                value *= base.constant_value ** exponent
                continue
            merged[base] = merged.get(base, 0) + exponent
        self.scalar: Rat = value
        self.factors: Tuple[Tuple[MultiPoly, int], ...] = tuple(merged.items()) if value else ()

    @property
    def is_zero(self) -> bool:
        return not self.scalar

    @property
    def degree(self) -> int:
        """Total degree, :math:`\\sum e \\cdot \\deg(b)`; ``-1`` for zero."""
        if self.is_zero:
            return -1
        return sum(e * b.degree for b, e in self.factors)

    def evaluate(self, point: Sequence[TValue]) -> TValue:
        """Evaluates factor by factor, without expanding.

        Examples:
            .. doctest::

                >>> f = FactoredPoly(5, 1, [(elem_sym(5), 18)])
                >>> f.evaluate([Fraction(1)] * 5)
                Fraction(1, 1)
        """
        total: Any = self.scalar
        if not total:
            return typing.cast(TValue, total)
        for base, exponent in self.factors:
            value = base.evaluate(point)
            if not value:
                return typing.cast(TValue, value * 0)
            total = total * value ** exponent
        return typing.cast(TValue, total)

    def substitute(self, images: Sequence[MultiPoly]) -> "FactoredPoly":
        """Substitutes base by base; the result stays factored in the target ring."""
        if len(images) != self.nvars:
            raise InvalidInputException(f"Substitution needs {self.nvars} images, got {len(images)}.")
        target = images[0].nvars if images else self.nvars
        return FactoredPoly(target, self.scalar, [(b.substitute(images), e) for b, e in self.factors])

    def derive(self, var: int) -> "FactoredSum":
        """Partial derivative by the product rule.

        Each summand replaces one factor :math:`b^e` by :math:`e \\cdot b^{e-1} \\cdot \\partial b / \\partial x_{var}`;
        factors not containing the variable contribute nothing.

        Examples:
            .. doctest::

                >>> d = MultiPoly.linear([1, -1, 0, 0, 0])
                >>> df = FactoredPoly(5, 1, [(d, 2)]).derive(0)
                >>> len(df.summands), df.summands[0].scalar, df.summands[0].factors == ((d, 1),)
                (1, Fraction(2, 1), True)
        """
        if not 0 <= var < self.nvars:
            raise InvalidInputException(f"Variable index {var} out of range for {self.nvars} variables.")
        summands: List[FactoredPoly] = []
        for index, (base, exponent) in enumerate(self.factors):
            partial = base.derivative(var)
            if partial.is_zero:
                continue
            rest = [f for i, f in enumerate(self.factors) if i != index]
            rest.append((base, exponent - 1))
            rest.append((partial, 1))
            summands.append(FactoredPoly(self.nvars, self.scalar * exponent, rest))
        return FactoredSum(self.nvars, summands)

    def expand(self, max_degree: Optional[int] = None) -> MultiPoly:
        """Multiplies everything out.

        Raises:
            :exc:`InvalidInputException`: If the total degree exceeds ``max_degree``
                (:attr:`EXPANSION_LIMIT` by default); large factored objects are meant to stay factored.
        """
        limit = FactoredPoly.EXPANSION_LIMIT if max_degree is None else max_degree
        if self.degree > limit:
            raise InvalidInputException(f"Refusing to expand a polynomial of degree {self.degree} (> {limit}).")
        result = MultiPoly.constant(self.scalar, self.nvars)
        for base, exponent in self.factors:
            result = result * base ** exponent
        return result

    def __mul__(self, other: "FactoredPoly") -> "FactoredPoly":
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise InvalidInputException("Factored polynomials live in different rings.")
        return FactoredPoly(self.nvars, self.scalar * other.scalar, self.factors + other.factors)

    def __eq__(self, other):
        """Structural equality (same scalar and same factor multiset); not a polynomial identity test."""
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.scalar == other.scalar
                and dict(self.factors) == dict(other.factors))

    def __hash__(self):
        return hash((self.nvars, self.scalar, frozenset(self.factors)))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = [] if self.scalar == 1 else [format_rat(self.scalar)]
        for base, exponent in self.factors:
            text = f"({base})"
            parts.append(text if exponent == 1 else f"{text}^{exponent}")
        return " * ".join(parts) or "1"

    def __repr__(self):
        return f"FactoredPoly({self})"


class FactoredSum:
    """A sum of :class:`FactoredPoly` summands, as produced by :meth:`FactoredPoly.derive`.

    Attributes:
        nvars (:class:`int`): Number of variables.
        summands (Tuple[:class:`FactoredPoly`, ...]): The summands; zero summands are dropped on construction.
    """
    __slots__ = ("nvars", "summands")

    def __init__(self, nvars: int, summands: Iterable[FactoredPoly] = ()):
        self.nvars: int = int(nvars)
        self.summands: Tuple[FactoredPoly, ...] = tuple(s for s in summands if not s.is_zero)

    @property
    def is_empty(self) -> bool:
        """``True`` when no nonzero summand is left, i.e. the sum is identically zero."""
        return not self.summands

    def evaluate(self, point: Sequence[TValue]) -> TValue:
        total: Any = Fraction(0)
        for summand in self.summands:
            total = total + summand.evaluate(point)
        return typing.cast(TValue, total)

    def substitute(self, images: Sequence[MultiPoly]) -> "FactoredSum":
        target = images[0].nvars if images else self.nvars
        return FactoredSum(target, [s.substitute(images) for s in self.summands])

    def expand(self, max_degree: Optional[int] = None) -> MultiPoly:
        result = MultiPoly.zero(self.nvars)
        for summand in self.summands:
            result = result + summand.expand(max_degree)
        return result

    def __len__(self):
        return len(self.summands)

    def __str__(self):
        return " + ".join(str(s) for s in self.summands) or "0"

    def __repr__(self):
        return f"FactoredSum({len(self.summands)} summands)"


Evaluable = Union[MultiPoly, FactoredPoly, FactoredSum]


def derive(f: FactoredPoly, var: int) -> FactoredSum:
    """Module-level alias of :meth:`FactoredPoly.derive`."""
    return f.derive(var)


def substitute(f: Union[MultiPoly, FactoredPoly], images: Sequence[MultiPoly]) -> Union[MultiPoly, FactoredPoly]:
    """Exact composition of ``f`` with the map ``variable i -> images[i]``; factored input stays factored."""
    return f.substitute(images)


def evaluate(f: Evaluable, point: Sequence[TValue]) -> TValue:
    """Evaluates any of the polynomial kinds at a point (factored kinds are never expanded)."""
    return f.evaluate(point)
