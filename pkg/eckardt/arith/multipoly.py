"""Sparse multivariate polynomials with exact rational coefficients.

:class:`MultiPoly` wraps an element of sympy's sparse polynomial ring :math:`\\mathbb{Q}[x_0, \\ldots, x_{n-1}]` and keeps
the exponent-tuple view (:attr:`MultiPoly.terms`) and the canonical JSON and string forms used throughout the package.
"""
__all__ = ("MultiPoly", "Exponents", "elem_sym", "grlex_key", "monomials_of_degree", "polynomial_ring")
import functools
import itertools
import typing
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, TypeVar, Union, Any

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from .rat import Rat, RatLike, as_rat, format_rat, from_ground, to_ground
from ..exceptions import InvalidInputException, JsonSchemaException

Exponents = Tuple[int, ...]
"""An exponent vector; its length is the polynomial's variable count."""

TValue = TypeVar("TValue")

DEFAULT_VARIABLE_NAMES: Tuple[str, ...] = ("a0", "a1", "a2", "a3", "a4")


@functools.lru_cache(maxsize=None)
def polynomial_ring(nvars: int) -> PolyRing:
    """The ring :math:`\\mathbb{Q}[x_0, \\ldots, x_{n-1}]`, graded-lex ordered, that ``nvars``-variable polynomials
    live in."""
    return PolyRing(",".join(f"x{i}" for i in range(nvars)), QQ, grlex)


def grlex_key(exponents: Exponents) -> Tuple[int, Exponents]:
    """Sort key for graded lexicographic order: total degree first, then lexicographic on the exponents.

    Sorting with ``reverse=True`` puts the leading term first, which is the canonical printing order.
    """
    return sum(exponents), exponents


def monomials_of_degree(degree: int, nvars: int) -> List[Exponents]:
    """Lists all exponent vectors of the given total degree, leading (graded-lex largest) first.

    Examples:
        .. testsetup::

            from eckardt.arith.multipoly import monomials_of_degree
        .. doctest::

            >>> len(monomials_of_degree(3, 4))
            20
            >>> monomials_of_degree(2, 2)
            [(2, 0), (1, 1), (0, 2)]
    """
    result = [
        exps for exps in itertools.product(range(degree + 1), repeat=nvars) if sum(exps) == degree
    ]
    result.sort(reverse=True)
    return result


def _is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class MultiPoly:
    """An immutable sparse polynomial in ``nvars`` variables with rational coefficients.

    Two polynomials are equal exactly when they have the same variable count and the same terms.

    Attributes:
        nvars (:class:`int`): Number of variables.
        poly (:class:`~sympy.polys.rings.PolyElement`): The underlying ring element, in
            :func:`polynomial_ring(nvars) <polynomial_ring>`. Must not be mutated.

    .. testsetup:: *

        from fractions import Fraction
        from eckardt.arith.multipoly import MultiPoly, elem_sym
    """
    __slots__ = ("nvars", "poly", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, RatLike]] = None):
        if nvars < 0:
            raise InvalidInputException("Variable count must be non-negative.")
        self.nvars: int = int(nvars)
        clean: Dict[Exponents, Rat] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise InvalidInputException(f"Bad exponent vector {exps} for {self.nvars} variables.")
            clean[exps] = clean.get(exps, Fraction(0)) + as_rat(coeff)
        ring = polynomial_ring(self.nvars)
        self.poly: PolyElement = ring.from_dict({e: to_ground(c) for e, c in clean.items() if c})
        self._terms: Optional[Dict[Exponents, Rat]] = None

    # --- constructors ---

    @classmethod
    def _wrap(cls, nvars: int, poly: PolyElement) -> "MultiPoly":
        """Wraps a ring element of :func:`polynomial_ring(nvars) <polynomial_ring>` without re-validating it."""
        result = cls.__new__(cls)
        result.nvars = nvars
        result.poly = poly
        result._terms = None
        return result

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._wrap(nvars, polynomial_ring(nvars).zero)

    @classmethod
    def constant(cls, value: RatLike, nvars: int) -> "MultiPoly":
        return cls._wrap(nvars, polynomial_ring(nvars).ground_new(to_ground(value)))

    @classmethod
    def variable(cls, index: int, nvars: int) -> "MultiPoly":
        """The polynomial consisting of the single variable ``index``."""
        if not 0 <= index < nvars:
            raise InvalidInputException(f"Variable index {index} out of range for {nvars} variables.")
        return cls._wrap(nvars, polynomial_ring(nvars).gens[index])

    @classmethod
    def linear(cls, coeffs: Sequence[RatLike]) -> "MultiPoly":
        """The linear form :math:`\\sum_i c_i x_i` in ``len(coeffs)`` variables.

        Examples:
            .. doctest::

                >>> str(MultiPoly.linear([1, -1, 0]))
                'a0 - a1'
        """
        nvars = len(coeffs)
        terms: Dict[Exponents, RatLike] = {}
        for i, c in enumerate(coeffs):
            exps = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(nvars, terms)

    # --- basic properties ---

    @property
    def terms(self) -> Dict[Exponents, Rat]:
        """The term map, exponent vector to nonzero :class:`~fractions.Fraction` coefficient. Must not be mutated."""
        if self._terms is None:
            self._terms = {exps: from_ground(c) for exps, c in self.poly.items()}
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.poly.keys()), default=-1)

    @property
    def is_constant(self) -> bool:
        return self.poly.is_ground

    @property
    def constant_value(self) -> Rat:
        return self.coefficient((0,) * self.nvars)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.poly.keys()}) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self.poly) == 1

    def variables_used(self) -> Tuple[int, ...]:
        """Indices of the variables appearing with a positive exponent in some term."""
        return tuple(i for i in range(self.nvars) if any(e[i] for e in self.poly.keys()))

    def coefficient(self, exponents: Exponents) -> Rat:
        return from_ground(self.poly.get(tuple(exponents), QQ.zero))

    def sorted_terms(self) -> List[Tuple[Exponents, Rat]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    # --- arithmetic ---

    def _check_same_ring(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise InvalidInputException(
                f"Polynomials live in different rings ({self.nvars} vs {other.nvars} variables)."
            )

    def _operand(self, other: Any) -> Any:
        """The ring element or ground element to combine with, or ``None`` for unsupported operands."""
        if isinstance(other, MultiPoly):
            self._check_same_ring(other)
            return other.poly
        if _is_exact(other):
            return to_ground(other)
        return None

    def __add__(self, other: Union["MultiPoly", int, Fraction]) -> "MultiPoly":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly._wrap(self.nvars, self.poly + rhs)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap(self.nvars, -self.poly)

    def __sub__(self, other: Union["MultiPoly", int, Fraction]) -> "MultiPoly":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly._wrap(self.nvars, self.poly - rhs)

    def __rsub__(self, other: Union[int, Fraction]) -> "MultiPoly":
        return (-self) + other

    def scale(self, factor: RatLike) -> "MultiPoly":
        return MultiPoly._wrap(self.nvars, self.poly.mul_ground(to_ground(factor)))

    def __mul__(self, other: Union["MultiPoly", int, Fraction]) -> "MultiPoly":
        rhs = self._operand(other)
        if rhs is None:
            return NotImplemented
        return MultiPoly._wrap(self.nvars, self.poly * rhs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise InvalidInputException("Negative powers of polynomials are not polynomials.")
        if exponent == 0:
            return MultiPoly.constant(1, self.nvars)
        return MultiPoly._wrap(self.nvars, self.poly ** int(exponent))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.poly == other.poly

    def __hash__(self):
        return hash((self.nvars, self.poly))

    # --- calculus, composition, evaluation ---

    def derivative(self, var: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable ``var``.

        Examples:
            .. doctest::

                >>> str(elem_sym(2).derivative(0))
                'a1 + a2 + a3 + a4'
        """
        if not 0 <= var < self.nvars:
            raise InvalidInputException(f"Variable index {var} out of range for {self.nvars} variables.")
        return MultiPoly._wrap(self.nvars, self.poly.diff(self.poly.ring.gens[var]))

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Composes this polynomial with the map sending variable ``i`` to ``images[i]``.

        Source and target rings are both embedded in the ring with the larger variable count, where sympy's
        simultaneous :meth:`~sympy.polys.rings.PolyElement.compose` does the work.

        Args:
            images (Sequence[:class:`MultiPoly`]): One image per variable, all in the same (target) ring.

        Returns:
            :class:`MultiPoly`: The exact composition, in the target ring.

        Raises:
            :exc:`InvalidInputException`: If the map is not total or the images live in different rings.

        Examples:
            .. doctest::

                >>> s = MultiPoly.variable(0, 1)
                >>> (MultiPoly.variable(0, 5) - MultiPoly.variable(1, 5)).substitute([s] * 5).is_zero
                True
        """
        if len(images) != self.nvars:
            raise InvalidInputException(f"Substitution needs {self.nvars} images, got {len(images)}.")
        if not images:
            return self
        target = images[0].nvars
        if any(img.nvars != target for img in images):
            raise InvalidInputException("Substitution images must share one ring.")
        width = max(self.nvars, target)
        ring = polynomial_ring(width)

        def lift(poly: PolyElement, nvars: int) -> PolyElement:
            pad = (0,) * (width - nvars)
            return ring.from_dict({exps + pad: c for exps, c in poly.items()})

        composed = lift(self.poly, self.nvars).compose(
            [(ring.gens[i], lift(img.poly, target)) for i, img in enumerate(images)]
        )
        # only the first ``target`` variables survive the composition
        return MultiPoly._wrap(
            target, polynomial_ring(target).from_dict({exps[:target]: c for exps, c in composed.items()})
        )

    def evaluate(self, point: Sequence[TValue]) -> TValue:
        """Evaluates the polynomial at a point.

        Exact rationals (or ints) are evaluated in sympy's ground field and give a :class:`~fractions.Fraction`; any
        other scalars (complex numbers, numpy values) give a floating :class:`complex` result.

        Examples:
            .. doctest::

                >>> elem_sym(5).evaluate([Fraction(i) for i in (1, 2, 3, 4, 5)])
                Fraction(120, 1)
        """
        if len(point) != self.nvars:
            raise InvalidInputException(f"Point has {len(point)} coordinates; expected {self.nvars}.")
        if not self.nvars or self.is_zero:
            return typing.cast(TValue, self.constant_value)
        if all(_is_exact(v) for v in point):
            return typing.cast(TValue, from_ground(self.poly(*(to_ground(v) for v in point))))
        values = [complex(v) for v in point]
        total = 0j
        for exps, coeff in self.poly.items():
            term = complex(from_ground(coeff))
            for value, exp in zip(values, exps):
                if exp:
                    term *= value ** exp
            total += term
        return typing.cast(TValue, total)

    # --- presentation ---

    def to_json_data(self) -> List[Dict[str, Any]]:
        """Canonical JSON form: ``[{"exponents": [...], "coeff": "p/q"}, ...]`` in descending graded-lex order."""
        return [{"exponents": list(exps), "coeff": format_rat(c)} for exps, c in self.sorted_terms()]

    @classmethod
    def _from_json_data(cls, nvars: int, json_data: Iterable[Mapping[str, Any]]) -> "MultiPoly":
        try:
            return cls(nvars, {tuple(t["exponents"]): as_rat(t["coeff"]) for t in json_data})
        except (TypeError, KeyError) as e:
            raise JsonSchemaException("Unexpected polynomial JSON data received.") from e

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = DEFAULT_VARIABLE_NAMES if self.nvars <= 5 else tuple(f"x{i}" for i in range(self.nvars))
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for exps, coeff in self.sorted_terms():
            monomial = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            )
            magnitude = abs(coeff)
            if not monomial:
                body = format_rat(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{format_rat(magnitude)}*{monomial}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly(nvars={self.nvars}, {self.format()!r})"


def elem_sym(k: int, nvars: int = 5) -> MultiPoly:
    """The elementary symmetric polynomial :math:`\\sigma_k` in ``nvars`` variables.

    Args:
        k (:class:`int`): Degree, between 1 and ``nvars``.
        nvars (:class:`int`, optional): Number of variables (5 by default, the Sylvester coefficients
            :math:`a_0, \\ldots, a_4`).

    Raises:
        :exc:`InvalidInputException`: If ``k`` is out of range.

    Examples:
        .. testsetup::

            from eckardt.arith.multipoly import elem_sym
        .. doctest::

            >>> str(elem_sym(1))
            'a0 + a1 + a2 + a3 + a4'
            >>> str(elem_sym(5))
            'a0*a1*a2*a3*a4'
            >>> len(elem_sym(2).terms)
            10
    """
    if not 1 <= k <= nvars:
        raise InvalidInputException(f"Elementary symmetric degree must be in 1..{nvars}, got {k}.")
    terms: Dict[Exponents, RatLike] = {}
    for chosen in itertools.combinations(range(nvars), k):
        terms[tuple(1 if i in chosen else 0 for i in range(nvars))] = 1
    return MultiPoly(nvars, terms)
