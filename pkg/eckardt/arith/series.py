"""Truncated power series in one formal parameter, with exact coefficients."""
__all__ = ("TruncatedSeries",)
from typing import List, Optional, Sequence

from sympy.polys.ring_series import rs_mul, rs_pow, rs_trunc
from sympy.polys.rings import PolyElement

from .multipoly import MultiPoly, polynomial_ring
from .rat import Rat, RatLike, as_rat, from_ground, to_ground
from ..exceptions import InvalidInputException


class TruncatedSeries:
    """A power series :math:`\\sum_{k \\le N} c_k \\varepsilon^k` known up to order ``N`` (the truncation).

    The series is a univariate element of :func:`~.polynomial_ring` ``(1)``, always reduced modulo
    :math:`\\varepsilon^{N+1}` by sympy's ring-series routines.

    Attributes:
        truncation (:class:`int`): Highest order kept.
        series (:class:`~sympy.polys.rings.PolyElement`): The truncated series.

    .. testsetup:: *

        from eckardt.arith.series import TruncatedSeries
    """
    __slots__ = ("truncation", "series")

    def __init__(self, coeffs: Sequence[RatLike], truncation: int):
        if truncation < 0:
            raise InvalidInputException("Series truncation must be non-negative.")
        self.truncation: int = truncation
        self.series: PolyElement = polynomial_ring(1).from_dict(
            {(k,): to_ground(c) for k, c in enumerate(coeffs[:truncation + 1]) if as_rat(c)}
        )

    @classmethod
    def _wrap(cls, series: PolyElement, truncation: int) -> "TruncatedSeries":
        result = cls.__new__(cls)
        result.truncation = truncation
        result.series = series
        return result

    @staticmethod
    def _eps() -> PolyElement:
        return polynomial_ring(1).gens[0]

    @property
    def coeffs(self) -> List[Rat]:
        """The ``truncation + 1`` coefficients, lowest order first."""
        return [from_ground(self.series.get((k,), 0)) for k in range(self.truncation + 1)]

    @classmethod
    def along_line(cls, poly: MultiPoly, point: Sequence[RatLike], direction: Sequence[RatLike],
                   truncation: int) -> "TruncatedSeries":
        """Expands ``poly(point + eps * direction)`` in powers of ``eps``."""
        eps = MultiPoly.variable(0, 1)
        images = [MultiPoly.constant(p, 1) + eps * as_rat(v) for p, v in zip(point, direction)]
        restricted = poly.substitute(images)
        return cls._wrap(rs_trunc(restricted.poly, cls._eps(), truncation + 1), truncation)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.truncation, other.truncation)
        return TruncatedSeries._wrap(rs_mul(self.series, other.series, self._eps(), n + 1), n)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise InvalidInputException("Negative powers of truncated series are not supported.")
        if exponent == 0:
            return TruncatedSeries([1], self.truncation)
        return TruncatedSeries._wrap(rs_pow(self.series, int(exponent), self._eps(), self.truncation + 1),
                                     self.truncation)

    def scale(self, factor: RatLike) -> "TruncatedSeries":
        return TruncatedSeries._wrap(self.series.mul_ground(to_ground(factor)), self.truncation)

    def order(self) -> Optional[int]:
        """Lowest order with a nonzero coefficient, or ``None`` if all known coefficients vanish.

        Examples:
            .. doctest::

                >>> (TruncatedSeries([0, 1], 8) ** 3).order()
                3
                >>> (TruncatedSeries([0, 1], 8) ** 9).order() is None
                True
        """
        return min((k for (k,) in self.series.keys()), default=None)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order()}, truncation={self.truncation})"
