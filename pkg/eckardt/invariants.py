"""Salmon invariants of Sylvester forms and the moduli map.

On a Sylvester form with coefficients :math:`a_0, \\ldots, a_4` and elementary symmetric functions
:math:`\\sigma_1, \\ldots, \\sigma_5` of them, the invariants are

* :math:`I_8 = \\sigma_4^2 - 4 \\sigma_3 \\sigma_5`
* :math:`I_{16} = \\sigma_1 \\sigma_5^3`, :math:`I_{24} = \\sigma_4 \\sigma_5^4`, :math:`I_{32} = \\sigma_2 \\sigma_5^6`,
  :math:`I_{40} = \\sigma_5^8`
* :math:`I_{100} = \\sigma_5^{18} \\prod_{i<j} (a_j - a_i)`

The map :math:`\\Phi: (a_0 : \\ldots : a_4) \\mapsto (I_8 : I_{16} : I_{24} : I_{32} : I_{40})` lands in the weighted
projective space :math:`\\mathbb{P}(1,2,3,4,5)`; it is undefined exactly on :math:`V(\\sigma_4, \\sigma_5)` and its
rational inverse is undefined exactly at Q = (1:0:0:0:0).

.. testsetup:: *

    from eckardt.invariants import *
    from eckardt.models import SylvesterPoint, ModuliPoint
"""
__all__ = (
    "sigma_values", "sigma_vector", "salmon_values", "salmon_invariants", "i100_factored", "i100",
    "weighted_equal", "inverse_map", "base_locus_forward", "maps_to_q", "READING_NOTES", "Q_POINT",
)
import functools
import logging
from typing import Dict, Tuple

from .arith.factored import FactoredPoly
from .arith.multipoly import MultiPoly, elem_sym
from .arith.rat import Rat
from .exceptions import BaseLocusPointException, InverseUndefinedException
from .models.moduli import ModuliPoint, weighted_equal, Q_POINT
from .models.sylvester import SylvesterPoint

logger = logging.getLogger(__name__)

READING_NOTES: Dict[str, str] = {
    "I40": "The published invariant list labels both sigma_2*sigma_5^6 and sigma_5^8 as I_32; the second is read "
           "as I_40 = sigma_5^8, consistent with weight 5 and with I_24^2 - I_8*I_40 in the inverse map.",
    "inverse_order": "The published inverse lists I_24*I_40/sigma_5^12 (= sigma_4) in the third slot and "
                     "(I_24^2 - I_8*I_40)/(4*sigma_5^9) (= sigma_3) in the fourth; the weights force the order "
                     "(sigma_3 third, sigma_4 fourth), which is what is computed.",
}
"""How two apparent misprints in the published formulas are read; echoed by the command line."""


@functools.lru_cache(maxsize=None)
def _sigma_polys() -> Tuple[MultiPoly, ...]:
    return tuple(elem_sym(k) for k in range(1, 6))


def sigma_values(s: SylvesterPoint) -> Tuple[Rat, ...]:
    """The elementary symmetric functions :math:`(\\sigma_1, \\ldots, \\sigma_5)` of the coefficients.

    Examples:
        .. doctest::

            >>> [int(v) for v in sigma_values(SylvesterPoint([1, 2, 3, 4, 5]))]
            [15, 85, 225, 274, 120]
    """
    return tuple(p.evaluate(s.coeffs) for p in _sigma_polys())


def sigma_vector(s: SylvesterPoint) -> ModuliPoint:
    """The image of ``s`` in :math:`\\mathbb{P}^4 / S_5 \\cong \\mathbb{P}(1,2,3,4,5)`, in the coordinates
    :math:`(\\sigma_1 : \\ldots : \\sigma_5)`."""
    return ModuliPoint(sigma_values(s))


def salmon_values(s: SylvesterPoint) -> Tuple[Rat, ...]:
    """The raw tuple :math:`(I_8, I_{16}, I_{24}, I_{32}, I_{40})`, which may be all zero."""
    s1, s2, s3, s4, s5 = sigma_values(s)
    return (
        s4 ** 2 - 4 * s3 * s5,
        s1 * s5 ** 3,
        s4 * s5 ** 4,
        s2 * s5 ** 6,
        s5 ** 8,
    )


def salmon_invariants(s: SylvesterPoint) -> ModuliPoint:
    """Evaluates the moduli map :math:`\\Phi` at a Sylvester point.

    Args:
        s (:class:`~.SylvesterPoint`): The surface.

    Returns:
        :class:`~.ModuliPoint`: :math:`(I_8 : I_{16} : I_{24} : I_{32} : I_{40})`, exactly.

    Raises:
        :exc:`BaseLocusPointException`: If all five invariants vanish (the point lies in the base locus
            :math:`V(\\sigma_4, \\sigma_5)`).

    Examples:
        .. doctest::

            >>> [int(v) for v in salmon_invariants(SylvesterPoint([1, 1, 1, 1, 1])).coords]
            [-15, 5, 5, 10, 1]
            >>> salmon_invariants(SylvesterPoint([1, 2, 3, 4, 0])) == Q_POINT
            True
    """
    values = salmon_values(s)
    if not any(values):
        raise BaseLocusPointException(f"All Salmon invariants vanish at {s}: it is a base-locus point.")
    return ModuliPoint(values)


@functools.lru_cache(maxsize=None)
def i100_factored() -> FactoredPoly:
    """:math:`I_{100}` in factored form, :math:`\\sigma_5^{18} \\prod_{i<j} (a_j - a_i)`.

    The product of differences is the Vandermonde determinant of :math:`a_0, \\ldots, a_4`.
    """
    factors = [(elem_sym(5), 18)]
    for i in range(5):
        for j in range(i + 1, 5):
            row = [0] * 5
            row[j], row[i] = 1, -1
            factors.append((MultiPoly.linear(row), 1))
    return FactoredPoly(5, 1, factors)


def i100(s: SylvesterPoint) -> Rat:
    """Evaluates :math:`I_{100}` at a Sylvester point, factor by factor.

    Examples:
        .. doctest::

            >>> i100(SylvesterPoint([1, 1, 2, 3, 4]))
            Fraction(0, 1)
            >>> i100(SylvesterPoint([1, 2, 3, 4, 5])) == 120 ** 18 * 288
            True
    """
    return i100_factored().evaluate(s.coeffs)


def inverse_map(p: ModuliPoint) -> ModuliPoint:
    """The rational inverse of :math:`\\Phi`, returning :math:`\\sigma`-coordinates.

    Clearing the powers of :math:`\\sigma_5` from the published formula (a weighted rescaling by
    :math:`\\lambda = \\sigma_5^3`) gives the denominator-free representative

    .. math::

        (I_{16} : I_{32} : (I_{24}^2 - I_8 I_{40}) / 4 : I_{24} I_{40} : I_{40}^2)
        = (\\sigma_1 \\sigma_5^3 : \\sigma_2 \\sigma_5^6 : \\sigma_3 \\sigma_5^9 : \\sigma_4 \\sigma_5^{12} :
        \\sigma_5^{16}).

    Raises:
        :exc:`InverseUndefinedException`: If :math:`I_{40} = 0`; the base point of the inverse is Q.

    Examples:
        .. doctest::

            >>> inverse_map(salmon_invariants(SylvesterPoint([1, 1, 1, 1, 1]))) == ModuliPoint([5, 10, 10, 5, 1])
            True
    """
    i8, i16, i24, i32, i40 = p.coords
    if not i40:
        raise InverseUndefinedException(f"inverse undefined at Q: I40 vanishes at {p} (base point Q=(1:0:0:0:0)).")
    return ModuliPoint((i16, i32, (i24 ** 2 - i8 * i40) / 4, i24 * i40, i40 ** 2))


def base_locus_forward(s: SylvesterPoint) -> bool:
    """``True`` if ``s`` lies in :math:`V(\\sigma_4, \\sigma_5)`, the base locus of :math:`\\Phi`.

    This happens exactly when all five Salmon invariants vanish.

    Examples:
        .. doctest::

            >>> base_locus_forward(SylvesterPoint([1, 1, 1, 1, 1]))
            False
            >>> base_locus_forward(SylvesterPoint([0, 0, 1, 1, 1]))
            True
    """
    s4, s5 = sigma_values(s)[3:]
    return s4 == 0 and s5 == 0


def maps_to_q(s: SylvesterPoint) -> bool:
    """``True`` if :math:`\\Phi(s)` is defined and weighted-equal to Q."""
    if base_locus_forward(s):
        return False
    return weighted_equal(salmon_invariants(s), Q_POINT)
