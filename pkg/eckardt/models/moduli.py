__all__ = ("ModuliPoint", "weighted_equal", "Q_POINT")
import typing
from fractions import Fraction
from typing import Any, List, Mapping, Sequence, Tuple

from .model_abc import JsonModel
from ..arith.rat import Rat, RatLike, as_rat, format_rat
from ..exceptions import InvalidInputException, JsonSchemaException, RationalParseException


def _bezout(weights: Sequence[int]) -> Tuple[int, List[int]]:
    """Returns ``g = gcd(weights)`` and integers ``c`` with ``sum(c_i * w_i) == g``."""
    g, coeffs = weights[0], [1]
    for w in weights[1:]:
        # extended Euclid on (g, w)
        old_r, r, old_s, s, old_t, t = g, w, 1, 0, 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        coeffs = [c * old_s for c in coeffs] + [old_t]
        g = old_r
    return g, coeffs


class ModuliPoint(JsonModel[Mapping[str, Any]]):
    """A point of the weighted projective space :math:`\\mathbb{P}(1,2,3,4,5)`.

    Used both for the moduli of cubic surfaces (coordinates :math:`I_8 : I_{16} : I_{24} : I_{32} : I_{40}`) and for
    the quotient :math:`\\mathbb{P}^4 / S_5` (coordinates :math:`\\sigma_1 : \\ldots : \\sigma_5`). No canonical
    representative is chosen; equality is :func:`weighted_equal`.

    Attributes:
        coords (Tuple[:class:`~fractions.Fraction`, ...]): The five raw coordinates, not all zero.

    .. testsetup:: *

        from eckardt.models.moduli import ModuliPoint
    """
    __slots__ = ("coords",)

    WEIGHTS: typing.ClassVar[Tuple[int, ...]] = (1, 2, 3, 4, 5)
    """Weight of each coordinate: scaling by :math:`\\lambda` multiplies coordinate ``i`` by
    :math:`\\lambda^{w_i}`."""

    def __init__(self, coords: Sequence[RatLike]):
        if len(coords) != len(ModuliPoint.WEIGHTS):
            raise InvalidInputException(f"A moduli point has 5 coordinates, got {len(coords)}.")
        values = tuple(as_rat(c) for c in coords)
        if not any(values):
            raise InvalidInputException("A weighted projective point cannot have all coordinates zero.")
        self.coords: Tuple[Rat, ...] = values

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        """Builds a point from ``{"moduli": ["I8", ..., "I40"], "weights": [1, 2, 3, 4, 5]}`` (weights optional).

        Raises:
            :exc:`JsonSchemaException`: If the data does not have that shape, or declares other weights.
        """
        try:
            weights = tuple(json_data.get("weights", ModuliPoint.WEIGHTS))
            coords = [as_rat(c) for c in json_data["moduli"]]
        except (TypeError, KeyError, AttributeError, RationalParseException) as e:
            raise JsonSchemaException("Unexpected moduli point JSON data received.") from e
        if weights != ModuliPoint.WEIGHTS:
            raise JsonSchemaException(f"Unsupported weights {weights}.")
        return cls(coords)

    def to_json_data(self):
        return {"moduli": [format_rat(c) for c in self.coords], "weights": list(ModuliPoint.WEIGHTS)}

    def scaled(self, factor: RatLike) -> "ModuliPoint":
        """Applies the weighted scaling :math:`x_i \\mapsto \\lambda^{w_i} x_i`.

        Examples:
            .. doctest::

                >>> ModuliPoint([1, 2, 3, 4, 5]).scaled(2).coords == ModuliPoint([2, 8, 24, 64, 160]).coords
                True
        """
        factor = as_rat(factor)
        if not factor:
            raise InvalidInputException("Weighted scaling by zero.")
        return ModuliPoint([c * factor ** w for c, w in zip(self.coords, ModuliPoint.WEIGHTS)])

    @property
    def zero_pattern(self) -> Tuple[bool, ...]:
        return tuple(not c for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ModuliPoint):
            return NotImplemented
        return weighted_equal(self, other)

    def __hash__(self):
        return hash(self.zero_pattern)

    def __str__(self):
        return "(" + ":".join(format_rat(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ModuliPoint({','.join(format_rat(c) for c in self.coords)})"


def weighted_equal(p: ModuliPoint, q: ModuliPoint) -> bool:
    """Decides equality in :math:`\\mathbb{P}(1,2,3,4,5)`, i.e. whether :math:`q_i = \\lambda^{w_i} p_i` for some
    nonzero complex :math:`\\lambda`, without computing :math:`\\lambda`.

    The zero patterns must agree and every pair of nonzero coordinates must satisfy the cross-power identity
    :math:`p_i^{w_j} q_j^{w_i} = p_j^{w_i} q_i^{w_j}`. The pairwise identities leave a root-of-unity ambiguity when
    the weights in play share a factor (e.g. :math:`(0:1:0:1:0)` against :math:`(0:1:0:-1:0)`), so the ratios are
    also required to be powers of the single rational :math:`\\mu = \\lambda^g`, with :math:`g` the gcd of those
    weights, found through Bezout coefficients.

    Examples:
        .. testsetup::

            from eckardt.models.moduli import ModuliPoint, weighted_equal
        .. doctest::

            >>> weighted_equal(ModuliPoint([1, 2, 3, 4, 5]), ModuliPoint([2, 8, 24, 64, 160]))
            True
            >>> weighted_equal(ModuliPoint([1, 0, 0, 0, 0]), ModuliPoint([3, 0, 0, 0, 0]))
            True
            >>> weighted_equal(ModuliPoint([1, 0, 0, 0, 0]), ModuliPoint([1, 1, 0, 0, 0]))
            False
    """
    if p.zero_pattern != q.zero_pattern:
        return False
    weights = ModuliPoint.WEIGHTS
    support = [i for i, c in enumerate(p.coords) if c]
    for a, i in enumerate(support):
        for j in support[a + 1:]:
            if p.coords[i] ** weights[j] * q.coords[j] ** weights[i] \
                    != p.coords[j] ** weights[i] * q.coords[i] ** weights[j]:
                return False
    ratios = [q.coords[i] / p.coords[i] for i in support]
    g, bezout = _bezout([weights[i] for i in support])
    mu = Fraction(1)
    for ratio, c in zip(ratios, bezout):
        mu *= ratio ** c
    return all(mu ** (weights[i] // g) == ratio for i, ratio in zip(support, ratios))


Q_POINT = ModuliPoint([1, 0, 0, 0, 0])
"""The point Q = (1:0:0:0:0), image of every degenerate Sylvester form outside the base locus."""
