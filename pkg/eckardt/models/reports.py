__all__ = ("MultiplicityReport",)
import typing
from typing import Any, List, Mapping, Optional, Sequence, Tuple

from .model_abc import JsonModel
from .sylvester import SylvesterPoint
from ..exceptions import JsonSchemaException


class MultiplicityReport(JsonModel[Mapping[str, Any]]):
    """Local structure of the Eckardt hypersurface :math:`E = V(I_{100})` at one of its points.

    Attributes:
        point (:class:`~.SylvesterPoint`): Where the report was computed.
        vanishing_factors (List[Tuple[:class:`int`, :class:`int`]]): Pairs ``(i, j)``, ``i < j``, whose difference
            form :math:`a_j - a_i` vanishes at the point.
        zero_coordinates (:class:`int`): How many coordinates vanish (each contributes 18 through
            :math:`\\sigma_5^{18}`).
        multiplicity (:class:`int`): Order of vanishing by factor counting,
            ``18 * zero_coordinates + len(vanishing_factors)``.
        ordinary (Optional[:class:`bool`]): Whether the tangent cone is a product of pairwise non-proportional linear
            forms. ``None`` (undefined) when a coordinate vanishes, since the tangent cone is then non-reduced.
        taylor_order (Optional[:class:`int`]): Lowest nonvanishing order of :math:`I_{100}(p + \\varepsilon v)`,
            agreed upon by every sampled direction; ``None`` if the directions disagreed.
        direction_orders (List[Optional[:class:`int`]]): The order found along each sampled direction.
    """
    __slots__ = ("point", "vanishing_factors", "zero_coordinates", "multiplicity", "ordinary", "taylor_order",
                 "direction_orders")

    TAYLOR_TRUNCATION: typing.ClassVar[int] = 8
    """Series truncation for points with no zero coordinate (the largest order expected there is 6)."""

    TAYLOR_DIRECTIONS: typing.ClassVar[int] = 3
    """Number of random directions the Taylor oracle expands along."""

    def __init__(self, point: SylvesterPoint, *, vanishing_factors: Sequence[Tuple[int, int]],
                 zero_coordinates: int, ordinary: Optional[bool], taylor_order: Optional[int],
                 direction_orders: Sequence[Optional[int]] = ()):
        self.point: SylvesterPoint = point
        self.vanishing_factors: List[Tuple[int, int]] = [tuple(f) for f in vanishing_factors]  # type: ignore
        self.zero_coordinates: int = int(zero_coordinates)
        self.multiplicity: int = 18 * self.zero_coordinates + len(self.vanishing_factors)
        self.ordinary: Optional[bool] = ordinary
        self.taylor_order: Optional[int] = taylor_order
        self.direction_orders: List[Optional[int]] = list(direction_orders)

    @property
    def oracles_agree(self) -> bool:
        return self.taylor_order == self.multiplicity

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            return cls(
                SylvesterPoint._from_json_data(json_data),
                vanishing_factors=[tuple(f) for f in json_data["vanishing_factors"]],
                zero_coordinates=json_data["zero_coordinates"],
                ordinary=json_data["ordinary"],
                taylor_order=json_data["taylor_order"],
                direction_orders=json_data.get("direction_orders", ()),
            )
        except (TypeError, KeyError) as e:
            raise JsonSchemaException("Unexpected multiplicity report JSON data received.") from e

    def to_json_data(self):
        return {
            **self.point.to_json_data(),
            "vanishing_factors": [list(f) for f in self.vanishing_factors],
            "zero_coordinates": self.zero_coordinates,
            "multiplicity": self.multiplicity,
            "ordinary": self.ordinary,
            "taylor_order": self.taylor_order,
            "direction_orders": list(self.direction_orders),
        }

    def __repr__(self):
        return (f"<MultiplicityReport point={self.point} multiplicity={self.multiplicity} "
                f"ordinary={self.ordinary} taylor_order={self.taylor_order}>")
