__all__ = ("PentVertex", "all_vertices")
import itertools
from fractions import Fraction
from typing import Any, List, Mapping, Tuple

from .model_abc import JsonModel
from ..arith.rat import Rat, format_rat
from ..exceptions import InvalidInputException, JsonSchemaException


class PentVertex(JsonModel[Mapping[str, Any]]):
    """A vertex :math:`A_{ij}` of the Sylvester pentahedron: the point with :math:`z_i = 1`, :math:`z_j = -1` and
    the other coordinates zero, which is where the three faces :math:`\\pi_k` (:math:`k \\notin \\{i, j\\}`) meet.

    Attributes:
        pair (Tuple[:class:`int`, :class:`int`]): The index pair ``(i, j)``, ``i < j``.

    .. testsetup:: *

        from eckardt.models.vertex import PentVertex
    """
    __slots__ = ("pair",)

    def __init__(self, i: int, j: int):
        if i == j or not (0 <= i <= 4 and 0 <= j <= 4):
            raise InvalidInputException(f"Invalid vertex index pair ({i}, {j}).")
        self.pair: Tuple[int, int] = (min(i, j), max(i, j))

    @property
    def coordinates(self) -> Tuple[Rat, ...]:
        """Coordinates in :math:`\\mathbb{P}^4`; they always sum to zero.

        Examples:
            .. doctest::

                >>> [int(c) for c in PentVertex(1, 2).coordinates]
                [0, 1, -1, 0, 0]
        """
        i, j = self.pair
        coords = [Fraction(0)] * 5
        coords[i], coords[j] = Fraction(1), Fraction(-1)
        return tuple(coords)

    @property
    def p3_coordinates(self) -> Tuple[Rat, ...]:
        """Coordinates in :math:`\\mathbb{P}^3` after eliminating :math:`z_4 = -(z_0 + z_1 + z_2 + z_3)`."""
        return self.coordinates[:4]

    @property
    def faces(self) -> Tuple[int, ...]:
        """The three faces through this vertex."""
        return tuple(k for k in range(5) if k not in self.pair)

    def on_face(self, k: int) -> bool:
        return k in self.faces

    def permuted(self, perm: Tuple[int, ...]) -> "PentVertex":
        return PentVertex(perm[self.pair[0]], perm[self.pair[1]])

    @property
    def label(self) -> str:
        return f"A{self.pair[0]}{self.pair[1]}"

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            i, j = json_data["pair"]
            return cls(int(i), int(j))
        except (TypeError, KeyError, ValueError) as e:
            raise JsonSchemaException("Unexpected vertex JSON data received.") from e

    def to_json_data(self):
        return {"pair": list(self.pair), "label": self.label, "coords": [format_rat(c) for c in self.coordinates]}

    def __eq__(self, other):
        if not isinstance(other, PentVertex):
            return NotImplemented
        return self.pair == other.pair

    def __lt__(self, other: "PentVertex"):
        return self.pair < other.pair

    def __hash__(self):
        return hash(self.pair)

    def __repr__(self):
        return f"<PentVertex {self.label}>"


def all_vertices() -> List[PentVertex]:
    """The 10 vertices, in lexicographic order of their index pairs."""
    return [PentVertex(i, j) for i, j in itertools.combinations(range(5), 2)]
