__all__ = ("LinearComponent",)
import typing
from fractions import Fraction
from typing import Any, List, Mapping, Sequence, Tuple

from .enums import ComponentKind
from .model_abc import JsonModel
from .sylvester import SylvesterPoint
from ..arith.multipoly import MultiPoly
from ..arith.rat import Rat, RatLike, as_rat, format_rat
from ..exceptions import InvalidInputException, JsonSchemaException


class LinearComponent(JsonModel[Mapping[str, Any]]):
    """A linear subspace of :math:`\\mathbb{P}^4` of one of the three kinds making up the singular locus of the
    Eckardt hypersurface, together with an exact linear parametrization.

    =============  =========================================  ==========  ==============================
    kind           equations                                  parameters  parametrization
    =============  =========================================  ==========  ==============================
    Hyperplane(i)  :math:`a_i = 0`                            4           the other coordinates, in order
    PairPair       :math:`a_i = a_j,\\ a_k = a_l`              3           :math:`(t_0, t_0, t_1, t_1, t_2)` up to order
    Triple         :math:`a_i = a_j = a_k`                    3           :math:`(t_0, t_0, t_0, t_1, t_2)` up to order
    =============  =========================================  ==========  ==============================

    Indices are normalized: PairPair has ``i < j``, ``k < l`` and ``i < k``; Triple has ``i < j < k``.

    Attributes:
        kind (:class:`~.ComponentKind`): The kind.
        indices (Tuple[:class:`int`, ...]): The normalized index tuple.

    .. testsetup:: *

        from eckardt.models.component import LinearComponent
    """
    __slots__ = ("kind", "indices")

    #: Dimension of the parameter space (projective dimension + 1), per kind.
    PARAMETER_COUNT: typing.ClassVar[Mapping[ComponentKind, int]] = {
        ComponentKind.HYPERPLANE: 4, ComponentKind.PAIR_PAIR: 3, ComponentKind.TRIPLE: 3
    }

    def __init__(self, kind: ComponentKind, indices: Sequence[int]):
        kind = ComponentKind(kind)
        idx = tuple(int(i) for i in indices)
        if any(not 0 <= i <= 4 for i in idx) or len(set(idx)) != len(idx):
            raise InvalidInputException(f"Invalid component indices {idx}.")
        if kind is ComponentKind.HYPERPLANE:
            if len(idx) != 1:
                raise InvalidInputException("A hyperplane component has one index.")
        elif kind is ComponentKind.PAIR_PAIR:
            if len(idx) != 4:
                raise InvalidInputException("A PairPair component has four indices.")
            first, second = sorted(idx[:2]), sorted(idx[2:])
            if first[0] > second[0]:
                first, second = second, first
            idx = (*first, *second)
        else:
            if len(idx) != 3:
                raise InvalidInputException("A Triple component has three indices.")
            idx = tuple(sorted(idx))
        self.kind: ComponentKind = kind
        self.indices: Tuple[int, ...] = idx

    @classmethod
    def hyperplane(cls, i: int) -> "LinearComponent":
        return cls(ComponentKind.HYPERPLANE, (i,))

    @classmethod
    def pair_pair(cls, i: int, j: int, k: int, l: int) -> "LinearComponent":
        """:math:`V(a_i - a_j, a_k - a_l)`, normalized.

        Examples:
            .. doctest::

                >>> LinearComponent.pair_pair(2, 3, 1, 4).indices
                (1, 4, 2, 3)
        """
        return cls(ComponentKind.PAIR_PAIR, (i, j, k, l))

    @classmethod
    def triple(cls, i: int, j: int, k: int) -> "LinearComponent":
        return cls(ComponentKind.TRIPLE, (i, j, k))

    @property
    def parameter_count(self) -> int:
        return LinearComponent.PARAMETER_COUNT[self.kind]

    @property
    def free_indices(self) -> Tuple[int, ...]:
        """Coordinates not constrained by the defining equations."""
        return tuple(i for i in range(5) if i not in self.indices)

    @property
    def parametrization(self) -> List[List[Rat]]:
        """The 5 x ``parameter_count`` matrix ``M`` with ``a = M t``.

        Examples:
            .. doctest::

                >>> [[int(x) for x in row] for row in LinearComponent.triple(0, 1, 2).parametrization]
                [[1, 0, 0], [1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]
        """
        columns: List[Tuple[int, ...]]
        if self.kind is ComponentKind.HYPERPLANE:
            columns = [(i,) for i in self.free_indices]
        elif self.kind is ComponentKind.PAIR_PAIR:
            columns = [self.indices[:2], self.indices[2:], self.free_indices]
        else:
            columns = [self.indices] + [(i,) for i in self.free_indices]
        matrix = [[Fraction(0)] * len(columns) for _ in range(5)]
        for col, rows in enumerate(columns):
            for row in rows:
                matrix[row][col] = Fraction(1)
        return matrix

    @property
    def equations(self) -> List[List[Rat]]:
        """Coefficient rows of the defining linear forms."""
        def form(plus: int, minus: int = -1) -> List[Rat]:
            row = [Fraction(0)] * 5
            row[plus] = Fraction(1)
            if minus >= 0:
                row[minus] = Fraction(-1)
            return row

        if self.kind is ComponentKind.HYPERPLANE:
            return [form(self.indices[0])]
        i, j, k = self.indices[:3]
        if self.kind is ComponentKind.PAIR_PAIR:
            return [form(i, j), form(k, self.indices[3])]
        return [form(i, j), form(k, j)]

    def images(self) -> List[MultiPoly]:
        """The parametrization as one linear :class:`~.MultiPoly` per coordinate, for substitution."""
        return [MultiPoly.linear(row) for row in self.parametrization]

    def point(self, params: Sequence[RatLike]) -> SylvesterPoint:
        if len(params) != self.parameter_count:
            raise InvalidInputException(f"{self.label} takes {self.parameter_count} parameters.")
        values = [as_rat(t) for t in params]
        return SylvesterPoint([sum((m * t for m, t in zip(row, values)), Fraction(0))
                               for row in self.parametrization])

    def contains(self, point: SylvesterPoint) -> bool:
        return all(sum((e * c for e, c in zip(row, point.coeffs)), Fraction(0)) == 0 for row in self.equations)

    def permuted(self, perm: Sequence[int]) -> "LinearComponent":
        return LinearComponent(self.kind, [perm[i] for i in self.indices])

    @property
    def label(self) -> str:
        """Human-readable defining equations, e.g. ``V(a1-a4, a2-a3)``."""
        if self.kind is ComponentKind.HYPERPLANE:
            return f"V(a{self.indices[0]})"
        i, j, k = self.indices[:3]
        if self.kind is ComponentKind.PAIR_PAIR:
            return f"V(a{i}-a{j}, a{k}-a{self.indices[3]})"
        return f"V(a{i}-a{j}, a{k}-a{j})"

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            return cls(ComponentKind._from_json_data(json_data["kind"]), json_data["indices"])
        except (TypeError, KeyError, ValueError) as e:
            raise JsonSchemaException("Unexpected component JSON data received.") from e

    def to_json_data(self):
        return {
            "kind": self.kind.to_json_data(),
            "indices": list(self.indices),
            "label": self.label,
            "parametrization": [[format_rat(x) for x in row] for row in self.parametrization],
        }

    def __eq__(self, other):
        if not isinstance(other, LinearComponent):
            return NotImplemented
        return self.kind is other.kind and self.indices == other.indices

    def __lt__(self, other: "LinearComponent"):
        order = list(LinearComponent.PARAMETER_COUNT)
        return (order.index(self.kind), self.indices) < (order.index(other.kind), other.indices)

    def __hash__(self):
        return hash((self.kind, self.indices))

    def __repr__(self):
        return f"<LinearComponent {self.kind.value} {self.label}>"
