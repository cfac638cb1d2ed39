__all__ = ("PermSubgroup", "Permutation", "compose", "inverse", "permutation_order", "IDENTITY")
import collections
from typing import Any, Dict, Iterable, Mapping, Tuple

from .model_abc import JsonModel
from ..exceptions import InvalidInputException, JsonSchemaException

Permutation = Tuple[int, ...]
"""A permutation of ``{0, ..., 4}`` in one-line notation: ``perm[i]`` is the image of ``i``."""

IDENTITY: Permutation = (0, 1, 2, 3, 4)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p`` after ``q``: ``i -> p[q[i]]``."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Permutation) -> Permutation:
    result = [0] * len(p)
    for i, image in enumerate(p):
        result[image] = i
    return tuple(result)


def permutation_order(p: Permutation) -> int:
    order, power = 1, p
    identity = tuple(range(len(p)))
    while power != identity:
        power = compose(p, power)
        order += 1
    return order


class PermSubgroup(JsonModel[Mapping[str, Any]]):
    """A subgroup of the symmetric group on five letters, given by its full element list.

    Attributes:
        elements (Tuple[:obj:`Permutation`, ...]): Sorted, duplicate-free element list.

    Raises:
        :exc:`InvalidInputException`: On construction, if the identity is missing or the list is not closed under
            composition and inverses.

    .. testsetup:: *

        from eckardt.models.permgroup import PermSubgroup
    """
    __slots__ = ("elements",)

    def __init__(self, elements: Iterable[Permutation]):
        elems = sorted({tuple(p) for p in elements})
        members = set(elems)
        if IDENTITY not in members:
            raise InvalidInputException("A subgroup must contain the identity.")
        for p in elems:
            if inverse(p) not in members or any(compose(p, q) not in members for q in elems):
                raise InvalidInputException("Element list is not closed under composition and inverses.")
        self.elements: Tuple[Permutation, ...] = tuple(elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_abelian(self) -> bool:
        return all(compose(p, q) == compose(q, p) for p in self.elements for q in self.elements)

    def element_order_histogram(self) -> Dict[int, int]:
        """Maps each element order to how many elements have it.

        Examples:
            .. doctest::

                >>> PermSubgroup([(0, 1, 2, 3, 4), (1, 0, 2, 3, 4)]).element_order_histogram()
                {1: 1, 2: 1}
        """
        counts = collections.Counter(permutation_order(p) for p in self.elements)
        return dict(sorted(counts.items()))

    def transpositions(self) -> Tuple[Permutation, ...]:
        """Elements swapping exactly two letters."""
        return tuple(p for p in self.elements if sum(1 for i, x in enumerate(p) if i != x) == 2)

    def summary(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "abelian": self.is_abelian,
            "element_orders": {str(k): v for k, v in self.element_order_histogram().items()},
        }

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            return cls(tuple(int(x) for x in p) for p in json_data["elements"])
        except (TypeError, KeyError, ValueError) as e:
            raise JsonSchemaException("Unexpected permutation group JSON data received.") from e

    def to_json_data(self):
        return {"elements": [list(p) for p in self.elements], **self.summary()}

    def __contains__(self, perm: Permutation) -> bool:
        return tuple(perm) in self.elements

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"<PermSubgroup order={self.order} abelian={self.is_abelian}>"
