"""Combinatorics of the Sylvester pentahedron.

A nondegenerate Sylvester form :math:`\\sum a_i z_i^3` on :math:`\\sum z_i = 0` restricts to :math:`(a_i - a_j) t^3`
along the vertex :math:`A_{ij}`, so :math:`A_{ij}` lies on the surface exactly when :math:`a_i = a_j`; those vertices
are the Eckardt points. Everything here is exact.

.. testsetup:: *

    from eckardt.pentahedron import *
    from eckardt.models import SylvesterPoint, PentVertex, FamilyTag, CubicForm3
"""
__all__ = (
    "sylvester_form", "to_cubic_p3", "eckardt_vertices", "classify_family", "stabilizer", "eckardt_involutions",
    "contains_line", "collinear", "vertices_on_face", "normal_form", "family_representative", "surface_report",
)
import collections
import itertools
import logging
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .arith.linalg import rank
from .arith.multipoly import MultiPoly
from .arith.rat import Rat, RatLike, as_rat
from .exceptions import CoincidentPointsException, DegenerateFormException, InvalidInputException
from .models.cubic import CubicForm3
from .models.enums import FamilyTag
from .models.permgroup import PermSubgroup
from .models.sylvester import SylvesterPoint
from .models.vertex import PentVertex, all_vertices

logger = logging.getLogger(__name__)

PointLike = Union[PentVertex, Sequence[RatLike]]

_PARTITIONS: Mapping[Tuple[int, ...], FamilyTag] = {
    (1, 1, 1, 1, 1): FamilyTag.GENERIC,
    (2, 2, 1): FamilyTag.S1,
    (3, 1, 1): FamilyTag.S2,
    (3, 2): FamilyTag.C1,
    (4, 1): FamilyTag.C2,
    (5,): FamilyTag.CLEBSCH,
}

_NORMAL_FORMS: Mapping[FamilyTag, Tuple[int, ...]] = {
    # position i of the form takes parameter _NORMAL_FORMS[tag][i]
    FamilyTag.GENERIC: (0, 1, 2, 3, 4),
    FamilyTag.S1: (0, 1, 1, 2, 2),
    FamilyTag.S2: (0, 1, 1, 1, 2),
    FamilyTag.C1: (0, 1, 1, 1, 0),
    FamilyTag.C2: (0, 1, 1, 1, 1),
    FamilyTag.CLEBSCH: (0, 0, 0, 0, 0),
}


def sylvester_form(s: SylvesterPoint) -> MultiPoly:
    """The cubic :math:`\\sum a_i z_i^3` in the five variables :math:`z_0, \\ldots, z_4`."""
    terms = {}
    for i, a in enumerate(s.coeffs):
        exps = [0] * 5
        exps[i] = 3
        terms[tuple(exps)] = a
    return MultiPoly(5, terms)


def to_cubic_p3(s: SylvesterPoint) -> CubicForm3:
    """Eliminates :math:`z_4 = -(x_0 + x_1 + x_2 + x_3)`, returning
    :math:`\\sum_{i \\le 3} a_i x_i^3 - a_4 (x_0 + x_1 + x_2 + x_3)^3`.

    Examples:
        .. doctest::

            >>> to_cubic_p3(SylvesterPoint([1, 1, 1, 1, 0])) == CubicForm3.fermat()
            True
            >>> to_cubic_p3(SylvesterPoint([0, 0, 0, 0, 1])).coefficient((2, 1, 0, 0))
            Fraction(-3, 1)
    """
    images = [MultiPoly.variable(i, 4) for i in range(4)]
    images.append(-MultiPoly.linear([1, 1, 1, 1]))
    cubic = sylvester_form(s).substitute(images)
    # a nonzero Sylvester form never vanishes identically on the hyperplane
    assert not cubic.is_zero
    return CubicForm3(cubic)


def eckardt_vertices(s: SylvesterPoint) -> FrozenSet[PentVertex]:
    """The Eckardt points of a nondegenerate Sylvester form, as pentahedron vertices.

    Args:
        s (:class:`~.SylvesterPoint`): A form with every coefficient nonzero.

    Returns:
        FrozenSet[:class:`~.PentVertex`]: :math:`\\{A_{ij} : a_i = a_j\\}`.

    Raises:
        :exc:`DegenerateFormException`: If some coefficient is zero. The pentahedron degenerates there; count
            with :func:`eckardt.lines.eckardt_numeric` instead.

    Examples:
        .. doctest::

            >>> sorted(v.label for v in eckardt_vertices(SylvesterPoint([7, 3, 3, 5, 5])))
            ['A12', 'A34']
            >>> len(eckardt_vertices(SylvesterPoint([1, 1, 1, 1, 1])))
            10
    """
    if s.is_degenerate:
        raise DegenerateFormException(
            f"{s} is a degenerate Sylvester form; use the numeric detector (eckardt --mode numeric) instead."
        )
    return frozenset(v for v in all_vertices() if s.coeffs[v.pair[0]] == s.coeffs[v.pair[1]])


def classify_family(s: SylvesterPoint) -> FamilyTag:
    """Reads the family off the multiset of coefficient values.

    Examples:
        .. doctest::

            >>> classify_family(SylvesterPoint([2, 9, 9, 9, 2]))
            <FamilyTag.C1: 'C1'>
            >>> classify_family(SylvesterPoint([1, 1, 1, 1, 0]))
            <FamilyTag.DEGENERATE: 'Degenerate'>
    """
    if s.is_degenerate:
        return FamilyTag.DEGENERATE
    partition = tuple(sorted(collections.Counter(s.coeffs).values(), reverse=True))
    return _PARTITIONS[partition]


def stabilizer(s: SylvesterPoint) -> PermSubgroup:
    """All coordinate permutations fixing ``s`` as a projective point.

    Examples:
        .. doctest::

            >>> g = stabilizer(SylvesterPoint([1, 2, 2, 3, 3]))
            >>> g.order, g.is_abelian, g.element_order_histogram()
            (4, True, {1: 1, 2: 3})
            >>> stabilizer(SylvesterPoint([1, 1, 1, 1, 1])).order
            120
    """
    return PermSubgroup(p for p in itertools.permutations(range(5)) if s.permuted(p) == s)


def eckardt_involutions(s: SylvesterPoint) -> int:
    """Number of transpositions in :func:`stabilizer`.

    The transposition of :math:`z_i` and :math:`z_j` is the harmonic homology attached to the Eckardt point
    :math:`A_{ij}`, so on nondegenerate forms this equals ``len(eckardt_vertices(s))``.
    """
    return len(stabilizer(s).transpositions())


def _coordinates(point: PointLike) -> List[Rat]:
    if isinstance(point, PentVertex):
        return list(point.coordinates)
    return [as_rat(x) for x in point]


def contains_line(surface: Union[CubicForm3, SylvesterPoint], p: PointLike, q: PointLike) -> bool:
    """Whether the line joining two points lies on a surface.

    The parametrization :math:`s P + t Q` is substituted into the form and the resulting binary cubic is checked to
    vanish identically.

    Args:
        surface: A cubic in :math:`\\mathbb{P}^3`, or a Sylvester form; for the latter the points live in
            :math:`\\mathbb{P}^4` and must satisfy :math:`\\sum z_i = 0`.
        p: First point (a :class:`~.PentVertex` is accepted for Sylvester forms).
        q: Second point.

    Raises:
        :exc:`CoincidentPointsException`: If the points are proportional.
        :exc:`InvalidInputException`: If a point has the wrong length or leaves :math:`\\sum z_i = 0`.

    Examples:
        .. doctest::

            >>> contains_line(SylvesterPoint([7, 3, 3, 5, 5]), PentVertex(1, 2), PentVertex(3, 4))
            True
            >>> contains_line(SylvesterPoint([7, 3, 3, 3, 5]), PentVertex(1, 2), PentVertex(1, 3))
            False
    """
    if isinstance(surface, SylvesterPoint):
        form, nvars = sylvester_form(surface), 5
    else:
        form, nvars = surface.poly, 4
    first, second = _coordinates(p), _coordinates(q)
    for point in (first, second):
        if len(point) != nvars:
            raise InvalidInputException(f"Expected a point with {nvars} coordinates, got {len(point)}.")
        if nvars == 5 and sum(point):
            raise InvalidInputException("Points of a Sylvester form must lie on the hyperplane sum(z) = 0.")
    if rank([first, second]) < 2:
        raise CoincidentPointsException("A line needs two distinct points.")
    images = [MultiPoly.linear([x, y]) for x, y in zip(first, second)]
    restricted = form.substitute(images)
    logger.debug("Restriction of %s to the line: %s", form, restricted)
    return restricted.is_zero


def collinear(points: Sequence[PointLike]) -> bool:
    """Whether three or more pairwise distinct projective points lie on one line.

    Raises:
        :exc:`CoincidentPointsException`: If fewer than three points are given or two of them coincide.

    Examples:
        .. doctest::

            >>> collinear([PentVertex(1, 2), PentVertex(1, 3), PentVertex(2, 3)])
            True
            >>> collinear([PentVertex(1, 2), PentVertex(3, 4), PentVertex(0, 1)])
            False
    """
    if len(points) < 3:
        raise CoincidentPointsException(f"Collinearity needs at least 3 points, got {len(points)}.")
    rows = [_coordinates(p) for p in points]
    for first, second in itertools.combinations(rows, 2):
        if rank([first, second]) < 2:
            raise CoincidentPointsException("Collinearity test received coincident points.")
    return rank(rows) == 2


def vertices_on_face(vertices: Iterable[PentVertex], k: int) -> List[PentVertex]:
    """The given vertices lying on the face :math:`\\pi_k`, sorted."""
    if not 0 <= k < SylvesterPoint.SIZE:
        raise InvalidInputException(f"Face index {k} out of range.")
    return sorted(v for v in vertices if v.on_face(k))


def normal_form(tag: FamilyTag, params: Sequence[RatLike]) -> SylvesterPoint:
    """Builds the family's representative form from its free parameters.

    ============  ==============  ==========
    Family        Form            Parameters
    ============  ==============  ==========
    Generic       (a,b,c,d,e)     5
    S1            (a,b,b,c,c)     3
    S2            (a,b,b,b,c)     3
    C1            (a,b,b,b,a)     2
    C2            (a,b,b,b,b)     2
    Clebsch       (a,a,a,a,a)     1
    Degenerate    (a,b,c,d,0)     4
    ============  ==============  ==========

    Raises:
        :exc:`InvalidInputException`: On a wrong parameter count.

    Examples:
        .. doctest::

            >>> normal_form(FamilyTag.S2, [1, 2, 3])
            SylvesterPoint(1,2,2,2,3)
    """
    values = [as_rat(x) for x in params]
    if tag is FamilyTag.DEGENERATE:
        slots: Tuple[Optional[int], ...] = (0, 1, 2, 3, None)
    else:
        slots = _NORMAL_FORMS[tag]
    needed = len({i for i in slots if i is not None})
    if len(values) != needed:
        raise InvalidInputException(f"Family {tag.value} takes {needed} parameters, got {len(values)}.")
    return SylvesterPoint([Fraction(0) if i is None else values[i] for i in slots])


def family_representative(tag: FamilyTag, rng: np.random.Generator, bound: int = 50) -> SylvesterPoint:
    """Draws a member of a family whose parameters are distinct nonzero integers in ``[-bound, bound]``.

    Distinct parameters give exactly the family's pattern of equal coefficients, so
    ``classify_family(family_representative(tag, rng)) is tag``.
    """
    count = 4 if tag is FamilyTag.DEGENERATE else len(set(_NORMAL_FORMS[tag]))
    pool = np.array([x for x in range(-bound, bound + 1) if x])
    drawn = rng.choice(pool, size=count, replace=False)
    return normal_form(tag, [int(x) for x in drawn])


def surface_report(s: SylvesterPoint) -> Dict[str, Any]:
    """Exact pentahedron facts about one surface, ready for JSON output.

    Lists the family, the Eckardt vertices, the stabilizer summary, every collinear triple of Eckardt vertices and
    every join of two Eckardt vertices with disjoint index pairs (each with whether the line lies on the surface), and
    the faces holding all Eckardt vertices.
    """
    report: Dict[str, Any] = {
        "family": classify_family(s).to_json_data(),
        "stabilizer": stabilizer(s).summary(),
        "involutions": eckardt_involutions(s),
    }
    if s.is_degenerate:
        return report
    vertices = sorted(eckardt_vertices(s))
    report["eckardt_vertices"] = [v.to_json_data() for v in vertices]
    report["count"] = len(vertices)
    report["collinear_triples"] = [
        {"vertices": [v.label for v in triple], "line_in_surface": contains_line(s, triple[0], triple[1])}
        for triple in itertools.combinations(vertices, 3) if collinear(triple)
    ]
    report["disjoint_joins"] = [
        {"vertices": [v.label, w.label], "line_in_surface": contains_line(s, v, w)}
        for v, w in itertools.combinations(vertices, 2) if not set(v.pair) & set(w.pair)
    ]
    report["common_faces"] = [k for k in range(5) if vertices and len(vertices_on_face(vertices, k)) == len(vertices)]
    return report
