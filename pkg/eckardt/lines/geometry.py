"""Complex lines in :math:`\\mathbb{P}^3`, their intersections, and Eckardt points as concurrent triples."""
__all__ = (
    "projective_distance", "projective_distance_matrix", "normalize_point", "ComplexLine", "EckardtCluster",
    "eckardt_numeric",
)
import collections
import itertools
import logging
import typing
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sklearn.cluster import DBSCAN

from ..exceptions import CoincidentPointsException, InvalidInputException, JsonSchemaException, NumericException
from ..models.cubic import CubicForm3
from ..models.model_abc import JsonModel

logger = logging.getLogger(__name__)

_PLUCKER_PAIRS: Tuple[Tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _complex_json(values: np.ndarray) -> List[List[float]]:
    return [[float(v.real), float(v.imag)] for v in values]


def _complex_from_json(data: Sequence[Sequence[float]]) -> np.ndarray:
    return np.array([complex(re, im) for re, im in data])


def normalize_point(x: np.ndarray) -> np.ndarray:
    """Scales to unit norm and rotates the phase so the largest-modulus entry is real and positive."""
    x = np.asarray(x, dtype=complex)
    x = x / np.linalg.norm(x)
    lead = x[np.argmax(np.abs(x))]
    return x * (abs(lead) / lead)


def projective_distance(x: np.ndarray, y: np.ndarray) -> float:
    """:math:`\\sqrt{1 - |\\langle x, y \\rangle|^2}` for unit vectors; zero exactly for proportional vectors."""
    overlap = abs(np.vdot(x, y)) / (np.linalg.norm(x) * np.linalg.norm(y))
    return float(np.sqrt(max(0.0, 1.0 - overlap ** 2)))


def projective_distance_matrix(points: np.ndarray) -> np.ndarray:
    """All pairwise :func:`projective_distance` values between the rows of ``points``."""
    unit = points / np.linalg.norm(points, axis=1, keepdims=True)
    overlap = np.abs(unit.conj() @ unit.T)
    return np.sqrt(np.clip(1.0 - overlap ** 2, 0.0, None))


def _cubic_residual(cubic: CubicForm3, point: np.ndarray) -> float:
    coeffs = np.array(cubic.complex_coefficients())
    value = cubic.poly.evaluate(list(normalize_point(point)))
    return float(abs(value) / np.abs(coeffs).max())


class ComplexLine(JsonModel[Mapping[str, Any]]):
    """A line in complex :math:`\\mathbb{P}^3`.

    Attributes:
        points (Tuple[:class:`numpy.ndarray`, :class:`numpy.ndarray`]): Two spanning points, unit-normalized and
            orthogonal.
        plucker (:class:`numpy.ndarray`): Plücker coordinates :math:`p_{ij} = P_i Q_j - P_j Q_i` in the order
            ``01, 02, 03, 12, 13, 23``, normalized by :func:`normalize_point`.
        residual (Optional[:class:`float`]): Norm of the normalized restriction of the cubic it was found on.

    Raises:
        :exc:`CoincidentPointsException`: If the two points are proportional.

    .. testsetup:: *

        import numpy as np
        from eckardt.lines import ComplexLine
    """
    __slots__ = ("points", "plucker", "residual")

    PLUCKER_TOLERANCE: typing.ClassVar[float] = 1e-9
    """Largest Plücker quadric residual of a valid line."""

    def __init__(self, first: Sequence[complex], second: Sequence[complex], *, residual: Optional[float] = None):
        p = np.asarray(first, dtype=complex)
        q = np.asarray(second, dtype=complex)
        if p.shape != (4,) or q.shape != (4,):
            raise InvalidInputException("Line points must have 4 coordinates.")
        # Gram-Schmidt keeps the spanning pair well conditioned
        p = p / np.linalg.norm(p)
        q = q - np.vdot(p, q) * p
        if np.linalg.norm(q) < 1e-12:
            raise CoincidentPointsException("A line needs two non-proportional points.")
        q = q / np.linalg.norm(q)
        self.points: Tuple[np.ndarray, np.ndarray] = (p, q)
        raw = np.array([p[i] * q[j] - p[j] * q[i] for i, j in _PLUCKER_PAIRS])
        self.plucker: np.ndarray = normalize_point(raw)
        self.residual: Optional[float] = residual

    @property
    def plucker_residual(self) -> float:
        """:math:`|p_{01} p_{23} - p_{02} p_{13} + p_{03} p_{12}|`.

        Examples:
            .. doctest::

                >>> ComplexLine([1, -1, 0, 0], [0, 0, 1, -1]).plucker_residual < 1e-12
                True
        """
        p01, p02, p03, p12, p13, p23 = self.plucker
        return float(abs(p01 * p23 - p02 * p13 + p03 * p12))

    def distance(self, other: "ComplexLine") -> float:
        """Projective distance of the Plücker vectors."""
        return projective_distance(self.plucker, other.plucker)

    def restriction(self, tensor: np.ndarray) -> np.ndarray:
        """Coefficients of the binary cubic :math:`f(uP + vQ)` for a symmetric cubic tensor."""
        p, q = self.points
        return np.array([
            np.einsum("ijk,i,j,k->", tensor, p, p, p),
            3 * np.einsum("ijk,i,j,k->", tensor, p, p, q),
            3 * np.einsum("ijk,i,j,k->", tensor, p, q, q),
            np.einsum("ijk,i,j,k->", tensor, q, q, q),
        ])

    def intersection(self, other: "ComplexLine", tol: float) -> Optional[np.ndarray]:
        """The common point of two lines, or ``None`` when their closest approach exceeds ``tol``.

        The point is :math:`aP_1 + bQ_1` for the null vector :math:`(a, b, c, d)` of
        :math:`[P_1\\ Q_1\\ -P_2\\ -Q_2]`, read off the smallest singular value.
        """
        matrix = np.column_stack([self.points[0], self.points[1], -other.points[0], -other.points[1]])
        _, singular, vh = np.linalg.svd(matrix)
        if singular[-1] >= tol:
            return None
        a, b = vh[-1].conj()[:2]
        return normalize_point(a * self.points[0] + b * self.points[1])

    def contains(self, point: np.ndarray, tol: float) -> bool:
        """Whether ``point`` lies within projective distance ``tol`` of the line."""
        x = np.asarray(point, dtype=complex)
        x = x / np.linalg.norm(x)
        p, q = self.points
        projection = np.vdot(p, x) * p + np.vdot(q, x) * q
        return float(np.linalg.norm(x - projection)) < tol

    def sort_key(self) -> Tuple[float, ...]:
        return tuple(np.round(np.concatenate([self.plucker.real, self.plucker.imag]), 8))

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            first, second = (_complex_from_json(p) for p in json_data["points"])
            return cls(first, second, residual=json_data.get("residual"))
        except (TypeError, KeyError, ValueError) as e:
            raise JsonSchemaException("Unexpected line JSON data received.") from e

    def to_json_data(self):
        return {
            "points": [_complex_json(p) for p in self.points],
            "plucker": _complex_json(self.plucker),
            "residual": self.residual,
        }

    def __repr__(self):
        return f"<ComplexLine plucker={np.round(self.plucker, 4)}>"


class EckardtCluster(JsonModel[Mapping[str, Any]]):
    """A point where three of the 27 lines meet.

    Attributes:
        point (:class:`numpy.ndarray`): The point, normalized by :func:`normalize_point`.
        indices (Tuple[:class:`int`, ...]): Indices of the incident lines, sorted; at least 3.
        spread (:class:`float`): Largest projective distance between the pairwise intersections merged into it.
        residual (Optional[:class:`float`]): :math:`|f|` at the point, with the cubic scaled to unit largest
            coefficient.
    """
    __slots__ = ("point", "indices", "spread", "residual")

    def __init__(self, point: np.ndarray, indices: Sequence[int], spread: float, residual: Optional[float] = None):
        if len(set(indices)) < 3:
            raise InvalidInputException("An Eckardt point lies on at least three lines.")
        self.point: np.ndarray = normalize_point(point)
        self.indices: Tuple[int, ...] = tuple(sorted(set(indices)))
        self.spread: float = float(spread)
        self.residual: Optional[float] = residual

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            return cls(_complex_from_json(json_data["point"]), json_data["lines"], json_data["spread"],
                       json_data.get("residual"))
        except (TypeError, KeyError, ValueError) as e:
            raise JsonSchemaException("Unexpected Eckardt cluster JSON data received.") from e

    def to_json_data(self):
        return {"point": _complex_json(self.point), "lines": list(self.indices), "spread": self.spread,
                "residual": self.residual}

    def __repr__(self):
        return f"<EckardtCluster lines={self.indices} point={np.round(self.point, 4)}>"


def eckardt_numeric(lines: Sequence[ComplexLine], tol: float,
                    cubic: Optional[CubicForm3] = None) -> List[EckardtCluster]:
    """Finds the Eckardt points among 27 lines.

    Pairwise intersections (closest approach below ``tol``) are clustered by single linkage at radius ``tol``; clusters
    gathering at least three lines are Eckardt points.

    Args:
        lines: The 27 lines of a smooth cubic surface.
        tol: Intersection and clustering radius.
        cubic: When given, each cluster records the cubic's value at its point.

    Raises:
        :exc:`InvalidInputException`: If not exactly 27 lines are given, or ``tol`` is not positive.
        :exc:`NumericException`: If a cluster gathers more than three lines, which no point of a smooth cubic
            surface does.
    """
    if len(lines) != 27:
        raise InvalidInputException(f"Eckardt detection needs the 27 lines, got {len(lines)}.")
    if not tol > 0:
        raise InvalidInputException("The clustering tolerance must be positive.")

    meetings: List[Tuple[np.ndarray, int, int]] = []
    for i, j in itertools.combinations(range(len(lines)), 2):
        point = lines[i].intersection(lines[j], tol)
        if point is not None:
            meetings.append((point, i, j))
    logger.debug("%d intersecting line pairs.", len(meetings))

    groups: Dict[int, List[int]] = collections.defaultdict(list)
    if meetings:
        # min_samples=1 makes every meeting a core point, so DBSCAN reduces to single linkage at radius tol
        labels = DBSCAN(eps=tol, min_samples=1, metric="precomputed").fit_predict(
            projective_distance_matrix(np.array([m[0] for m in meetings]))
        )
        for k, label in enumerate(labels):
            groups[int(label)].append(k)

    clusters: List[EckardtCluster] = []
    for members in groups.values():
        incident = {idx for k in members for idx in meetings[k][1:]}
        if len(incident) < 3:
            continue
        if len(incident) > 3:
            raise NumericException(
                f"{len(incident)} lines meet at one point; a smooth cubic surface has at most 3. "
                f"The tolerance {tol} may be too coarse."
            )
        points = [meetings[k][0] for k in members]
        reference = points[0]
        aligned = [x * (np.vdot(x, reference) / abs(np.vdot(x, reference))) for x in points]
        center = normalize_point(np.mean(aligned, axis=0))
        spread = max((projective_distance(x, y) for x, y in itertools.combinations(points, 2)), default=0.0)
        residual = _cubic_residual(cubic, center) if cubic is not None else None
        clusters.append(EckardtCluster(center, sorted(incident), spread, residual))

    for first, second in itertools.combinations(clusters, 2):
        if projective_distance(first.point, second.point) < 10 * tol:
            logger.warning("Ill-conditioned clustering: Eckardt points %s and %s are within 10*tol; keeping both.",
                           first, second)
    clusters.sort(key=lambda c: c.indices)
    logger.info("%d Eckardt points among the 27 lines.", len(clusters))
    return clusters
