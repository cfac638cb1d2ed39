__all__ = ("CrossValidationReport", "cross_validate")
import logging
from typing import Any, List, Mapping, Optional, Sequence

import numpy as np

from .config import TrackerConfig
from .geometry import EckardtCluster, eckardt_numeric, projective_distance
from .tracker import track_all
from ..exceptions import DegenerateFormException, JsonSchemaException
from ..models.model_abc import JsonModel
from ..models.sylvester import SylvesterPoint
from ..models.vertex import PentVertex
from ..pentahedron import eckardt_vertices, to_cubic_p3

logger = logging.getLogger(__name__)


class CrossValidationReport(JsonModel[Mapping[str, Any]]):
    """Exact and numeric Eckardt points of one Sylvester surface, side by side.

    Attributes:
        point (:class:`~.SylvesterPoint`): The surface.
        vertices (List[:class:`~.PentVertex`]): Eckardt vertices from the exact criterion, sorted.
        clusters (List[:class:`~.EckardtCluster`]): Eckardt points found among the tracked lines.
        matches (List[Optional[:class:`int`]]): For each vertex, the index of the cluster within ``tol`` of its image
            in :math:`\\mathbb{P}^3`, or ``None``.
        tol (:class:`float`): Matching and clustering radius.
    """
    __slots__ = ("point", "vertices", "clusters", "matches", "tol")

    def __init__(self, point: SylvesterPoint, vertices: Sequence[PentVertex], clusters: Sequence[EckardtCluster],
                 matches: Sequence[Optional[int]], tol: float):
        self.point = point
        self.vertices: List[PentVertex] = sorted(vertices)
        self.clusters: List[EckardtCluster] = list(clusters)
        self.matches: List[Optional[int]] = list(matches)
        self.tol: float = float(tol)

    @property
    def counts_equal(self) -> bool:
        return len(self.vertices) == len(self.clusters)

    @property
    def ok(self) -> bool:
        """Whether the counts agree and every vertex has a distinct matching cluster."""
        matched = [m for m in self.matches if m is not None]
        return self.counts_equal and len(matched) == len(self.vertices) and len(set(matched)) == len(matched)

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            return cls(
                SylvesterPoint._from_json_data(json_data["point"]),
                [PentVertex._from_json_data(v) for v in json_data["exact"]],
                [EckardtCluster._from_json_data(c) for c in json_data["numeric"]],
                json_data["matches"],
                json_data["tol"],
            )
        except (TypeError, KeyError) as e:
            raise JsonSchemaException("Unexpected cross-validation JSON data received.") from e

    def to_json_data(self):
        return {
            "point": self.point.to_json_data(),
            "exact": [v.to_json_data() for v in self.vertices],
            "numeric": [c.to_json_data() for c in self.clusters],
            "exact_count": len(self.vertices),
            "numeric_count": len(self.clusters),
            "matches": list(self.matches),
            "tol": self.tol,
            "ok": self.ok,
        }

    def __repr__(self):
        return (f"<CrossValidationReport point={self.point} exact={len(self.vertices)} "
                f"numeric={len(self.clusters)} ok={self.ok}>")


def _match(vertex: PentVertex, clusters: Sequence[EckardtCluster], tol: float) -> Optional[int]:
    target = np.array([complex(c) for c in vertex.p3_coordinates])
    distances = [projective_distance(target, c.point) for c in clusters]
    if not distances:
        return None
    best = int(np.argmin(distances))
    return best if distances[best] < tol else None


def cross_validate(s: SylvesterPoint, cfg: Optional[TrackerConfig] = None, tol: float = 1e-6) -> CrossValidationReport:
    """Counts the Eckardt points of a Sylvester surface both ways and pairs them up.

    The exact vertices come from :func:`~.eckardt_vertices`; the numeric ones from :func:`~.track_all` followed by
    :func:`~.eckardt_numeric` on :func:`~.to_cubic_p3` of the same point, whose :math:`\\mathbb{P}^3` coordinates are
    the first four pentahedral coordinates. A count mismatch is not raised: the report's ``ok`` flag is false and
    both lists are kept for inspection.

    Raises:
        :exc:`DegenerateFormException`: If ``s`` has a zero coefficient.
        :exc:`TrackingFailureException`: If tracking does not find 27 lines.
    """
    if s.is_degenerate:
        raise DegenerateFormException("cross-validation needs a nondegenerate Sylvester form.")
    vertices = sorted(eckardt_vertices(s))
    cubic = to_cubic_p3(s)
    lines = track_all(cubic, cfg)
    clusters = eckardt_numeric(lines, tol, cubic)
    matches = [_match(v, clusters, tol) for v in vertices]
    report = CrossValidationReport(s, vertices, clusters, matches, tol)
    if report.ok:
        logger.info("Cross-validation of %s: %d Eckardt points both ways.", s, len(vertices))
    else:
        logger.warning("Cross-validation of %s failed: exact %s, numeric %s, matches %s.",
                       s, vertices, clusters, matches)
    return report
