"""Total-degree homotopy continuation for the 27 lines.

The homotopy :math:`H(z, t) = (1 - t) F(z) + t \\gamma G(z)` joins the chart system :math:`F` (at ``t = 0``) to the
start system :math:`G = (p^3 - 1, q^3 - 1, r^3 - 1, s^3 - 1)` (at ``t = 1``), whose 81 solutions are the tuples of cube
roots of unity. All paths advance together as one batch; each keeps its own ``t`` and step, and each row of a batched
solve depends only on its own path, so results do not depend on path order.
"""
__all__ = ("PathResult", "start_solutions", "track_paths", "track_all")
import itertools
import logging
from typing import Any, Dict, List, Optional

import numpy as np

from .config import TrackerConfig
from .geometry import ComplexLine
from .system import LineSystem, random_chart
from ..exceptions import SingularSurfaceException, TrackingFailureException
from ..models.cubic import CubicForm3
from ..models.enums import PathStatus

logger = logging.getLogger(__name__)


class PathResult:
    """Outcome of one homotopy path.

    Attributes:
        index (:class:`int`): Position of the start solution.
        status (:class:`~.PathStatus`): Final state.
        endpoint (:class:`numpy.ndarray`): Last chart point reached.
        t (:class:`float`): Last homotopy parameter reached.
        steps (:class:`int`): Accepted steps.
        residual (:class:`float`): Normalized :math:`\\|F\\|` at the endpoint.
        condition (:class:`float`): Condition number of the Jacobian of :math:`F` at the endpoint.
    """
    __slots__ = ("index", "status", "endpoint", "t", "steps", "residual", "condition")

    def __init__(self, index: int, status: PathStatus, endpoint: np.ndarray, t: float, steps: int,
                 residual: float = float("nan"), condition: float = float("nan")):
        self.index = index
        self.status = status
        self.endpoint = endpoint
        self.t = t
        self.steps = steps
        self.residual = residual
        self.condition = condition

    def diagnostics(self) -> Dict[str, Any]:
        return {"path": self.index, "status": self.status.to_json_data(), "t": self.t, "steps": self.steps,
                "residual": self.residual, "condition": self.condition}

    def __repr__(self):
        return f"<PathResult {self.index} {self.status.value} t={self.t:.3g} steps={self.steps}>"


def start_solutions() -> np.ndarray:
    """The 81 solutions of :math:`G = 0`, shape ``(81, 4)``."""
    roots = np.exp(2j * np.pi * np.arange(3) / 3)
    return np.array(list(itertools.product(roots, repeat=4)))


def _solve(matrices: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Row-wise solution of ``matrices[n] @ x[n] = rhs[n]``; singular rows fall back to least squares."""
    try:
        return np.linalg.solve(matrices, rhs[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(rhs)
        for n in range(rhs.shape[0]):
            out[n] = np.linalg.lstsq(matrices[n], rhs[n], rcond=None)[0]
        return out


class _Homotopy:
    __slots__ = ("system", "gamma")

    def __init__(self, system: LineSystem, gamma: complex):
        self.system = system
        self.gamma = gamma

    def value(self, z: np.ndarray, t: np.ndarray) -> np.ndarray:
        return (1 - t)[:, None] * self.system.evaluate(z) + (t * self.gamma)[:, None] * (z ** 3 - 1)

    def dz(self, z: np.ndarray, t: np.ndarray) -> np.ndarray:
        start = np.zeros(z.shape + (4,), dtype=complex)
        idx = np.arange(4)
        start[:, idx, idx] = 3 * z ** 2
        return (1 - t)[:, None, None] * self.system.jacobian(z) + (t * self.gamma)[:, None, None] * start

    def dt(self, z: np.ndarray) -> np.ndarray:
        return self.gamma * (z ** 3 - 1) - self.system.evaluate(z)


def _normalized_residual(system: LineSystem, z: np.ndarray) -> np.ndarray:
    return np.linalg.norm(system.evaluate(z), axis=1) / (1 + np.linalg.norm(z, axis=1)) ** 3


def _polish(system: LineSystem, z: np.ndarray, cfg: TrackerConfig, iterations: int = 8) -> np.ndarray:
    """Newton's method on :math:`F` alone, by least squares so that singular endpoints do not break the batch."""
    z = z.copy()
    for _ in range(iterations):
        values = system.evaluate(z)
        if np.all(np.linalg.norm(values, axis=1) < cfg.corrector_tol):
            break
        jac = system.jacobian(z)
        for n in range(z.shape[0]):
            if np.linalg.norm(values[n]) >= cfg.corrector_tol and np.all(np.isfinite(values[n])):
                z[n] = z[n] - np.linalg.lstsq(jac[n], values[n], rcond=None)[0]
    return z


def track_paths(system: LineSystem, cfg: TrackerConfig, starts: Optional[np.ndarray] = None) -> List[PathResult]:
    """Tracks the first ``cfg.paths`` start solutions (of ``starts``, or of :func:`start_solutions`) from ``t = 1`` to
    ``t = 0``.

    Each step is an Euler prediction along :math:`dz/dt = -H_z^{-1} H_t` followed by at most
    ``cfg.max_newton_iterations`` Newton corrections at the new ``t``. Accepted steps double the step size (up to
    ``cfg.initial_step``) after three successes in a row; rejected steps halve it. A path ends when it reaches
    ``t = 0``, when its norm passes ``cfg.divergence_norm`` or when its step falls below ``cfg.min_step``.
    """
    homotopy = _Homotopy(system, cfg.gamma)
    z = np.array(start_solutions() if starts is None else starts, dtype=complex)[:cfg.paths].copy()
    n = z.shape[0]
    t = np.ones(n)
    h = np.full(n, cfg.initial_step)
    streak = np.zeros(n, dtype=int)
    steps = np.zeros(n, dtype=int)
    status: List[Optional[PathStatus]] = [None] * n
    finished = np.zeros(n, dtype=bool)

    for _ in range(cfg.max_steps):
        active = np.flatnonzero(~finished)
        if not active.size:
            break
        za, ta = z[active], t[active]
        ha = np.minimum(h[active], ta)
        t_new = ta - ha

        # Euler predictor
        tangent = _solve(homotopy.dz(za, ta), homotopy.dt(za))
        guess = za + ha[:, None] * tangent

        # Newton corrector at t_new
        delta = np.zeros_like(guess)
        for _ in range(cfg.max_newton_iterations):
            delta = _solve(homotopy.dz(guess, t_new), homotopy.value(guess, t_new))
            guess = guess - delta
        scale = np.maximum(1.0, np.linalg.norm(guess, axis=1))
        accepted = np.all(np.isfinite(guess), axis=1) & (np.linalg.norm(delta, axis=1) < cfg.step_acceptance * scale)

        for k, path in enumerate(active):
            if accepted[k]:
                z[path], t[path] = guess[k], t_new[k]
                steps[path] += 1
                streak[path] += 1
                if streak[path] >= 3:
                    h[path] = min(2 * h[path], cfg.initial_step)
                    streak[path] = 0
                if np.linalg.norm(z[path]) > cfg.divergence_norm:
                    status[path], finished[path] = PathStatus.DIVERGED, True
                elif t[path] <= 0:
                    t[path] = 0.0
                    status[path], finished[path] = PathStatus.CONVERGED, True
            else:
                h[path] /= 2
                streak[path] = 0
                if h[path] < cfg.min_step:
                    in_endgame = t[path] < cfg.endgame_start
                    status[path] = PathStatus.DIVERGED if in_endgame else PathStatus.FAILED
                    finished[path] = True

    for path in np.flatnonzero(~finished):
        status[path] = PathStatus.FAILED

    # endpoints: paths that reached t = 0 or stalled in the endgame zone
    candidates = [k for k in range(n) if status[k] is PathStatus.CONVERGED
                  or (status[k] is PathStatus.DIVERGED and t[k] < cfg.endgame_start
                      and np.linalg.norm(z[k]) < cfg.divergence_norm)]
    results = [PathResult(k, status[k] or PathStatus.FAILED, z[k], float(t[k]), int(steps[k])) for k in range(n)]
    if candidates:
        polished = _polish(system, z[candidates], cfg)
        residuals = _normalized_residual(system, polished)
        jacobians = system.jacobian(polished)
        for row, k in enumerate(candidates):
            result = results[k]
            result.endpoint = polished[row]
            result.residual = float(residuals[row])
            finite = np.all(np.isfinite(polished[row]))
            result.condition = float(np.linalg.cond(jacobians[row])) if finite else float("inf")
            if not finite or residuals[row] >= cfg.step_acceptance:
                result.status = PathStatus.DIVERGED
            elif result.condition > cfg.singular_condition:
                result.status = PathStatus.SINGULAR
            else:
                result.status = PathStatus.CONVERGED
    for result in results:
        logger.debug("Path %d: %s", result.index, result)
    return results


def _deduplicate(lines: List[ComplexLine], distance: float) -> List[ComplexLine]:
    unique: List[ComplexLine] = []
    for line in lines:
        if all(line.distance(other) >= distance for other in unique):
            unique.append(line)
    return unique


def track_all(f: CubicForm3, cfg: Optional[TrackerConfig] = None, chart: Optional[np.ndarray] = None,
              starts: Optional[np.ndarray] = None) -> List[ComplexLine]:
    """Computes the 27 lines of a smooth cubic surface.

    Args:
        f (:class:`~.CubicForm3`): The surface.
        cfg (Optional[:class:`~.TrackerConfig`]): Tracker settings; defaults to ``TrackerConfig()``.
        chart (Optional[:class:`numpy.ndarray`]): Coordinate change; drawn from ``cfg.chart_rng()`` by default.
        starts (Optional[:class:`numpy.ndarray`]): The start solutions, in tracking order; :func:`start_solutions` by
            default. The returned lines do not depend on their order.

    Returns:
        List[:class:`~.ComplexLine`]: The 27 lines, in a canonical order of their Plücker vectors, each with its
        restriction residual below ``cfg.residual_bound``.

    Raises:
        :exc:`SingularSurfaceException`: If two or more endpoints are singular, or one is and the line count is off.
        :exc:`TrackingFailureException`: If deduplication does not leave exactly 27 lines; carries per-path
            diagnostics.
    """
    cfg = TrackerConfig() if cfg is None else cfg
    system = LineSystem(f, random_chart(cfg.chart_rng()) if chart is None else chart)
    results = track_paths(system, cfg, starts)
    diagnostics = [r.diagnostics() for r in results]

    converged = [r for r in results if r.status is PathStatus.CONVERGED]
    singular = [r for r in results if r.status is PathStatus.SINGULAR]
    candidates: List[ComplexLine] = []
    for result in converged:
        first, second = system.line_points(result.endpoint)
        line = ComplexLine(first[0], second[0])
        residual = line.restriction(system.tensor)
        line.residual = float(np.linalg.norm(residual))
        if line.residual >= cfg.residual_bound:
            logger.warning("Dropping endpoint of path %d: restriction residual %.3g.", result.index, line.residual)
            continue
        candidates.append(line)
    lines = sorted(_deduplicate(candidates, cfg.dedup_distance), key=ComplexLine.sort_key)

    counts = {status.value: sum(1 for r in results if r.status is status) for status in PathStatus}
    logger.info("Tracked %d paths: %s; %d distinct lines.", len(results), counts, len(lines))
    if len(singular) >= 2 or (singular and len(lines) != 27):
        raise SingularSurfaceException(f"surface may be singular: {len(singular)} endpoints have singular "
                                       f"Jacobians ({len(lines)} regular lines found).")
    if len(lines) != 27:
        raise TrackingFailureException(f"tracking failure: found {len(lines)} distinct lines instead of 27.",
                                       diagnostics=diagnostics)
    return lines
