__all__ = ("TrackerConfig",)
import cmath
import math
import typing
from typing import Any, Mapping, Optional

import numpy as np

from ..exceptions import InvalidConfigException, JsonSchemaException
from ..models.model_abc import JsonModel


class TrackerConfig(JsonModel[Mapping[str, Any]]):
    """Settings of the homotopy path tracker.

    Every value is validated on construction. The random unit constant :attr:`gamma` is drawn from :attr:`seed` when
    not given explicitly, so one seed fixes the whole run.

    Attributes:
        paths (:class:`int`): Number of start solutions tracked, at most :attr:`TOTAL_DEGREE`.
        seed (:class:`int`): Seed of every random choice (gamma and the coordinate change).
        gamma (:class:`complex`): Unit complex constant of the start system.
        initial_step (:class:`float`): First (and largest) step in ``t``.
        min_step (:class:`float`): Steps below this end a path.
        corrector_tol (:class:`float`): Residual reached by endpoint polishing.
        divergence_norm (:class:`float`): Paths whose norm exceeds this are diverging.
        endgame_start (:class:`float`): Below this ``t``, a stalled path counts as diverging rather than failing.
        max_newton_iterations (:class:`int`): Corrector iterations per step.
        step_acceptance (:class:`float`): Largest last Newton update for which a step is accepted.
        max_steps (:class:`int`): Loop iterations before unfinished paths are abandoned.
        singular_condition (:class:`float`): Jacobian condition number above which an endpoint is singular.
        dedup_distance (:class:`float`): Plücker distance under which two endpoints are the same line.
        residual_bound (:class:`float`): Bound on the normalized restriction of the cubic to an accepted line.

    Raises:
        :exc:`InvalidConfigException`: If a value breaks its constraint.

    .. testsetup:: *

        from eckardt.lines import TrackerConfig
    """
    __slots__ = (
        "paths", "seed", "gamma", "initial_step", "min_step", "corrector_tol", "divergence_norm", "endgame_start",
        "max_newton_iterations", "step_acceptance", "max_steps", "singular_condition", "dedup_distance",
        "residual_bound",
    )

    TOTAL_DEGREE: typing.ClassVar[int] = 81
    """Bezout number of four cubic equations in four unknowns."""

    def __init__(self, *, paths: int = 81, seed: int = 0, gamma: Optional[complex] = None,
                 initial_step: float = 0.05, min_step: float = 1e-7, corrector_tol: float = 1e-12,
                 divergence_norm: float = 1e8, endgame_start: float = 0.1, max_newton_iterations: int = 3,
                 step_acceptance: float = 1e-8, max_steps: int = 20000, singular_condition: float = 1e10,
                 dedup_distance: float = 1e-6, residual_bound: float = 1e-8):
        if not 1 <= paths <= TrackerConfig.TOTAL_DEGREE:
            raise InvalidConfigException(f"paths must be between 1 and {TrackerConfig.TOTAL_DEGREE}, got {paths}.")
        positive = {
            "initial_step": initial_step, "min_step": min_step, "corrector_tol": corrector_tol,
            "divergence_norm": divergence_norm, "step_acceptance": step_acceptance,
            "singular_condition": singular_condition, "dedup_distance": dedup_distance,
            "residual_bound": residual_bound,
        }
        for name, value in positive.items():
            if not value > 0:
                raise InvalidConfigException(f"{name} must be positive, got {value}.")
        if min_step > initial_step:
            raise InvalidConfigException("min_step cannot exceed initial_step.")
        if not 0 < endgame_start < 1:
            raise InvalidConfigException(f"endgame_start must lie in (0, 1), got {endgame_start}.")
        if seed < 0:
            raise InvalidConfigException(f"seed must be non-negative, got {seed}.")
        if max_newton_iterations < 1 or max_steps < 1:
            raise InvalidConfigException("Iteration budgets must be positive.")
        if gamma is None:
            angle = np.random.default_rng([seed, 0]).uniform(0, 2 * math.pi)
            gamma = cmath.exp(1j * angle)
        elif not math.isclose(abs(gamma), 1.0, rel_tol=1e-12):
            raise InvalidConfigException("gamma must be a unit complex number.")

        self.paths: int = int(paths)
        self.seed: int = int(seed)
        self.gamma: complex = complex(gamma)
        self.initial_step: float = float(initial_step)
        self.min_step: float = float(min_step)
        self.corrector_tol: float = float(corrector_tol)
        self.divergence_norm: float = float(divergence_norm)
        self.endgame_start: float = float(endgame_start)
        self.max_newton_iterations: int = int(max_newton_iterations)
        self.step_acceptance: float = float(step_acceptance)
        self.max_steps: int = int(max_steps)
        self.singular_condition: float = float(singular_condition)
        self.dedup_distance: float = float(dedup_distance)
        self.residual_bound: float = float(residual_bound)

    def chart_rng(self) -> np.random.Generator:
        """The generator the random coordinate change is drawn from."""
        return np.random.default_rng([self.seed, 1])

    def replace(self, **changes: Any) -> "TrackerConfig":
        """A copy with some fields changed; ``gamma`` is redrawn when ``seed`` changes and ``gamma`` is not given.

        Examples:
            .. doctest::

                >>> TrackerConfig(seed=1).replace(paths=10).paths
                10
        """
        values = {name: getattr(self, name) for name in self.__slots__}
        if "seed" in changes and "gamma" not in changes:
            values.pop("gamma")
        values.update(changes)
        return TrackerConfig(**values)

    @classmethod
    def _from_json_data(cls, json_data: Mapping[str, Any]):
        try:
            data = dict(json_data)
            if "gamma" in data:
                re, im = data["gamma"]
                data["gamma"] = complex(re, im)
            return cls(**data)
        except (TypeError, ValueError) as e:
            raise JsonSchemaException("Unexpected tracker configuration JSON data received.") from e

    def to_json_data(self):
        data = {name: getattr(self, name) for name in self.__slots__}
        data["gamma"] = [self.gamma.real, self.gamma.imag]
        return data

    def __eq__(self, other):
        if not isinstance(other, TrackerConfig):
            return NotImplemented
        return self.to_json_data() == other.to_json_data()

    def __repr__(self):
        return f"<TrackerConfig paths={self.paths} seed={self.seed} gamma={self.gamma:.6f}>"
