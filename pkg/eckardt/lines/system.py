"""The polynomial system whose solutions are the lines on a cubic surface.

In coordinates where a line is spanned by :math:`A = (1, 0, p, r)` and :math:`B = (0, 1, q, s)`, i.e.
:math:`x_2 = p x_0 + q x_1` and :math:`x_3 = r x_0 + s x_1`, the cubic restricted to the line is the binary cubic
:math:`T(A,A,A) u^3 + 3 T(A,A,B) u^2 v + 3 T(A,B,B) u v^2 + T(B,B,B) v^3`, with :math:`T` the symmetric tensor of the
cubic. Its four coefficients are the equations.
"""
__all__ = ("cubic_tensor", "line_system", "random_chart", "LineSystem")
import itertools
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..arith.multipoly import MultiPoly
from ..exceptions import InvalidInputException
from ..models.cubic import CubicForm3

CHART_VARIABLE_NAMES: Tuple[str, ...] = ("p", "q", "r", "s")


def cubic_tensor(coefficients: Sequence[complex]) -> np.ndarray:
    """The symmetric 4 x 4 x 4 tensor ``T`` with ``f(x) = sum T[i,j,k] x_i x_j x_k``.

    Args:
        coefficients: The 20 coefficients in :attr:`CubicForm3.MONOMIALS` order.
    """
    if len(coefficients) != len(CubicForm3.MONOMIALS):
        raise InvalidInputException("A cubic in 4 variables has 20 coefficients.")
    by_monomial = dict(zip(CubicForm3.MONOMIALS, coefficients))
    tensor = np.zeros((4, 4, 4), dtype=complex)
    for index in itertools.product(range(4), repeat=3):
        exps = tuple(index.count(v) for v in range(4))
        orderings = math.factorial(3) // math.prod(math.factorial(e) for e in exps)
        tensor[index] = complex(by_monomial[exps]) / orderings
    return tensor


def line_system(f: CubicForm3) -> List[MultiPoly]:
    """The four chart equations in :math:`(p, q, r, s)`, exactly, for the coordinates the cubic is written in.

    The equations are the coefficients of :math:`u^3, u^2 v, u v^2, v^3` in :math:`f(uA + vB)`.

    Examples:
        .. testsetup::

            from eckardt.models import CubicForm3
            from eckardt.lines import line_system
        .. doctest::

            >>> [eq.degree for eq in line_system(CubicForm3.fermat())]
            [3, 3, 3, 3]
    """
    # ring: p, q, r, s, u, v
    var = [MultiPoly.variable(i, 6) for i in range(6)]
    p, q, r, s, u, v = var
    images = [u, v, p * u + q * v, r * u + s * v]
    restricted = f.poly.substitute(images)
    equations = []
    for degree_u in (3, 2, 1, 0):
        terms = {}
        for exps, coeff in restricted.terms.items():
            if exps[4] == degree_u and exps[5] == 3 - degree_u:
                terms[exps[:4]] = coeff
        equations.append(MultiPoly(4, terms))
    return equations


def random_chart(rng: np.random.Generator) -> np.ndarray:
    """A random complex 4 x 4 matrix; with probability 1 every line is visible in the chart it defines."""
    return rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))


class LineSystem:
    """The chart equations of a cubic after the coordinate change :math:`x = M y`, for batches of points.

    Attributes:
        tensor (:class:`numpy.ndarray`): Symmetric tensor of the cubic in the original coordinates, scaled so its
            largest entry has modulus 1.
        chart (:class:`numpy.ndarray`): The matrix :math:`M`.
        chart_tensor (:class:`numpy.ndarray`): Symmetric tensor of :math:`y \\mapsto f(M y)`, scaled likewise.
    """
    __slots__ = ("tensor", "chart", "chart_tensor")

    def __init__(self, f: CubicForm3, chart: Optional[np.ndarray] = None):
        tensor = cubic_tensor(f.complex_coefficients())
        self.tensor: np.ndarray = tensor / np.abs(tensor).max()
        self.chart: np.ndarray = np.eye(4, dtype=complex) if chart is None else np.asarray(chart, dtype=complex)
        if self.chart.shape != (4, 4) or abs(np.linalg.det(self.chart)) < 1e-12:
            raise InvalidInputException("The chart must be an invertible 4 x 4 matrix.")
        moved = np.einsum("abc,ai,bj,ck->ijk", self.tensor, self.chart, self.chart, self.chart)
        self.chart_tensor: np.ndarray = moved / np.abs(moved).max()

    @staticmethod
    def spanning_points(z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """The points :math:`A = (1, 0, p, r)` and :math:`B = (0, 1, q, s)` for a batch ``z`` of shape ``(n, 4)``."""
        z = np.atleast_2d(z)
        n = z.shape[0]
        a = np.zeros((n, 4), dtype=complex)
        b = np.zeros((n, 4), dtype=complex)
        a[:, 0], a[:, 2], a[:, 3] = 1, z[:, 0], z[:, 2]
        b[:, 1], b[:, 2], b[:, 3] = 1, z[:, 1], z[:, 3]
        return a, b

    def _contractions(self, z: np.ndarray):
        a, b = self.spanning_points(z)
        t = self.chart_tensor
        taa = np.einsum("ijk,nj,nk->ni", t, a, a)
        tab = np.einsum("ijk,nj,nk->ni", t, a, b)
        tbb = np.einsum("ijk,nj,nk->ni", t, b, b)
        return a, b, taa, tab, tbb

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """The four equations at each point of the batch, shape ``(n, 4)``."""
        a, b, taa, _, tbb = self._contractions(z)
        return np.stack([
            np.einsum("ni,ni->n", taa, a),
            np.einsum("ni,ni->n", taa, b),
            np.einsum("ni,ni->n", tbb, a),
            np.einsum("ni,ni->n", tbb, b),
        ], axis=1)

    def jacobian(self, z: np.ndarray) -> np.ndarray:
        """Derivatives by :math:`(p, q, r, s)`, shape ``(n, 4, 4)``."""
        _, _, taa, tab, tbb = self._contractions(z)
        zero = np.zeros(taa.shape[0], dtype=complex)
        rows = [
            [3 * taa[:, 2], zero, 3 * taa[:, 3], zero],
            [2 * tab[:, 2], taa[:, 2], 2 * tab[:, 3], taa[:, 3]],
            [tbb[:, 2], 2 * tab[:, 2], tbb[:, 3], 2 * tab[:, 3]],
            [zero, 3 * tbb[:, 2], zero, 3 * tbb[:, 3]],
        ]
        return np.stack([np.stack(row, axis=1) for row in rows], axis=1)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return 3, 3, 3, 3

    def line_points(self, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """The spanning points of the chart solutions ``z``, mapped back to the original coordinates."""
        a, b = self.spanning_points(z)
        return a @ self.chart.T, b @ self.chart.T

    def chart_coordinates(self, first: Sequence[complex], second: Sequence[complex]) -> np.ndarray:
        """The chart point :math:`(p, q, r, s)` of the line through two points given in the original coordinates.

        Raises:
            :exc:`InvalidInputException`: If the line is not visible in this chart.
        """
        span = np.linalg.solve(self.chart, np.array([first, second], dtype=complex).T).T
        head = span[:, :2]
        if abs(np.linalg.det(head)) < 1e-12:
            raise InvalidInputException("The line is not visible in this chart.")
        basis = np.linalg.solve(head, span)
        return np.array([basis[0, 2], basis[1, 2], basis[0, 3], basis[1, 3]])
