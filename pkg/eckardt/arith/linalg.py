"""Exact linear algebra over the rationals (row reduction, rank, kernels), on :class:`sympy.Matrix`."""
__all__ = ("Matrix", "rref", "rank", "nullspace", "row_space_contains")
from typing import List, Sequence, Tuple

import sympy as sp

from .rat import Rat, RatLike, as_rat, from_ground

Matrix = List[List[Rat]]


def _to_sympy(rows: Sequence[Sequence[RatLike]], ncols: int) -> sp.Matrix:
    entries = [[sp.Rational(q.numerator, q.denominator) for q in map(as_rat, row)] for row in rows]
    return sp.Matrix(len(entries), ncols, [x for row in entries for x in row])


def _from_sympy(matrix: sp.Matrix) -> Matrix:
    return [[from_ground(x) for x in row] for row in matrix.tolist()]


def rref(rows: Sequence[Sequence[RatLike]]) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form.

    Zero rows are dropped, so the returned matrix is a canonical basis of the row space: two matrices have the same
    row space exactly when their reduced forms are equal.

    Returns:
        Tuple[:obj:`Matrix`, Tuple[:class:`int`, ...]]: The nonzero rows of the reduced form and the pivot columns.

    Examples:
        .. testsetup::

            from eckardt.arith.linalg import rref
        .. doctest::

            >>> reduced, pivots = rref([[2, 4], [1, 2]])
            >>> [[str(x) for x in row] for row in reduced], pivots
            ([['1', '2']], (0,))
    """
    if not rows:
        return [], ()
    reduced, pivots = _to_sympy(rows, len(rows[0])).rref()
    return _from_sympy(reduced[:len(pivots), :]), tuple(int(p) for p in pivots)


def rank(rows: Sequence[Sequence[RatLike]]) -> int:
    if not rows:
        return 0
    return int(_to_sympy(rows, len(rows[0])).rank())


def nullspace(rows: Sequence[Sequence[RatLike]], ncols: int) -> Matrix:
    """A basis of the right kernel :math:`\\{x : Ax = 0\\}`, one basis vector per free column."""
    if not rows:
        return _from_sympy(sp.eye(ncols))
    return [[from_ground(x) for x in vector] for vector in _to_sympy(rows, ncols).nullspace()]


def row_space_contains(rows: Sequence[Sequence[RatLike]], vector: Sequence[RatLike]) -> bool:
    """``True`` if ``vector`` is a linear combination of ``rows``."""
    if not rows:
        return all(not as_rat(x) for x in vector)
    return rank(list(rows) + [list(vector)]) == rank(rows)
