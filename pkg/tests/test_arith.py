from fractions import Fraction

import pytest
from sympy import QQ

from eckardt.arith import (
    FactoredPoly, MultiPoly, TruncatedSeries, as_rat, elem_sym, format_rat, from_ground, monomials_of_degree, nullspace,
    parse_rat, polynomial_ring, rank, rref, row_space_contains, to_ground
)
from eckardt.exceptions import InvalidInputException, RationalParseException


@pytest.mark.parametrize("text, expected", [
    ("3", Fraction(3)),
    ("-6/4", Fraction(-3, 2)),
    (" 0/7 ", Fraction(0)),
    ("+12/5", Fraction(12, 5)),
])
def test_parse_rat(text, expected):
    assert parse_rat(text) == expected


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a", "1//2", "2/-3"])
def test_parse_rat_rejects(text):
    with pytest.raises(RationalParseException):
        parse_rat(text)


def test_as_rat_refuses_floats_and_bools():
    with pytest.raises(RationalParseException):
        as_rat(0.5)  # type: ignore
    with pytest.raises(RationalParseException):
        as_rat(True)


def test_format_rat_is_canonical():
    assert format_rat(Fraction(10, -4)) == "-5/2"
    assert format_rat(Fraction(0)) == "0"
    assert parse_rat(format_rat(Fraction(-17, 3))) == Fraction(-17, 3)


def test_multipoly_drops_zero_terms():
    x = MultiPoly.variable(0, 2)
    y = MultiPoly.variable(1, 2)
    assert ((x + y) - y) == x
    assert (x - x).is_zero
    assert (x * 0).terms == {}


def test_multipoly_arithmetic():
    x = MultiPoly.variable(0, 2)
    y = MultiPoly.variable(1, 2)
    square = (x + y) ** 2
    assert square == x * x + x * y * 2 + y * y
    assert square.degree == 2
    assert square.is_homogeneous
    assert not (square + 1).is_homogeneous
    assert str(x - y * Fraction(1, 2)) == "a0 - 1/2*a1"


def test_multipoly_rejects_bad_exponents():
    with pytest.raises(InvalidInputException):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(InvalidInputException):
        MultiPoly(2, {(1, -1): 1})


def test_multipoly_rings_do_not_mix():
    with pytest.raises(InvalidInputException):
        MultiPoly.variable(0, 2) + MultiPoly.variable(0, 3)


def test_derivative_and_substitution():
    x, y = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    f = x ** 3 * y + y ** 2
    assert f.derivative(0) == x ** 2 * y * 3
    assert f.derivative(1) == x ** 3 + y * 2
    t = MultiPoly.variable(0, 1)
    # along the line (t, 2t)
    assert f.substitute([t, t * 2]) == t ** 4 * 2 + t ** 2 * 4


def test_evaluate_exact_and_complex():
    f = elem_sym(2, 3)
    assert f.evaluate([Fraction(1), Fraction(2), Fraction(3)]) == 11
    assert f.evaluate([1j, 1j, 0]) == -1


@pytest.mark.parametrize("k, count", [(1, 5), (2, 10), (3, 10), (4, 5), (5, 1)])
def test_elem_sym_term_counts(k, count):
    p = elem_sym(k)
    assert len(p.terms) == count
    assert p.degree == k


def test_elem_sym_range():
    with pytest.raises(InvalidInputException):
        elem_sym(6)


def test_monomials_of_degree():
    cubics = monomials_of_degree(3, 4)
    assert len(cubics) == 20
    assert cubics[0] == (3, 0, 0, 0)
    assert cubics[-1] == (0, 0, 0, 3)


def test_factored_poly_normalizes():
    d = MultiPoly.linear([1, -1, 0])
    f = FactoredPoly(3, 2, [(d, 1), (d, 2), (MultiPoly.constant(3, 3), 2)])
    assert f.scalar == 18
    assert f.factors == ((d, 3),)
    assert f.degree == 3
    assert FactoredPoly(3, 0, [(d, 1)]).is_zero


def test_factored_evaluate_matches_expansion():
    a, b = MultiPoly.linear([1, -1, 0]), MultiPoly.linear([0, 1, 1])
    f = FactoredPoly(3, Fraction(1, 2), [(a, 2), (b, 3)])
    point = [Fraction(3), Fraction(-1), Fraction(5)]
    assert f.evaluate(point) == f.expand().evaluate(point) == Fraction(1, 2) * 16 * 64


def test_factored_derive_matches_expanded_derivative():
    a, b = MultiPoly.linear([1, -1, 0]), MultiPoly.linear([0, 1, 1])
    f = FactoredPoly(3, 3, [(a, 2), (b, 3), (elem_sym(3, 3), 1)])
    for var in range(3):
        assert f.derive(var).expand() == f.expand().derivative(var)


def test_factored_expand_limit():
    f = FactoredPoly(5, 1, [(elem_sym(5), 18)])
    with pytest.raises(InvalidInputException):
        f.expand()


def test_factored_substitute_stays_factored():
    d = MultiPoly.linear([1, -1])
    f = FactoredPoly(2, 1, [(d, 4)])
    t = MultiPoly.variable(0, 1)
    assert f.substitute([t, t]).is_zero


def test_rref_and_rank():
    reduced, pivots = rref([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert pivots == (0, 1)
    assert reduced == [[1, 0, 1], [0, 1, 1]]
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0, 0], [0, 0, 1], [1, 0, 1]]) == 2


def test_nullspace_is_orthogonal_to_rows():
    rows = [[1, -1, 0, 0, 0], [0, 0, 1, -1, 0]]
    basis = nullspace(rows, 5)
    assert len(basis) == 3
    for vector in basis:
        for row in rows:
            assert sum(Fraction(r) * v for r, v in zip(row, vector)) == 0


def test_row_space_contains():
    rows = [[1, -1, 0], [0, 1, -1]]
    assert row_space_contains(rows, [1, 0, -1])
    assert not row_space_contains(rows, [1, 0, 0])
    assert row_space_contains([], [0, 0, 0])


def test_truncated_series_product_and_order():
    one_plus = TruncatedSeries([1, 1], 4)
    cube = one_plus ** 3
    assert cube.coeffs == [1, 3, 3, 1, 0]
    assert (TruncatedSeries([0, 0, 2], 4) * TruncatedSeries([0, 5], 4)).order() == 3
    assert TruncatedSeries([0, 0, 0, 0, 0, 1], 4).order() is None


def test_series_along_line():
    x, y = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    f = (x - y) ** 2 * y
    series = TruncatedSeries.along_line(f, [1, 1], [1, 2], 5)
    # (x - y)^2 * y at (1 + e, 1 + 2e) is e^2 (1 + 2e)
    assert series.coeffs[:4] == [0, 0, 1, 2]
    assert series.order() == 2


def test_ground_field_conversions():
    for value in (Fraction(0), Fraction(-7, 3), Fraction(12)):
        assert from_ground(to_ground(value)) == value
    assert to_ground("5/10") == QQ(1, 2)


def test_multipoly_lives_in_a_sympy_ring():
    x = MultiPoly.variable(0, 3)
    assert x.poly.ring is polynomial_ring(3)
    assert polynomial_ring(3).domain == QQ
    f = (x + 1) ** 2
    assert f.poly == x.poly ** 2 + 2 * x.poly + 1
    assert f.terms == {(2, 0, 0): 1, (1, 0, 0): 2, (0, 0, 0): 1}


def test_substitution_into_a_larger_ring():
    x, y = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    u, v, w = (MultiPoly.variable(i, 3) for i in range(3))
    f = x ** 2 * y - y ** 3
    assert f.substitute([u + w, v * w]) == (u + w) ** 2 * v * w - (v * w) ** 3


def test_substitution_is_simultaneous():
    x, y = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    # swapping the variables must not feed one image into the next
    assert (x - y * 2).substitute([y, x]) == y - x * 2


def test_nullspace_of_empty_system_is_the_standard_basis():
    assert nullspace([], 3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert rref([[0, 0, 0]]) == ([], ())
