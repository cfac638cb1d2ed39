import itertools
from fractions import Fraction

import pytest

from eckardt.exceptions import BaseLocusPointException, InvalidInputException, InverseUndefinedException
from eckardt.invariants import (
    Q_POINT, READING_NOTES, base_locus_forward, i100, i100_factored, inverse_map, maps_to_q, salmon_invariants,
    salmon_values, sigma_values, sigma_vector, weighted_equal
)
from eckardt.models import ModuliPoint, SylvesterPoint


def _random_point(rng, bound=20, allow_zero=False):
    while True:
        values = [int(x) for x in rng.integers(-bound, bound + 1, size=5)]
        if allow_zero or 0 not in values:
            return SylvesterPoint(values)


def test_clebsch_invariants():
    assert list(salmon_invariants(SylvesterPoint([1, 1, 1, 1, 1])).coords) == [-15, 5, 5, 10, 1]
    assert i100(SylvesterPoint([1, 1, 1, 1, 1])) == 0


def test_generic_point_is_off_the_hypersurface():
    assert i100(SylvesterPoint([1, 2, 3, 4, 5])) == 120 ** 18 * 288


def test_degenerate_points_map_to_q():
    assert salmon_invariants(SylvesterPoint([1, 2, 3, 4, 0])) == Q_POINT
    assert maps_to_q(SylvesterPoint([1, -1, 1, -1, 0]))
    assert not maps_to_q(SylvesterPoint([1, 2, 3, 4, 5]))


def test_base_locus():
    s = SylvesterPoint([0, 0, 1, 2, 3])
    assert base_locus_forward(s)
    assert not maps_to_q(s)
    with pytest.raises(BaseLocusPointException):
        salmon_invariants(s)
    # one zero coordinate alone keeps sigma_4 nonzero
    assert not base_locus_forward(SylvesterPoint([1, -1, 1, -1, 0]))


def test_sigma_values():
    assert sigma_values(SylvesterPoint([1, 2, 3, 4, 5])) == (15, 85, 225, 274, 120)
    assert sigma_vector(SylvesterPoint([1, 1, 1, 1, 1])) == ModuliPoint([5, 10, 10, 5, 1])


def test_permutation_invariance(rng):
    s = _random_point(rng)
    reference = salmon_values(s)
    reference_i100 = i100(s)
    for perm in itertools.permutations(range(5)):
        moved = s.permuted(perm)
        assert salmon_values(moved) == reference
        # the Vandermonde product changes sign with odd permutations, so I100 is invariant up to sign
        assert abs(i100(moved)) == abs(reference_i100)


def test_weighted_scaling_covariance(rng):
    for _ in range(20):
        s = _random_point(rng)
        factor = Fraction(int(rng.integers(1, 9)) * int(rng.choice([-1, 1])), int(rng.integers(1, 9)))
        scaled = ModuliPoint(salmon_values(s.scaled(factor)))
        assert scaled.coords == ModuliPoint(salmon_values(s)).scaled(factor ** 8).coords
        assert weighted_equal(scaled, salmon_invariants(s))


def test_roundtrip(rng):
    for _ in range(100):
        s = _random_point(rng)
        assert weighted_equal(inverse_map(salmon_invariants(s)), sigma_vector(s))


def test_inverse_undefined_at_q():
    with pytest.raises(InverseUndefinedException, match="inverse undefined at Q"):
        inverse_map(Q_POINT)
    with pytest.raises(InverseUndefinedException):
        inverse_map(ModuliPoint([3, 1, 0, 2, 0]))


@pytest.mark.parametrize("p, q, expected", [
    ([1, 2, 3, 4, 5], [2, 8, 24, 64, 160], True),
    ([1, 2, 3, 4, 5], [-1, 2, -3, 4, -5], True),
    ([1, 2, 3, 4, 5], [1, 2, 3, 4, 6], False),
    ([1, 0, 0, 0, 0], [7, 0, 0, 0, 0], True),
    ([0, 1, 0, 0, 0], [0, -1, 0, 0, 0], True),
    ([0, 1, 0, 1, 0], [0, 1, 0, -1, 0], False),
    ([0, 1, 0, 0, 0], [0, 4, 0, 0, 0], True),
    ([1, 0, 0, 0, 0], [0, 1, 0, 0, 0], False),
    ([0, 0, 0, 2, 3], [0, 0, 0, 2, -3], True),
])
def test_weighted_equal(p, q, expected):
    assert weighted_equal(ModuliPoint(p), ModuliPoint(q)) is expected
    assert weighted_equal(ModuliPoint(q), ModuliPoint(p)) is expected


def test_moduli_point_validation():
    with pytest.raises(InvalidInputException):
        ModuliPoint([0, 0, 0, 0, 0])
    with pytest.raises(InvalidInputException):
        ModuliPoint([1, 2, 3])


def test_i100_factored_shape():
    f = i100_factored()
    assert f.degree == 100
    assert sorted(e for _, e in f.factors) == [1] * 10 + [18]


def test_reading_notes_are_recorded():
    assert set(READING_NOTES) == {"I40", "inverse_order"}
