import itertools
import json

import numpy as np
import pytest

from eckardt.exceptions import (
    CoincidentPointsException, DegenerateFormException, InvalidConfigException, InvalidInputException,
    SingularSurfaceException, TrackingFailureException
)
from eckardt.lines import (
    ComplexLine, LineSystem, TrackerConfig, cross_validate, cubic_tensor, eckardt_numeric, line_system,
    projective_distance, projective_distance_matrix, random_chart, start_solutions, track_all, track_paths
)
from eckardt.models import CubicForm3, FamilyTag, PathStatus, SylvesterPoint
from eckardt.pentahedron import eckardt_vertices, to_cubic_p3

from .conftest import smooth_representatives

OMEGA = np.exp(2j * np.pi / 3)


def closed_form_fermat_lines():
    # x_b = u x_a, x_d = v x_c with u^3 = v^3 = -1, for the three pairings
    roots = [-1, -OMEGA, -OMEGA ** 2]
    known = []
    for (a, b), (c, d) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        for u, v in itertools.product(roots, repeat=2):
            first, second = np.zeros(4, dtype=complex), np.zeros(4, dtype=complex)
            first[a], first[b] = 1, u
            second[c], second[d] = 1, v
            known.append(ComplexLine(first, second))
    return known


@pytest.mark.parametrize("changes", [
    {"paths": 0},
    {"paths": 82},
    {"min_step": 1.0},
    {"endgame_start": 1.0},
    {"gamma": 2},
    {"seed": -1},
    {"dedup_distance": 0},
    {"max_newton_iterations": 0},
])
def test_tracker_config_validation(changes):
    with pytest.raises(InvalidConfigException):
        TrackerConfig(**changes)


def test_tracker_config_seed_fixes_gamma():
    cfg = TrackerConfig(seed=5)
    assert cfg.gamma == TrackerConfig(seed=5).gamma
    assert abs(abs(cfg.gamma) - 1) < 1e-12
    assert cfg.replace(paths=10).gamma == cfg.gamma
    assert cfg.replace(seed=6).gamma != cfg.gamma
    assert TrackerConfig.from_json_text(json.dumps(cfg.to_json_data())) == cfg


def test_cubic_tensor_matches_the_form(rng):
    cubic = CubicForm3.from_coefficients([int(c) for c in rng.integers(-9, 10, size=20)])
    tensor = cubic_tensor(cubic.complex_coefficients())
    assert np.allclose(tensor, np.transpose(tensor, (1, 0, 2)))
    assert np.allclose(tensor, np.transpose(tensor, (2, 1, 0)))
    for _ in range(5):
        x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert np.isclose(np.einsum("ijk,i,j,k->", tensor, x, x, x), complex(cubic.evaluate(list(x))))
    with pytest.raises(InvalidInputException):
        cubic_tensor([1, 2, 3])


def test_line_system_agrees_with_batched_evaluation(fermat, rng):
    equations = line_system(fermat)
    assert [eq.degree for eq in equations] == [3, 3, 3, 3]
    system = LineSystem(fermat)
    z = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    batched = system.evaluate(z)
    for n in range(3):
        exact = [complex(eq.evaluate(list(z[n]))) for eq in equations]
        assert np.allclose(exact, batched[n] * np.array([1, 3, 3, 1]))


def test_jacobian_matches_finite_differences(clebsch, rng):
    system = LineSystem(clebsch, random_chart(rng))
    z = rng.standard_normal((1, 4)) + 1j * rng.standard_normal((1, 4))
    jac = system.jacobian(z)[0]
    step = 1e-6
    for k in range(4):
        shift = np.zeros((1, 4), dtype=complex)
        shift[0, k] = step
        numeric = (system.evaluate(z + shift) - system.evaluate(z - shift))[0] / (2 * step)
        assert np.allclose(jac[:, k], numeric, atol=1e-6)


def test_fermat_line_solves_the_chart_system(fermat, rng):
    # x2 = -x0, x3 = -x1
    assert np.allclose(LineSystem(fermat).evaluate(np.array([[-1, 0, 0, -1]])), 0)
    system = LineSystem(fermat, random_chart(rng))
    z = system.chart_coordinates([1, 0, -1, 0], [0, 1, 0, -1])
    assert np.linalg.norm(system.evaluate(z[None, :])) < 1e-10
    first, second = system.line_points(z[None, :])
    assert ComplexLine(first[0], second[0]).distance(ComplexLine([1, 0, -1, 0], [0, 1, 0, -1])) < 1e-10


def test_chart_must_be_invertible(fermat):
    with pytest.raises(InvalidInputException):
        LineSystem(fermat, np.zeros((4, 4)))


def test_start_solutions():
    starts = start_solutions()
    assert starts.shape == (81, 4)
    assert np.allclose(starts ** 3, 1)
    assert len({tuple(np.round(s, 8)) for s in starts}) == 81


def test_complex_line():
    with pytest.raises(CoincidentPointsException):
        ComplexLine([1, 0, 0, 0], [2j, 0, 0, 0])
    with pytest.raises(InvalidInputException):
        ComplexLine([1, 0, 0], [0, 1, 0])
    line = ComplexLine([1, -1, 0, 0], [0, 0, 1, -1])
    assert line.plucker_residual < ComplexLine.PLUCKER_TOLERANCE
    assert line.contains([1, -1, 2, -2], 1e-9)
    assert not line.contains([1, 0, 0, 0], 1e-9)
    # same line, other spanning points
    assert line.distance(ComplexLine([1, -1, 1, -1], [2, -2, -1, 1])) < 1e-12


def test_line_intersection():
    first = ComplexLine([1, -1, 0, 0], [0, 0, 1, -1])
    second = ComplexLine([1, -1, 0, 0], [0, 0, OMEGA, -1])
    point = first.intersection(second, 1e-9)
    assert point is not None
    assert projective_distance(point, np.array([1, -1, 0, 0])) < 1e-9
    assert ComplexLine([1, 0, 0, 0], [0, 1, 0, 0]).intersection(ComplexLine([0, 0, 1, 0], [0, 0, 0, 1]), 1e-9) \
        is None


def test_eckardt_numeric_needs_27_lines():
    lines = [ComplexLine([1, -1, 0, 0], [0, 0, 1, -1])] * 26
    with pytest.raises(InvalidInputException):
        eckardt_numeric(lines, 1e-6)


def test_distance_matrix_matches_pairwise_distance(rng):
    points = rng.normal(size=(6, 4)) + 1j * rng.normal(size=(6, 4))
    points[1] = 2j * points[0]
    matrix = projective_distance_matrix(points)
    assert matrix[0, 1] < 1e-7
    for i, j in itertools.product(range(6), repeat=2):
        assert matrix[i, j] == pytest.approx(projective_distance(points[i], points[j]), abs=1e-7)


def test_eckardt_points_of_the_closed_form_fermat_lines():
    clusters = eckardt_numeric(closed_form_fermat_lines(), 1e-6, CubicForm3.fermat())
    assert len(clusters) == 18
    assert all(len(c.indices) == 3 for c in clusters)
    assert all(c.residual < 1e-8 for c in clusters)
    assert len({i for c in clusters for i in c.indices}) == 27


def test_partial_tracking_reports_diagnostics(fermat):
    with pytest.raises(TrackingFailureException) as info:
        track_all(fermat, TrackerConfig(paths=6, seed=3))
    assert len(info.value.diagnostics) == 6
    assert {d["path"] for d in info.value.diagnostics} == set(range(6))


def test_cross_validation_refuses_degenerate_forms():
    with pytest.raises(DegenerateFormException):
        cross_validate(SylvesterPoint([1, 1, 1, 1, 0]))


@pytest.fixture(scope="module")
def fermat_lines():
    return track_all(CubicForm3.fermat(), TrackerConfig(seed=1))


@pytest.mark.slow
def test_fermat_has_27_lines_and_18_eckardt_points(fermat_lines):
    assert len(fermat_lines) == 27
    tensor = cubic_tensor(CubicForm3.fermat().complex_coefficients())
    for line in fermat_lines:
        assert line.plucker_residual < ComplexLine.PLUCKER_TOLERANCE
        assert np.linalg.norm(line.restriction(tensor)) < 1e-8
    for a, b in itertools.combinations(fermat_lines, 2):
        assert a.distance(b) > 1e-6
    assert max(line.residual for line in fermat_lines) < TrackerConfig().residual_bound
    clusters = eckardt_numeric(fermat_lines, 1e-6, CubicForm3.fermat())
    assert len(clusters) == 18
    assert all(c.residual < 1e-8 for c in clusters)


@pytest.mark.slow
def test_fermat_lines_are_the_known_ones(fermat_lines):
    for line in closed_form_fermat_lines():
        assert min(line.distance(found) for found in fermat_lines) < 1e-8


@pytest.mark.slow
def test_clebsch_has_10_eckardt_points(clebsch):
    lines = track_all(clebsch, TrackerConfig(seed=2))
    assert len(eckardt_numeric(lines, 1e-6, clebsch)) == 10


@pytest.mark.slow
def test_generic_surface_has_no_eckardt_point():
    cubic = to_cubic_p3(SylvesterPoint([1, 2, 3, 4, 5]))
    assert eckardt_numeric(track_all(cubic, TrackerConfig(seed=4)), 1e-6, cubic) == []


@pytest.mark.slow
def test_cone_is_reported_singular():
    cone = CubicForm3.from_coefficients([1 if e in ((3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 3, 0)) else 0
                                         for e in CubicForm3.MONOMIALS])
    with pytest.raises(SingularSurfaceException):
        track_all(cone, TrackerConfig(seed=1))


@pytest.mark.slow
def test_lines_do_not_depend_on_the_chart(clebsch):
    first = track_all(clebsch, TrackerConfig(seed=7))
    second = track_all(clebsch, TrackerConfig(seed=8))
    for line in first:
        assert min(line.distance(other) for other in second) < 1e-8


@pytest.mark.slow
def test_tracking_is_deterministic(clebsch):
    cfg = TrackerConfig(seed=9)
    first = track_all(clebsch, cfg)
    second = track_all(clebsch, cfg)
    assert all(np.array_equal(a.plucker, b.plucker) for a, b in zip(first, second))


@pytest.mark.slow
def test_lines_do_not_depend_on_the_path_order(clebsch):
    cfg = TrackerConfig(seed=9)
    starts = start_solutions()
    order = np.random.default_rng(11).permutation(len(starts))
    first = track_all(clebsch, cfg)
    second = track_all(clebsch, cfg, starts=starts[order])
    assert len(first) == len(second) == 27
    for line in first:
        assert min(line.distance(other) for other in second) < 1e-8
    for line in second:
        assert min(line.distance(other) for other in first) < 1e-8


@pytest.mark.slow
def test_path_statuses(fermat):
    results = track_paths(LineSystem(fermat, random_chart(np.random.default_rng(5))), TrackerConfig(seed=5))
    assert len(results) == 81
    converged = [r for r in results if r.status is PathStatus.CONVERGED]
    assert len(converged) >= 27
    assert all(r.residual < 1e-8 for r in converged)


@pytest.mark.slow
@pytest.mark.parametrize("coeffs, count", [
    ([1, 2, 2, 3, 3], 2),
    ([1, 2, 2, 2, 3], 3),
    ([1, 2, 2, 2, 1], 4),
    ([1, 2, 2, 2, 2], 6),
    ([1, 1, 1, 1, 1], 10),
])
def test_cross_validation(coeffs, count):
    report = cross_validate(SylvesterPoint(coeffs), TrackerConfig(seed=1))
    assert report.ok
    assert len(report.vertices) == len(report.clusters) == count


@pytest.mark.slow
def test_numeric_count_matches_exact_count(fermat):
    tags = [tag for tag in FamilyTag if tag is not FamilyTag.DEGENERATE]
    samplers = {tag: smooth_representatives(tag, seed=100 + k) for k, tag in enumerate(tags)}
    surfaces = [(fermat, 18)]
    for k in range(4 * len(tags)):
        s = next(samplers[tags[k % len(tags)]])
        surfaces.append((to_cubic_p3(s), len(eckardt_vertices(s))))
    for k, (cubic, count) in enumerate(surfaces):
        cfg = TrackerConfig(seed=k)
        lines = track_all(cubic, cfg)
        assert max(line.residual for line in lines) < cfg.residual_bound
        clusters = eckardt_numeric(lines, 1e-6, cubic)
        assert len(clusters) == count, cubic
        assert all(c.residual < 1e-8 for c in clusters)
