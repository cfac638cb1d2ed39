import itertools

import pytest

from eckardt.exceptions import CoincidentPointsException, DegenerateFormException, InvalidInputException
from eckardt.models import CubicForm3, FamilyTag, PentVertex, SylvesterPoint
from eckardt.pentahedron import (
    classify_family, collinear, contains_line, eckardt_involutions, eckardt_vertices, family_representative,
    normal_form, stabilizer, surface_report, to_cubic_p3, vertices_on_face
)

FAMILY_FACTS = [
    # tag, Eckardt points, stabilizer order
    (FamilyTag.GENERIC, 0, 1),
    (FamilyTag.S1, 2, 4),
    (FamilyTag.S2, 3, 6),
    (FamilyTag.C1, 4, 12),
    (FamilyTag.C2, 6, 24),
    (FamilyTag.CLEBSCH, 10, 120),
]


@pytest.mark.parametrize("tag, count, order", FAMILY_FACTS)
def test_family_counts(rng, tag, count, order):
    for _ in range(5):
        s = family_representative(tag, rng)
        assert classify_family(s) is tag
        assert len(eckardt_vertices(s)) == count
        group = stabilizer(s)
        assert group.order == order
        assert eckardt_involutions(s) == count


def test_only_the_order_four_stabilizer_is_abelian(rng):
    for tag, _, order in FAMILY_FACTS:
        if tag is FamilyTag.GENERIC:
            continue
        assert stabilizer(family_representative(tag, rng)).is_abelian is (order == 4)


def test_stabilizer_is_projective():
    # (1:-1:2:-2:3) is not fixed by any nontrivial permutation, even up to sign
    assert stabilizer(SylvesterPoint([1, -1, 2, -2, 3])).order == 1
    assert stabilizer(SylvesterPoint([2, 2, 2, 2, 2])).order == 120


def test_eckardt_vertices_refuse_degenerate_forms():
    with pytest.raises(DegenerateFormException, match="numeric"):
        eckardt_vertices(SylvesterPoint([1, 1, 1, 1, 0]))
    assert classify_family(SylvesterPoint([1, 1, 1, 1, 0])) is FamilyTag.DEGENERATE


def test_s1_join_lies_on_surface():
    s = normal_form(FamilyTag.S1, [7, 3, 5])
    first, second = sorted(eckardt_vertices(s))
    assert (first.label, second.label) == ("A12", "A34")
    assert contains_line(s, first, second)


def test_s2_vertices_are_collinear_off_surface():
    s = normal_form(FamilyTag.S2, [7, 3, 5])
    vertices = sorted(eckardt_vertices(s))
    assert collinear(vertices)
    assert not contains_line(s, vertices[0], vertices[1])


def test_c1_joins_from_a04_lie_on_surface():
    s = normal_form(FamilyTag.C1, [7, 3])
    vertices = eckardt_vertices(s)
    apex = PentVertex(0, 4)
    assert apex in vertices
    others = sorted(vertices - {apex})
    assert [v.label for v in others] == ["A12", "A13", "A23"]
    for v in others:
        assert contains_line(s, apex, v)


def test_c2_vertices_share_a_face():
    s = normal_form(FamilyTag.C2, [7, 3])
    vertices = eckardt_vertices(s)
    assert len(vertices_on_face(vertices, 0)) == 6
    assert all(len(vertices_on_face(vertices, k)) < 6 for k in range(1, 5))
    with pytest.raises(InvalidInputException):
        vertices_on_face(vertices, 5)


def test_contains_line_on_p3_cubic(fermat):
    assert contains_line(fermat, [1, -1, 0, 0], [0, 0, 1, -1])
    assert not contains_line(fermat, [1, 0, 0, 0], [0, 1, 0, 0])


def test_contains_line_errors():
    s = SylvesterPoint([1, 2, 3, 4, 5])
    with pytest.raises(CoincidentPointsException):
        contains_line(s, PentVertex(0, 1), [2, -2, 0, 0, 0])
    with pytest.raises(InvalidInputException):
        contains_line(s, [1, 0, 0, 0, 0], PentVertex(0, 1))
    with pytest.raises(InvalidInputException):
        contains_line(CubicForm3.fermat(), [1, 0, 0], [0, 1, 0])


def test_collinear_errors():
    with pytest.raises(CoincidentPointsException):
        collinear([PentVertex(0, 1), PentVertex(1, 2)])
    with pytest.raises(CoincidentPointsException):
        collinear([PentVertex(0, 1), PentVertex(0, 1), PentVertex(1, 2)])


def test_normal_form():
    assert normal_form(FamilyTag.C1, [2, 9]) == SylvesterPoint([2, 9, 9, 9, 2])
    assert normal_form(FamilyTag.DEGENERATE, [1, 2, 3, 4]).is_degenerate
    with pytest.raises(InvalidInputException):
        normal_form(FamilyTag.S1, [1, 2])


@pytest.mark.parametrize("tag", list(FamilyTag))
def test_classify_family_roundtrip(rng, tag):
    assert classify_family(family_representative(tag, rng)) is tag


def test_classification_is_permutation_invariant(rng):
    s = family_representative(FamilyTag.S1, rng)
    for perm in itertools.permutations(range(5)):
        moved = s.permuted(perm)
        assert classify_family(moved) is FamilyTag.S1
        assert eckardt_vertices(moved) == {v.permuted(perm) for v in eckardt_vertices(s)}


def test_to_cubic_p3_keeps_eckardt_vertices():
    s = SylvesterPoint([1, 1, 2, 3, 4])
    cubic = to_cubic_p3(s)
    assert cubic.evaluate(list(PentVertex(0, 1).p3_coordinates)) == 0
    assert cubic.evaluate(list(PentVertex(2, 3).p3_coordinates)) != 0


def test_surface_report():
    report = surface_report(normal_form(FamilyTag.S1, [7, 3, 5]))
    assert report["family"] == "S1"
    assert report["count"] == 2
    assert report["involutions"] == 2
    assert report["stabilizer"]["order"] == 4
    assert report["disjoint_joins"] == [{"vertices": ["A12", "A34"], "line_in_surface": True}]
    assert report["collinear_triples"] == []
    assert report["common_faces"] == [0]

    degenerate = surface_report(SylvesterPoint([1, 1, 1, 1, 0]))
    assert degenerate["family"] == "Degenerate"
    assert "eckardt_vertices" not in degenerate
