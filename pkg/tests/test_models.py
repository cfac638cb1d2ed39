import json

import pytest

from eckardt.exceptions import InputParseException, InvalidInputException, JsonSchemaException
from eckardt.models import (
    ComponentKind, CubicForm3, FamilyTag, LinearComponent, ModuliPoint, MultiplicityReport, PentVertex, PermSubgroup,
    SylvesterPoint
)


def test_sylvester_point_json():
    s = SylvesterPoint.from_json_text('{"sylvester": ["1", "-2/3", 0, 4, 5]}')
    assert s == SylvesterPoint([3, -2, 0, 12, 15])
    assert s.zero_count == 1 and s.is_degenerate
    with pytest.raises(InputParseException):
        SylvesterPoint.from_json_text("{")
    with pytest.raises(JsonSchemaException):
        SylvesterPoint.from_json_text('{"coeffs": [1, 2, 3, 4, 5]}')
    with pytest.raises(JsonSchemaException):
        SylvesterPoint.from_json_text('{"sylvester": ["1", "2", "3", "4", "0.5"]}')


def test_sylvester_point_is_projective():
    assert SylvesterPoint([2, 4, 6, 8, 10]) == SylvesterPoint([-1, -2, -3, -4, -5])
    assert hash(SylvesterPoint([2, 4, 6, 8, 10])) == hash(SylvesterPoint([1, 2, 3, 4, 5]))
    with pytest.raises(InvalidInputException):
        SylvesterPoint([1, 2, 3, 4, 5]).scaled(0)


def test_moduli_point_json():
    p = ModuliPoint([1, 2, 3, 4, 5])
    assert ModuliPoint.from_json_text(json.dumps(p.to_json_data())) == p
    with pytest.raises(JsonSchemaException):
        ModuliPoint.from_json_text('{"moduli": ["1", "2", "3", "4", "5"], "weights": [1, 1, 1, 1, 1]}')
    assert str(ModuliPoint([1, 0, 0, 0, 0])) == "(1:0:0:0:0)"


def test_pent_vertex():
    v = PentVertex(3, 1)
    assert v.pair == (1, 3)
    assert v.label == "A13"
    assert v.faces == (0, 2, 4)
    assert sum(v.coordinates) == 0
    assert v.permuted((1, 0, 2, 4, 3)) == PentVertex(0, 4)
    with pytest.raises(InvalidInputException):
        PentVertex(2, 2)


def test_linear_component_normalization():
    c = LinearComponent(ComponentKind.PAIR_PAIR, (4, 3, 1, 2))
    assert c.indices == (1, 2, 3, 4)
    assert c.label == "V(a1-a2, a3-a4)"
    assert c.contains(SylvesterPoint([9, 2, 2, 5, 5]))
    assert not c.contains(SylvesterPoint([9, 2, 2, 5, 6]))
    assert LinearComponent.triple(4, 0, 2).label == "V(a0-a2, a4-a2)"
    for component in (c, LinearComponent.triple(0, 1, 2), LinearComponent.hyperplane(2)):
        point = component.point(range(1, component.parameter_count + 1))
        assert component.contains(point)
    with pytest.raises(InvalidInputException):
        LinearComponent(ComponentKind.TRIPLE, (0, 1))


def test_perm_subgroup_summary():
    group = PermSubgroup([(0, 1, 2, 3, 4), (1, 0, 2, 3, 4), (0, 1, 3, 2, 4), (1, 0, 3, 2, 4)])
    assert group.summary() == {"order": 4, "abelian": True, "element_orders": {"1": 1, "2": 3}}
    assert len(group.transpositions()) == 2
    assert (1, 0, 2, 3, 4) in group


def test_cubic_form():
    f = CubicForm3.fermat()
    assert CubicForm3.from_json_text(json.dumps(f.to_json_data())) == f
    with pytest.raises(InvalidInputException):
        CubicForm3.from_coefficients([1] * 19)
    with pytest.raises(InvalidInputException):
        CubicForm3.from_coefficients([0] * 20)


def test_multiplicity_report_json():
    report = MultiplicityReport(SylvesterPoint([1, 2, 2, 3, 3]), vanishing_factors=[(1, 2), (3, 4)],
                                zero_coordinates=0, ordinary=True, taylor_order=2, direction_orders=[2, 2, 2])
    assert report.multiplicity == 2 and report.oracles_agree
    restored = MultiplicityReport.from_json_text(json.dumps(report.to_json_data()))
    assert restored.vanishing_factors == [(1, 2), (3, 4)]
    assert restored.point == report.point


def test_family_tag_json():
    assert FamilyTag.from_json_text('"C2"') is FamilyTag.C2
    with pytest.raises(JsonSchemaException):
        FamilyTag.from_json_text('"C3"')


def test_perm_subgroup_must_be_closed():
    with pytest.raises(InvalidInputException):
        PermSubgroup([(0, 1, 2, 3, 4), (1, 2, 0, 3, 4)])
    with pytest.raises(InvalidInputException):
        PermSubgroup([(1, 0, 2, 3, 4)])
