import collections

import numpy as np
import pytest

from eckardt.arith import MultiPoly
from eckardt.exceptions import InvalidInputException, NotOnHypersurfaceException
from eckardt.invariants import Q_POINT
from eckardt.models import ComponentKind, FamilyTag, LinearComponent, ModuliPoint, SylvesterPoint
from eckardt.pentahedron import family_representative
from eckardt.singular import (
    NON_CLAIMED_TEST_PLANE, PUBLISHED_MULTIPLICITY_CLAIM, arrangement_oracle, arrangement_statistics,
    claimed_components, component_intersection, curve_endpoints, curve_family, image_family, multiplicity_at,
    salmon_along, smoothness_off_components, vanishing_transcript, verification_certificate,
    verify_component_in_singular_locus, weighted_limit
)


@pytest.fixture(scope="module")
def certificate():
    return verification_certificate(11, samples=20, sample_multiplicities=True)


def test_claimed_components():
    components = claimed_components()
    assert len(components) == 30
    assert len(set(components)) == 30
    counts = collections.Counter(c.kind for c in components)
    assert (counts[ComponentKind.HYPERPLANE], counts[ComponentKind.PAIR_PAIR], counts[ComponentKind.TRIPLE]) \
        == (5, 15, 10)


@pytest.mark.parametrize("component", claimed_components(), ids=lambda c: c.label)
def test_component_in_singular_locus(rng, component):
    assert verify_component_in_singular_locus(component, rng)


def test_arrangement_oracle_matches_claim():
    assert set(arrangement_oracle()) == set(claimed_components())
    stats = arrangement_statistics()
    assert (stats["difference_pairs"], stats["distinct_planes"], stats["pruned"]) == (45, 25, 60)


def test_test_plane_lies_on_hypersurface_but_not_in_singular_locus(rng):
    transcript = vanishing_transcript([MultiPoly.linear(row) for row in NON_CLAIMED_TEST_PLANE], rng)
    assert transcript["I100"]
    assert not all(transcript.values())


def test_smoothness_off_components():
    assert smoothness_off_components(100, seed=20220314)
    with pytest.raises(InvalidInputException):
        smoothness_off_components(0, seed=1)


@pytest.mark.parametrize("tag, multiplicity", [
    (FamilyTag.S1, 2),
    (FamilyTag.S2, 3),
    (FamilyTag.C1, 4),
    (FamilyTag.C2, 6),
    (FamilyTag.CLEBSCH, 10),
])
def test_multiplicity_on_families(rng, tag, multiplicity):
    report = multiplicity_at(family_representative(tag, rng), rng)
    assert report.multiplicity == multiplicity
    assert report.taylor_order == multiplicity
    assert report.oracles_agree
    if tag in (FamilyTag.S1, FamilyTag.S2):
        assert report.ordinary is True


@pytest.mark.slow
def test_multiplicity_oracles_agree_across_families():
    expected = {FamilyTag.S1: 2, FamilyTag.S2: 3, FamilyTag.C1: 4, FamilyTag.C2: 6, FamilyTag.CLEBSCH: 10}
    tags = list(expected)
    rng = np.random.default_rng(20220315)
    for k in range(200):
        tag = tags[k % len(tags)]
        report = multiplicity_at(family_representative(tag, rng), rng)
        assert report.multiplicity == expected[tag], report
        assert report.taylor_order == report.multiplicity, report
        assert report.oracles_agree


def test_multiplicity_on_hyperplanes(rng):
    report = multiplicity_at(SylvesterPoint([0, 1, 2, 3, 4]), rng)
    assert report.zero_coordinates == 1
    assert report.multiplicity == 18
    assert report.ordinary is None
    assert report.oracles_agree

    report = multiplicity_at(SylvesterPoint([0, 0, 1, 2, 3]), rng)
    assert report.multiplicity == 37
    assert report.oracles_agree


def test_multiplicity_off_hypersurface():
    with pytest.raises(NotOnHypersurfaceException):
        multiplicity_at(SylvesterPoint([1, 2, 3, 4, 5]))


def test_image_families(rng):
    assert image_family(LinearComponent.hyperplane(3), rng) is FamilyTag.DEGENERATE
    assert image_family(LinearComponent.pair_pair(0, 1, 2, 3), rng) is FamilyTag.S1
    assert image_family(LinearComponent.triple(0, 2, 4), rng) is FamilyTag.S2


def test_curve_families(rng):
    assert len(component_intersection(LinearComponent.pair_pair(0, 4, 1, 2), LinearComponent.triple(1, 2, 3))) == 2
    assert curve_family(LinearComponent.pair_pair(0, 4, 1, 2), LinearComponent.triple(1, 2, 3), rng) is FamilyTag.C1
    assert curve_family(LinearComponent.pair_pair(1, 2, 3, 4), LinearComponent.triple(1, 2, 3), rng) is FamilyTag.C2
    assert curve_family(LinearComponent.pair_pair(0, 1, 2, 3), LinearComponent.triple(0, 2, 4), rng) \
        is FamilyTag.CLEBSCH


def test_weighted_limit_along_c1():
    limit = weighted_limit(salmon_along([0, 1, 1, 1, 0], [1, 0, 0, 0, 1]))
    assert limit == ModuliPoint([-12, 3, 2, 3, 0])
    assert weighted_limit(salmon_along([1, 0, 0, 0, 1], [0, 1, 1, 1, 0])) == Q_POINT
    assert weighted_limit(salmon_along([1, 0, 0, 0, 0], [0, 1, 1, 1, 1])) == ModuliPoint([-8, 1, 0, 0, 0])


def test_curve_endpoints():
    endpoints = curve_endpoints()
    assert endpoints["meet_at_clebsch"] and endpoints["meet_at_q"]
    assert endpoints["C1"]["a=b"]["is_clebsch"] and endpoints["C2"]["a=b"]["is_clebsch"]
    fermat = endpoints["C2"]["a=0"]
    assert not fermat["base_locus"] and fermat["is_q"]
    assert endpoints["C1"]["a=0"]["base_locus"] and not endpoints["C1"]["a=0"]["is_q"]
    assert endpoints["C1"]["b=0"]["base_locus"] and endpoints["C1"]["b=0"]["is_q"]
    assert endpoints["C2"]["b=0"]["base_locus"] and not endpoints["C2"]["b=0"]["is_q"]


def test_certificate_verdict(certificate):
    assert certificate["ok"]
    assert certificate["verdict"] == "30/30 components verified; oracle set equal"
    assert len(certificate["components"]) == 30
    assert all(entry["all_partials_vanish"] for entry in certificate["components"])
    assert certificate["oracle"]["equal"]
    assert not all(certificate["test_plane"]["vanishing"].values())
    assert certificate["published_claim"] == PUBLISHED_MULTIPLICITY_CLAIM


def test_certificate_notes_curve_multiplicities(certificate):
    by_family = {m["family"]: m for m in certificate["multiplicities"]}
    assert by_family["S1"]["multiplicity"] == 2 and "note" not in by_family["S1"]
    assert by_family["S2"]["multiplicity"] == 3 and "note" not in by_family["S2"]
    for family, multiplicity in (("C1", 4), ("C2", 6)):
        assert by_family[family]["multiplicity"] == multiplicity
        assert by_family[family]["published_multiplicity"] == 3
        assert "note" in by_family[family]
    assert all(m["oracles_agree"] for m in certificate["multiplicities"])


def test_certificate_is_reproducible(certificate):
    assert verification_certificate(11, samples=20, sample_multiplicities=True) == certificate


def test_multiplicity_warning_is_logged(caplog):
    verification_certificate(5, samples=2, sample_multiplicities=True)
    assert any("differs from the published" in r.getMessage() for r in caplog.records)
