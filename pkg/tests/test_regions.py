from __future__ import annotations

import pytest

from lzlef.monomials import AciParams, Monomial, MonomialIdeal, aci_ideal
from lzlef.regions import (
    Relation,
    build_region,
    classify_punctures,
    is_perfectly_punctured,
    monomial_subregion,
    over_puncturing,
    over_puncturing_region,
    proper_subregion_monomials,
    puncture_relation,
    region_ideal,
    triangle_counts,
)

SIX_PUNCTURES = "x^7,y^7,z^6,xy^4z^2,x^3yz^2,x^4yz"
I1 = "x^5,y^5,z^5,xyz^2,xy^2z,x^2yz"
I2 = "x^5,y^5,z^5,xyz"


def ideal(text: str) -> MonomialIdeal:
    return MonomialIdeal.parse(text)


def labels(ms) -> list[str]:
    return [str(x) for x in ms]


def test_small_region():
    region = build_region(ideal("xy,y^2,z^3"), 4)
    assert labels(region.up_triangles) == ["x^3", "x^2z", "xz^2", "yz^2"]
    assert labels(region.down_triangles) == ["x^2", "xz", "yz", "z^2"]
    assert region.is_balanced
    assert sorted(str(p) for p in region.punctures) == ["xy[2]", "y^2[2]", "z^3[1]"]


def test_full_triangle_counts():
    region = build_region(ideal("x^9,y^9,z^9"), 5)
    assert len(region.up_triangles) == 15
    assert len(region.down_triangles) == 10
    assert region.balance == 5


def test_six_puncture_classification():
    classes = classify_punctures(build_region(ideal(SIX_PUNCTURES), 8))
    assert sorted(str(p) for p in classes.non_floating) == ["x^7[1]", "y^7[1]", "z^6[2]"]
    assert sorted(str(p) for p in classes.floating) == ["x^3yz^2[2]", "x^4yz[2]", "xy^4z^2[1]"]


def test_six_puncture_overlap_and_disjoint():
    region = build_region(ideal(SIX_PUNCTURES), 8)
    by_gen = {str(p.generator): p for p in region.punctures}
    assert puncture_relation(by_gen["x^3yz^2"], by_gen["x^4yz"], 8) is Relation.OVERLAPPING
    assert puncture_relation(by_gen["xy^4z^2"], by_gen["x^4yz"], 8) is Relation.DISJOINT


def test_touching():
    region = build_region(ideal("x^2,y^2,z^2"), 4)
    px, py, _ = region.punctures
    assert puncture_relation(px, py, 4) is Relation.TOUCHING


def test_i1_punctures_pairwise_overlap():
    region = build_region(ideal(I1), 6)
    inner = [p for p in region.punctures if not p.touches_boundary]
    assert len(inner) == 3
    for i in range(3):
        for j in range(i + 1, 3):
            assert puncture_relation(inner[i], inner[j], 6) is Relation.OVERLAPPING


def test_over_puncturing_values():
    assert over_puncturing(ideal(I1), 6) == 3
    assert over_puncturing(ideal(I2), 6) == 0


def test_region_ideal_of_i1():
    region = build_region(ideal(I1), 6)
    assert sorted(labels(region_ideal(region).generators)) == sorted(["x^5", "y^5", "z^5", "xyz"])
    assert build_region(ideal(I2), 6).up_triangles == region.up_triangles
    assert over_puncturing_region(region) == 0
    assert is_perfectly_punctured(region)


def test_region_ideal_of_full_triangle_is_zero():
    region = build_region(ideal("x^9,y^9,z^9"), 4)
    assert region_ideal(region).generators == ()


def test_monomial_subregion_example():
    region = build_region(ideal(SIX_PUNCTURES), 8)
    sub = monomial_subregion(region, Monomial.parse("xy^2z"))
    assert sub.d == 4
    assert (len(sub.up_triangles), len(sub.down_triangles)) == (7, 6)
    # the subregion is the part of the region divisible by xy^2z
    assert triangle_counts(region, Monomial.parse("xy^2z")) == (7, 6)


def test_subregion_degree_guard():
    region = build_region(ideal(SIX_PUNCTURES), 8)
    with pytest.raises(ValueError):
        monomial_subregion(region, Monomial.parse("x^4y^4"))


def test_side_zero_punctures_are_kept():
    region = build_region(ideal("x^4,y^4,z^4,xyz"), 4)
    sides = {str(p.generator): p.side_length for p in region.punctures}
    assert sides == {"x^4": 0, "y^4": 0, "z^4": 0, "xyz": 1}
    assert len(region.up_triangles) == 10 - 1


def test_generators_above_d_ignored():
    region = build_region(ideal("x^9,y^9,z^9"), 4)
    assert region.punctures == ()


def test_empty_region_and_bad_degree():
    region = build_region(ideal("x,y,z"), 3)
    assert region.is_empty
    with pytest.raises(ValueError):
        build_region(ideal("x,y,z"), 0)


def test_proper_subregions_exclude_one():
    region = build_region(ideal("x^2,y^2,z^2,xy,xz,yz"), 3)
    ms = proper_subregion_monomials(region)
    assert Monomial() not in ms
    assert labels(ms) == ["x", "y", "z"]


@pytest.mark.parametrize("params, d", [((6, 7, 8, 3, 3, 3), 10), ((7, 7, 7, 3, 3, 3), 10)])
def test_semistable_aci_region_is_balanced_and_perfect(params, d):
    region = build_region(aci_ideal(AciParams(*params)), d)
    assert region.is_balanced
    assert over_puncturing(region.ideal, d) == 0
