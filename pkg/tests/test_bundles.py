from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from lzlef.bundles import (
    SplittingType,
    aci_semistable,
    bundle_report,
    equivalence_check,
    hilbert_oracle,
    regularity_2var,
    regularity_2var_oracle,
    semistability,
    splitting_type_formula,
    splitting_type_oracle,
    stability_region,
    two_of_three,
)
from lzlef.monomials import AciParams, Monomial, MonomialIdeal, aci_ideal
from lzlef.regions import build_region, region_ideal
from lzlef.tilings import is_tileable_matching


def ideal(text: str) -> MonomialIdeal:
    return MonomialIdeal.parse(text)


def test_splitting_type_validation():
    with pytest.raises(ValueError):
        SplittingType(-1, -2, -3)
    assert SplittingType.of((-1, -3, -2)).as_tuple() == (-3, -2, -1)
    assert SplittingType.of((-1, -3, -2)).total == -6


def test_stability_ladder():
    stable = semistability(ideal("x^2,y^2,z^2,xy,xz,yz"), 3)
    assert stable.semistable and stable.stable and stable.witness is None
    semi = semistability(ideal("x^2,y^2,z^2,xy,xz"), 3)
    assert semi.semistable and not semi.stable
    assert semi.witness_gcd == Monomial.parse("x")
    unstable = semistability(ideal("x^3,y^3,z^3,xyz,x^2y,x^2z"), 4)
    assert not unstable.semistable and not unstable.stable
    assert unstable.witness_gcd == Monomial.parse("x^2")


def test_slope_bound():
    rep = semistability(ideal("x^2,y^2,z^2,xy,xz,yz"), 3)
    assert rep.slope_bound == Fraction(-12, 5)


def test_semistability_guards():
    with pytest.raises(ValueError):
        semistability(ideal("x^2,y^2"))
    with pytest.raises(ValueError):
        semistability(ideal("x^2,y^2,z^2,xy"), 1)
    with pytest.raises(ValueError):
        semistability(ideal("x^2,y^2,xz"))


@pytest.mark.parametrize(
    "params, expected",
    [((5, 5, 3, 1, 1, 2), False), ((7, 7, 7, 3, 3, 3), True), ((6, 7, 8, 3, 3, 3), True)],
)
def test_aci_semistable(params, expected):
    ok, trace = aci_semistable(AciParams(*params))
    assert ok == expected
    assert set(trace) == {"i", "ii", "iii"}
    if params == (5, 5, 3, 1, 1, 2):
        assert trace == {"i": True, "ii": False, "iii": True}


def test_aci_semistable_matches_subset_criterion():
    for a, b, c in itertools.product(range(2, 7), repeat=3):
        for x, y, z in itertools.product(range(1, a), range(1, b), range(1, c)):
            p = AciParams(a, b, c, x, y, z)
            assert aci_semistable(p)[0] == semistability(aci_ideal(p)).semistable


def test_two_of_three_examples():
    t = two_of_three(ideal("x^5,y^5,z^5,xyz"), 6)
    assert (t.perfectly_punctured, t.tileable, t.semistable) == (True, True, True)
    t = two_of_three(ideal("x^3,y^3,z^3,xyz,x^2y,x^2z"), 4)
    assert (t.perfectly_punctured, t.tileable, t.semistable) == (False, False, False)
    assert t.consistent
    with pytest.raises(ValueError):
        two_of_three(ideal("x,y,z"), 3)


def test_extra_j_generators_break_semistability():
    i1 = ideal("x^5,y^5,z^5,xyz^2,xy^2z,x^2yz")
    region = build_region(i1, 6)
    assert any(g not in i1 for g in region_ideal(region).generators)
    assert is_tileable_matching(region)
    assert not semistability(i1, 6).semistable


def test_stability_region_agrees():
    i2 = ideal("x^5,y^5,z^5,xyz")
    assert stability_region(i2, 6) == semistability(i2, 6).stable
    for n in range(2, 7):
        ci = ideal(f"x^{n},y^{n},z^{n}")
        d = -(-3 * n // 2)
        if n % 2 == 0:
            assert stability_region(ci, d) == semistability(ci, d).stable


def test_stability_region_guards():
    with pytest.raises(ValueError, match="tileable"):
        stability_region(ideal("x^3,y^3,z^3,xyz,x^2y,x^2z"), 4)
    with pytest.raises(ValueError):
        stability_region(ideal("x^5,y^5,z^5,xyz^2,xy^2z,x^2yz"), 6)


def test_regularity_examples():
    assert regularity_2var(4, 5, 3, 1, 1) == 7
    assert regularity_2var(5, 4, 1, 3, 1) == regularity_2var(4, 5, 3, 1, 1)
    with pytest.raises(ValueError):
        regularity_2var(2, 2, 2, 1, 1)
    # the mixed form lies in (x^2, y^2) once its degree reaches 3
    with pytest.raises(ValueError, match="minimal"):
        regularity_2var(2, 2, 1, 1, 1)


def test_regularity_against_oracle():
    for a, b in itertools.product(range(1, 9), repeat=2):
        for x, y in itertools.product(range(a), range(b)):
            for g in range(1, a + b):
                try:
                    value = regularity_2var(a, b, x, y, g)
                except ValueError:
                    continue
                assert value == regularity_2var_oracle(a, b, x, y, g), (a, b, x, y, g)


def test_hilbert_oracle_edges():
    p = AciParams(7, 7, 7, 3, 3, 3)
    dims = hilbert_oracle(p)
    assert dims[0] == 1
    assert all(dims[t] == 0 for t in range(p.a + p.b, p.total + 1))
    with pytest.raises(ValueError):
        hilbert_oracle(p, 6)


@pytest.mark.parametrize(
    "params, expected",
    [
        ((7, 7, 7, 3, 3, 3), (-11, -10, -9)),
        ((6, 7, 8, 3, 3, 3), (-10, -10, -10)),
        ((4, 5, 5, 3, 1, 1), (-7, -6, -6)),
        ((2, 4, 7, 1, 1, 1), (-7, -5, -4)),
    ],
)
def test_splitting_types(params, expected):
    p = AciParams(*params)
    assert splitting_type_oracle(p).as_tuple() == expected
    assert splitting_type_formula(p)[0].as_tuple() == expected


def test_formula_case_tags():
    assert splitting_type_formula(AciParams(4, 5, 5, 3, 1, 1))[1] == "(iv)"
    assert splitting_type_formula(AciParams(7, 7, 7, 3, 3, 3))[1] == "semistable 3k, no WLP"
    assert splitting_type_formula(AciParams(6, 7, 8, 3, 3, 3))[1] == "semistable 3k, WLP"
    p = AciParams(5, 5, 3, 1, 1, 2)
    split, case = splitting_type_formula(p)
    assert case.startswith("(")
    assert split == splitting_type_oracle(p)


def test_formula_permutation_invariant():
    p = AciParams(4, 5, 5, 3, 1, 1)
    for perm in itertools.permutations(range(3)):
        assert splitting_type_formula(p.permuted(perm))[0] == splitting_type_formula(p)[0]


def test_semistable_gap_rule():
    for a, b, c in itertools.product(range(2, 7), repeat=3):
        for x, y, z in itertools.product(range(1, a), range(1, b), range(1, c)):
            p = AciParams(a, b, c, x, y, z)
            if not aci_semistable(p)[0]:
                continue
            s = splitting_type_oracle(p)
            k = p.total // 3
            assert (s.q - s.p <= 1 and s.r - s.q <= 1) or s.as_tuple() == (-k - 1, -k, -k + 1)


def test_extraneous_generator_degree_appears():
    for a, b, c in itertools.product(range(2, 7), repeat=3):
        for x, y, z in itertools.product(range(1, a), range(1, b), range(1, c)):
            p = AciParams(a, b, c, x, y, z)
            split, case = splitting_type_formula(p)
            if case not in ("(i)", "(ii)", "(iii)"):
                continue
            degs = {-v for v in splitting_type_oracle(p).as_tuple()}
            s = sorted((a, b, c))
            dropped = {"(i)": s[2], "(ii)": x + y + z, "(iii)": s[2]}[case]
            assert dropped in degs


def test_equivalence_examples():
    p = AciParams(6, 7, 8, 3, 3, 3)
    r0 = equivalence_check(p, 0)
    assert (r0.wlp, r0.det_nonzero, r0.balanced_splitting) == (True, True, True)
    r7 = equivalence_check(p, 7)
    assert (r7.wlp, r7.det_nonzero, r7.balanced_splitting) == (False, False, False)
    q = AciParams(7, 7, 7, 3, 3, 3)
    rq = equivalence_check(q, 0)
    assert (rq.wlp, rq.det_nonzero, rq.balanced_splitting) == (False, False, False)
    with pytest.raises(ValueError):
        equivalence_check(AciParams(5, 5, 3, 1, 1, 2), 0)


def test_bundle_report_shape():
    rep = bundle_report(aci_ideal(AciParams(7, 7, 7, 3, 3, 3)), None, AciParams(7, 7, 7, 3, 3, 3))
    assert rep == {
        "semistable": True,
        "stable": True,
        "witness": None,
        "splitting_type": [-11, -10, -9],
        "case": "semistable 3k, no WLP",
    }
    rep = bundle_report(ideal("x^2,y^2,z^2,xy,xz"), 3)
    assert rep["semistable"] and not rep["stable"]
    assert rep["splitting_type"] is None
