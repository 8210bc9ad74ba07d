"""Lozenge tilings, weak Lefschetz property and syzygy bundles of monomial ideals in K[x,y,z]."""

from __future__ import annotations

from .bundles import (
    SplittingType,
    StabilityReport,
    aci_semistable,
    equivalence_check,
    hilbert_oracle,
    regularity_2var,
    semistability,
    splitting_type_formula,
    splitting_type_oracle,
    stability_region,
    two_of_three,
)
from .lefschetz import (
    WlpVerdict,
    aci_wlp,
    axes_central_form,
    char_bound,
    gravity_central,
    wlp_peak,
    wlp_rank_scan,
)
from .matrix import IntegerMatrix, determinant, permanent, rank
from .monomials import AciParams, Monomial, MonomialIdeal, aci_ideal, is_level, socle_degrees
from .regions import TriangularRegion, build_region, classify_punctures, over_puncturing, region_ideal
from .tilings import Tiling, biadjacency, count_tilings, enumerate_tilings, is_tileable_matching

__version__ = "0.1.0"

__all__ = [
    "AciParams",
    "IntegerMatrix",
    "Monomial",
    "MonomialIdeal",
    "SplittingType",
    "StabilityReport",
    "Tiling",
    "TriangularRegion",
    "WlpVerdict",
    "aci_ideal",
    "aci_semistable",
    "aci_wlp",
    "axes_central_form",
    "biadjacency",
    "build_region",
    "char_bound",
    "classify_punctures",
    "count_tilings",
    "determinant",
    "enumerate_tilings",
    "equivalence_check",
    "gravity_central",
    "hilbert_oracle",
    "is_level",
    "is_tileable_matching",
    "over_puncturing",
    "permanent",
    "rank",
    "region_ideal",
    "regularity_2var",
    "semistability",
    "socle_degrees",
    "splitting_type_formula",
    "splitting_type_oracle",
    "stability_region",
    "two_of_three",
    "wlp_peak",
    "wlp_rank_scan",
]
