"""Triangular regions T_d(I), their punctures, monomial subregions and J(T).

A unit triangle is addressed by its label alone: upward triangles carry the
degree d-1 monomials, downward ones the degree d-2 monomials.  The puncture
of a generator g is the closed upward triangle {u >= g_x, v >= g_y, w >= g_z}
in barycentric coordinates u + v + w = d, so two punctures meet in a triangle
of side d - deg lcm; positive means overlap, zero a single shared vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .monomials import ONE, Monomial, MonomialIdeal, minimize, monomials_of_degree


class Relation(str, Enum):
    DISJOINT = "disjoint"
    TOUCHING = "touching"
    OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class Puncture:
    generator: Monomial
    side_length: int

    @property
    def anchor(self) -> tuple[int, int, int]:
        """Distances from the bottom, upper-right and upper-left edges."""
        return self.generator.exponents

    @property
    def touches_boundary(self) -> bool:
        return 0 in self.generator.exponents

    def __str__(self) -> str:
        return f"{self.generator}[{self.side_length}]"


@dataclass(frozen=True)
class TriangularRegion:
    d: int
    ideal: MonomialIdeal
    up_triangles: tuple[Monomial, ...]
    down_triangles: tuple[Monomial, ...]
    punctures: tuple[Puncture, ...]

    @property
    def balance(self) -> int:
        return len(self.up_triangles) - len(self.down_triangles)

    @property
    def is_balanced(self) -> bool:
        return self.balance == 0

    @property
    def is_empty(self) -> bool:
        return not self.up_triangles and not self.down_triangles

    @cached_property
    def up_set(self) -> frozenset[Monomial]:
        return frozenset(self.up_triangles)

    @cached_property
    def down_set(self) -> frozenset[Monomial]:
        return frozenset(self.down_triangles)

    def __contains__(self, label: Monomial) -> bool:
        return label in self.up_set or label in self.down_set

    def __str__(self) -> str:
        return f"T_{self.d}{self.ideal}"


def build_region(ideal: MonomialIdeal, d: int) -> TriangularRegion:
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    ups = tuple(ideal.basis(d - 1))
    downs = tuple(ideal.basis(d - 2))
    punctures = tuple(
        Puncture(g, d - g.degree) for g in ideal.generators if g.degree <= d
    )
    return TriangularRegion(d, ideal, ups, downs, punctures)


def puncture_relation(p1: Puncture, p2: Puncture, d: int) -> Relation:
    side = d - p1.generator.lcm(p2.generator).degree
    if side > 0:
        return Relation.OVERLAPPING
    if side == 0:
        return Relation.TOUCHING
    return Relation.DISJOINT


def monomial_subregion(region: TriangularRegion, m: Monomial) -> TriangularRegion:
    """The part of ``region`` inside the triangle cut out by ``m``, relabelled by division.

    This is T_{d - deg m}(I : m).
    """
    if m.degree >= region.d:
        raise ValueError(f"deg {m} = {m.degree} is not below d = {region.d}")
    return build_region(region.ideal.colon(m), region.d - m.degree)


def over_puncturing(ideal: MonomialIdeal, d: int) -> int:
    """Sum of the puncture side lengths in degree d, minus d."""
    return sum(d - g.degree for g in ideal.generators if g.degree <= d) - d


def region_ideal(region: TriangularRegion) -> MonomialIdeal:
    """J(T): the largest ideal generated in degrees below d with T_d(J) = T."""
    d = region.d
    present = region.up_set | region.down_set
    cands = []
    for e in range(d):
        for m in monomials_of_degree(e):
            if not any(m.divides(label) for label in present):
                cands.append(m)
    if not cands:
        return MonomialIdeal(())  # nothing removed: the zero ideal
    return minimize(cands)


def over_puncturing_region(region: TriangularRegion) -> int:
    return over_puncturing(region_ideal(region), region.d)


def is_perfectly_punctured(region: TriangularRegion) -> bool:
    return over_puncturing_region(region) == 0


@dataclass(frozen=True)
class PunctureClasses:
    floating: tuple[Puncture, ...]
    non_floating: tuple[Puncture, ...]


def classify_punctures(region: TriangularRegion) -> PunctureClasses:
    punctures = region.punctures
    anchored = {i for i, p in enumerate(punctures) if p.touches_boundary}
    frontier = list(anchored)
    while frontier:
        i = frontier.pop()
        for j, q in enumerate(punctures):
            if j in anchored:
                continue
            if puncture_relation(punctures[i], q, region.d) is not Relation.DISJOINT:
                anchored.add(j)
                frontier.append(j)
    return PunctureClasses(
        floating=tuple(p for i, p in enumerate(punctures) if i not in anchored),
        non_floating=tuple(p for i, p in enumerate(punctures) if i in anchored),
    )


def proper_subregion_monomials(region: TriangularRegion) -> list[Monomial]:
    """Monomials m != 1 of degree < d whose subregion still contains a triangle of ``region``."""
    present = region.up_set | region.down_set
    out = []
    for e in range(1, region.d):
        for m in monomials_of_degree(e):
            if any(m.divides(label) for label in present):
                out.append(m)
    return out


def triangle_counts(region: TriangularRegion, m: Monomial = ONE) -> tuple[int, int]:
    """(#up, #down) triangles of ``region`` inside the subregion of ``m``."""
    ups = sum(1 for u in region.up_triangles if m.divides(u))
    downs = sum(1 for v in region.down_triangles if m.divides(v))
    return ups, downs
