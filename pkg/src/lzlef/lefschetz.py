"""Weak Lefschetz property of monomial algebras R/I, with the decision tree for ACIs.

The Lefschetz element is always x+y+z; for monomial algebras over an
infinite field this is as good as a general linear form, and ranks of the
integer matrices Z(T_d(I)) over a prime field equal those over any
extension of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Any

import numpy as np

from .matrix import array_has_maximal_rank, check_characteristic, determinant
from .monomials import AciParams, MonomialIdeal, aci_ideal, is_level, socle_degrees
from .regions import build_region
from .tilings import biadjacency


@dataclass(frozen=True)
class WlpVerdict:
    has_wlp: bool
    characteristic: int
    rule: str
    critical_degrees: tuple[int, ...] = ()
    det_value: int | None = None
    obstruction_primes: tuple[int, ...] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "wlp": self.has_wlp,
            "char": self.characteristic,
            "rule": self.rule,
            "critical_degrees": list(self.critical_degrees),
            "det": None if self.det_value is None else str(self.det_value),
            "obstruction_primes": None
            if self.obstruction_primes is None
            else list(self.obstruction_primes),
        }


def prime_factors(n: int) -> tuple[int, ...]:
    from sympy import factorint

    n = abs(n)
    if n < 2:
        return ()
    return tuple(sorted(factorint(n)))


def peak_matrix(ideal: MonomialIdeal, d: int):
    """Z(T_d(I)), the transpose of x+y+z : [R/I]_{d-2} -> [R/I]_{d-1}."""
    return biadjacency(build_region(ideal, d))


def wlp_rank_scan(ideal: MonomialIdeal, characteristic: int = 0) -> WlpVerdict:
    """Check maximal rank of Z(T_d(I)) for every d up to the top socle degree plus two."""
    check_characteristic(characteristic)
    if not ideal.is_artinian:
        raise ValueError(f"{ideal} is not Artinian")
    socle = socle_degrees(ideal)
    top = max(socle) if socle else -1
    pieces = graded_bases(ideal, top + 1)
    failures = tuple(
        d
        for d in range(2, top + 3)
        if not array_has_maximal_rank(_peak_array(pieces, d), characteristic)
    )
    return WlpVerdict(not failures, characteristic, "rank-scan", failures)


def graded_bases(ideal: MonomialIdeal, top: int) -> list[list[tuple[int, int, int]]]:
    """Exponents of the monomials outside an Artinian I, by degree 0..top, descending revlex."""
    pieces: list[list[tuple[int, int, int]]] = [[] for _ in range(top + 1)]
    if ideal.pure_powers is None:  # the unit ideal
        return pieces
    a, b, c = ideal.pure_powers
    inside = ideal.contains_exponents
    for ez in range(c):
        for ey in range(b):
            for ex in range(a):
                deg = ex + ey + ez
                if deg <= top and not inside(ex, ey, ez):
                    pieces[deg].append((ex, ey, ez))
    for piece in pieces:
        piece.sort(key=lambda e: (e[2], e[1]))
    return pieces


def _peak_array(pieces: list[list[tuple[int, int, int]]], d: int) -> np.ndarray:
    downs = pieces[d - 2] if d >= 2 else []
    ups = pieces[d - 1] if 0 <= d - 1 < len(pieces) else []
    col = {u: j for j, u in enumerate(ups)}
    arr = np.zeros((len(downs), len(ups)), dtype=np.int64)
    for i, (ex, ey, ez) in enumerate(downs):
        for u in ((ex + 1, ey, ez), (ex, ey + 1, ez), (ex, ey, ez + 1)):
            j = col.get(u)
            if j is not None:
                arr[i, j] = 1
    return arr


def wlp_peak(ideal: MonomialIdeal, d: int, characteristic: int = 0) -> WlpVerdict:
    """Decide the WLP from det Z(T_d(I)) alone.

    Valid when T_d(I) is balanced and R/I has no socle below degree d-2: the
    map at the peak is then square and its bijectivity settles every degree.
    """
    check_characteristic(characteristic)
    region = build_region(ideal, d)
    if not region.is_balanced:
        raise ValueError(f"T_{d}(I) is not balanced; use wlp_rank_scan")
    low = [s for s in socle_degrees(ideal) if s < d - 2]
    if low:
        raise ValueError(f"R/I has socle in degree {min(low)} < d-2 = {d - 2}; use wlp_rank_scan")
    det = determinant(biadjacency(region))
    nonzero = det % characteristic != 0 if characteristic else det != 0
    return WlpVerdict(
        has_wlp=nonzero,
        characteristic=characteristic,
        rule="determinant",
        critical_degrees=() if nonzero else (d,),
        det_value=det,
        obstruction_primes=prime_factors(det) if characteristic == 0 and det else None,
    )


@dataclass(frozen=True)
class AciConditions:
    """The four hypotheses of the ACI weak Lefschetz theorem, evaluated at d = total/3."""

    d: Fraction
    punctures_nonnegative: bool  # (i)   max{a, b, c, alpha+beta+gamma} <= d
    mixed_lcms_large: bool  # (ii)  min{alpha+beta+c, alpha+b+gamma, a+beta+gamma} >= d
    pure_lcms_large: bool  # (iii) min{a+b, a+c, b+c} >= d
    d_integer: bool  # (iv)

    @property
    def semistable(self) -> bool:
        return self.punctures_nonnegative and self.mixed_lcms_large and self.pure_lcms_large

    @property
    def all_hold(self) -> bool:
        return self.semistable and self.d_integer

    def as_dict(self) -> dict[str, bool]:
        return {
            "i": self.punctures_nonnegative,
            "ii": self.mixed_lcms_large,
            "iii": self.pure_lcms_large,
            "iv": self.d_integer,
        }


def mixed_lcm_degrees(p: AciParams) -> tuple[int, int, int]:
    """Degrees of lcm(z^c, m), lcm(y^b, m), lcm(x^a, m) for the mixed generator m."""
    return (
        p.alpha + p.beta + p.c,
        p.alpha + p.b + p.gamma,
        p.a + p.beta + p.gamma,
    )


def aci_conditions(p: AciParams) -> AciConditions:
    d = p.d
    return AciConditions(
        d=d,
        punctures_nonnegative=max(p.a, p.b, p.c, p.alpha + p.beta + p.gamma) <= d,
        mixed_lcms_large=min(mixed_lcm_degrees(p)) >= d,
        pure_lcms_large=min(p.a + p.b, p.a + p.c, p.b + p.c) >= d,
        d_integer=p.d_is_integer,
    )


@dataclass(frozen=True)
class AxesCentral:
    case: int
    A: int
    B: int
    C: int
    M: int
    all_odd: bool
    permutation: tuple[int, int, int] = field(default=(0, 1, 2))


def axes_central_form(p: AciParams) -> AxesCentral | None:
    """Match T_d(I) against the two axes-central shapes, up to relabelling the variables."""
    if not aci_conditions(p).all_hold:
        return None
    d = int(p.d)
    for perm in permutations(range(3)):
        q = p.permuted(perm)
        A, B, C = d - q.a, d - q.b, d - q.c
        M = d - (q.alpha + q.beta + q.gamma)
        all_odd = all(v % 2 for v in (A, B, C, M))
        if A % 2 == B % 2 == C % 2:
            if (2 * q.alpha, 2 * q.beta, 2 * q.gamma) == (B + C, A + C, A + B):
                return AxesCentral(1, A, B, C, M, all_odd, perm)
        elif A % 2 == B % 2:
            if (2 * q.alpha, 2 * q.beta, 2 * q.gamma) == (B + C + 1, A + C - 1, A + B):
                return AxesCentral(2, A, B, C, M, all_odd, perm)
    return None


def gravity_central(p: AciParams) -> bool:
    """Whether the inner puncture of T_d(I) is equidistant from the three corner punctures.

    Evaluated with the rational d; the condition does not depend on d.
    """
    d = p.d
    return (d - p.b) + (d - p.c) - p.alpha == (d - p.a) + (d - p.c) - p.beta == (
        d - p.a
    ) + (d - p.b) - p.gamma


def char_bound(a: int, b: int, c: int) -> int:
    """3^(C((a+b+c)/2 + 2, 2) / 2), exponent rounded up; WLP in char 0 transfers above it."""
    x = Fraction(a + b + c, 2) + 2
    exponent = math.ceil(x * (x - 1) / 4)
    return 3**exponent


def aci_wlp(p: AciParams, characteristic: int = 0) -> WlpVerdict:
    """Decide the WLP of R/I_{a,b,c,alpha,beta,gamma}.

    In characteristic zero the theorem cases are tried in a fixed order and
    the first that applies names the rule; when none applies the peak
    determinant decides.  Positive characteristic goes through the rank scan.
    """
    check_characteristic(characteristic)
    ideal = aci_ideal(p)
    if characteristic:
        return wlp_rank_scan(ideal, characteristic)

    conds = aci_conditions(p)
    if not conds.all_hold:
        return WlpVerdict(True, 0, "(a)")
    d = int(conds.d)

    if min(mixed_lcm_degrees(p)) == d:
        return WlpVerdict(True, 0, "(I)")
    if (d - p.alpha - p.beta - p.gamma) % 2 == 0:
        # inner puncture of even side length
        return WlpVerdict(True, 0, "(II)")
    if 2 * p.c == p.a + p.b + p.alpha + p.beta + p.gamma:
        return WlpVerdict(True, 0, "(III)")
    axes = axes_central_form(p)
    if axes is not None:
        if axes.all_odd:
            return WlpVerdict(False, 0, "(IV')", (d,))
        return WlpVerdict(True, 0, "(IV)")
    if p.a == p.b and p.alpha == p.beta:
        if p.c % 2 and p.gamma % 2:
            return WlpVerdict(False, 0, "(V')", (d,))
        return WlpVerdict(True, 0, "(V)")
    return wlp_peak(ideal, d, 0)


__all__ = [
    "AciConditions",
    "AxesCentral",
    "WlpVerdict",
    "aci_conditions",
    "aci_wlp",
    "axes_central_form",
    "char_bound",
    "gravity_central",
    "is_level",
    "mixed_lcm_degrees",
    "peak_matrix",
    "prime_factors",
    "wlp_peak",
    "wlp_rank_scan",
]
