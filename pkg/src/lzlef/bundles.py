"""Semistability of syzygy bundles and generic splitting types.

Splitting types are read off the restriction to the line x+y+z = 0, where
R/(I, x+y+z) is S/J with S = K[x, y] and
J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Any, Sequence

from .lefschetz import aci_conditions, aci_wlp, mixed_lcm_degrees, wlp_rank_scan
from .matrix import IntegerMatrix, check_characteristic, determinant, determinant_mod, rank
from .monomials import ONE, AciParams, Monomial, MonomialIdeal, aci_ideal
from .regions import (
    build_region,
    over_puncturing,
    over_puncturing_region,
    proper_subregion_monomials,
    region_ideal,
    triangle_counts,
)
from .tilings import biadjacency, is_tileable_matching


@dataclass(frozen=True, order=True)
class SplittingType:
    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        if not self.p <= self.q <= self.r:
            raise ValueError(f"splitting type must be nondecreasing, got {self.as_tuple()}")

    @classmethod
    def of(cls, values: Sequence[int]) -> SplittingType:
        p, q, r = sorted(values)
        return cls(p, q, r)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def total(self) -> int:
        return self.p + self.q + self.r


@dataclass(frozen=True)
class StabilityReport:
    semistable: bool
    stable: bool
    witness: tuple[Monomial, ...] | None
    slope_bound: Fraction

    @property
    def witness_gcd(self) -> Monomial | None:
        if self.witness is None:
            return None
        g = self.witness[0]
        for h in self.witness[1:]:
            g = g.gcd(h)
        return g


def semistability(ideal: MonomialIdeal, d: int | None = None) -> StabilityReport:
    """Subset criterion for (semi)stability of the syzygy bundle of a monomial ideal.

    For every proper subset J of at least two generators, the slope
    (deg gcd_J - sum_J deg g) / (|J| - 1) is compared with -sum deg g / (m - 1).
    The over-puncturing form in degree ``d`` is evaluated alongside and must
    reach the same verdict on every subset.
    """
    gens = ideal.generators
    m = len(gens)
    if m < 3:
        raise ValueError(f"need at least three generators, got {m}")
    if not ideal.is_artinian:
        raise ValueError(f"{ideal} is not Artinian")
    if d is None:
        d = max(g.degree for g in gens)
    if any(g.degree > d for g in gens):
        raise ValueError(f"{ideal} has a generator of degree above d = {d}")

    degs = [g.degree for g in gens]
    bound = Fraction(-sum(degs), m - 1)
    o_bound = Fraction(over_puncturing(ideal, d), m - 1)
    violating = tight = None
    for size in range(2, m):
        for subset in combinations(range(m), size):
            g_j = gens[subset[0]]
            for i in subset[1:]:
                g_j = g_j.gcd(gens[i])
            lhs = Fraction(g_j.degree - sum(degs[i] for i in subset), size - 1)
            o_lhs = Fraction(sum(d - degs[i] for i in subset) - d + g_j.degree, size - 1)
            if (lhs > bound) != (o_lhs > o_bound) or (lhs == bound) != (o_lhs == o_bound):
                raise AssertionError("slope and over-puncturing forms disagree")  # pragma: no cover
            if lhs > bound and violating is None:
                violating = subset
            elif lhs == bound and tight is None:
                tight = subset
    chosen = violating if violating is not None else tight
    return StabilityReport(
        semistable=violating is None,
        stable=violating is None and tight is None,
        witness=None if chosen is None else tuple(gens[i] for i in chosen),
        slope_bound=bound,
    )


def aci_semistable(p: AciParams) -> tuple[bool, dict[str, bool]]:
    """Explicit semistability test for ACIs; the trace maps (i), (ii), (iii) to their truth values."""
    conds = aci_conditions(p)
    trace = conds.as_dict()
    del trace["iv"]
    return conds.semistable, trace


@dataclass(frozen=True)
class TwoOfThree:
    perfectly_punctured: bool
    tileable: bool
    semistable: bool

    @property
    def consistent(self) -> bool:
        # any two of the three force the third
        return sum((self.perfectly_punctured, self.tileable, self.semistable)) != 2


def two_of_three(ideal: MonomialIdeal, d: int) -> TwoOfThree:
    region = build_region(ideal, d)
    if region.is_empty:
        raise ValueError(f"T_{d}{ideal} is empty")
    return TwoOfThree(
        perfectly_punctured=over_puncturing(ideal, d) == 0,
        tileable=is_tileable_matching(region),
        semistable=semistability(ideal, d).semistable,
    )


def stability_region(ideal: MonomialIdeal, d: int) -> bool:
    """Stability read off the region: every proper monomial subregion is under-punctured.

    With no overlapping punctures the over-puncturing coefficient of a
    subregion is its down count minus its up count.
    """
    region = build_region(ideal, d)
    if region.is_empty:
        raise ValueError(f"T_{d}{ideal} is empty")
    if not is_tileable_matching(region):
        raise ValueError(f"T_{d}{ideal} is not tileable")
    if over_puncturing_region(region) != 0:
        raise ValueError(f"T_{d}{ideal} is not perfectly-punctured")
    if any(g not in ideal for g in region_ideal(region).generators):
        raise ValueError("I differs from I + J(T); stability is only read off for I = I + J(T)")
    for m in proper_subregion_monomials(region):
        ups, downs = triangle_counts(region, m)
        if downs - ups >= 0:
            return False
    return True


# --- two-variable computations over S = K[x, y] ------------------------------
# A form of degree n is the tuple of its coefficients on x^i y^(n-i), i = 0..n.

Form = tuple[int, ...]


def _binomial_form(n: int) -> Form:
    return tuple(math.comb(n, i) for i in range(n + 1))


def _form(ex: int, ey: int, exy: int) -> Form:
    """Coefficients of x^ex y^ey (x+y)^exy."""
    return (0,) * ex + _binomial_form(exy) + (0,) * ey


def _degree(f: Form) -> int:
    return len(f) - 1


def _multiples_matrix(gens: Sequence[Form], t: int) -> IntegerMatrix:
    rows = []
    for f in gens:
        n = _degree(f)
        for i in range(t - n + 1):
            rows.append((0,) * i + f + (0,) * (t - n - i))
    return IntegerMatrix(len(rows), t + 1, tuple(rows))


def ideal_dimension_2var(gens: Sequence[Form], t: int, characteristic: int = 0) -> int:
    """dim_K [J]_t for the ideal J of K[x, y] generated by ``gens``."""
    if t < 0:
        return 0
    return rank(_multiples_matrix(gens, t), characteristic)


def aci_restriction_forms(p: AciParams) -> tuple[Form, Form, Form, Form]:
    """Generators of J in the order mixed, x^a, y^b, (x+y)^c."""
    return (
        _form(p.alpha, p.beta, p.gamma),
        _form(p.a, 0, 0),
        _form(0, p.b, 0),
        _form(0, 0, p.c),
    )


def hilbert_oracle(p: AciParams, characteristic: int = 0) -> dict[int, int]:
    """dim_K [S/J]_t for t = 0 .. a+b+c+alpha+beta+gamma, by exact ranks."""
    check_characteristic(characteristic)
    gens = aci_restriction_forms(p)
    out = {}
    for t in range(p.total + 1):
        if t >= p.a + p.b - 1:
            out[t] = 0  # (x^a, y^b) already contains every form of degree >= a+b-1
        else:
            out[t] = t + 1 - ideal_dimension_2var(gens, t, characteristic)
    return out


def _syzygy_degrees(gen_degrees: Sequence[int], quotient_dims: dict[int, int], top: int) -> list[int]:
    # dim [Syz]_t = sum_i dim S_{t - deg g_i} - dim [J]_t; its second difference counts
    # free summands S(-e) with e = t
    def syz_dim(t: int) -> int:
        if t < 0:
            return 0
        free = sum(max(0, t - e + 1) for e in gen_degrees)
        return free - (t + 1 - quotient_dims[t])

    found = []
    for t in range(top + 1):
        mult = syz_dim(t) - 2 * syz_dim(t - 1) + syz_dim(t - 2)
        if mult < 0:
            raise ArithmeticError(f"negative multiplicity at degree {t}")
        found.extend([t] * mult)
    return found


def splitting_type_oracle(p: AciParams, characteristic: int = 0) -> SplittingType:
    """Generic splitting type from the Hilbert function of S/J."""
    dims = hilbert_oracle(p, characteristic)
    gen_degrees = [p.alpha + p.beta + p.gamma, p.a, p.b, p.c]
    top = p.total
    dims = {**dims, **{t: 0 for t in range(top + 1, top + 3)}}
    degs = _syzygy_degrees(gen_degrees, dims, top)
    if len(degs) != 3 or sum(degs) != p.total:
        raise ArithmeticError(f"inconsistent syzygy degrees {degs} for I_{{{p}}}; this is a bug")
    return SplittingType.of([-e for e in degs])


def _contained_2var(f: Form, others: Sequence[Form], characteristic: int) -> bool:
    t = _degree(f)
    mat = _multiples_matrix(others, t)
    with_f = IntegerMatrix(mat.rows + 1, t + 1, mat.entries + (f,))
    return rank(with_f, characteristic) == rank(mat, characteristic)


def regularity_2var(a: int, b: int, alpha: int, beta: int, gamma: int) -> int:
    """Regularity of (x^a, y^b, x^alpha y^beta (x+y)^gamma) in K[x, y], char 0."""
    if not (0 <= alpha < a and 0 <= beta < b and gamma >= 1):
        raise ValueError("need 0 <= alpha < a, 0 <= beta < b, gamma >= 1")
    gens = [_form(a, 0, 0), _form(0, b, 0), _form(alpha, beta, gamma)]
    for i, f in enumerate(gens):
        if _contained_2var(f, gens[:i] + gens[i + 1 :], 0):
            raise ValueError(f"generating set is not minimal (generator {i} is redundant)")
    inner = min(a + b, a + beta + gamma, b + alpha + gamma, -(-(a + b + alpha + beta + gamma) // 2))
    return -1 + max(a + beta, b + alpha, inner)


def regularity_2var_oracle(
    a: int, b: int, alpha: int, beta: int, gamma: int, characteristic: int = 0
) -> int:
    """Top degree of S/(x^a, y^b, x^alpha y^beta (x+y)^gamma) plus one."""
    gens = [_form(a, 0, 0), _form(0, b, 0), _form(alpha, beta, gamma)]
    top = -1
    for t in range(a + b - 1):
        if t + 1 - ideal_dimension_2var(gens, t, characteristic) > 0:
            top = t
    return top + 1


def _sorted_params(p: AciParams) -> AciParams:
    perm = tuple(sorted(range(3), key=lambda i: (p.a, p.b, p.c)[i]))
    return p.permuted(perm)  # type: ignore[arg-type]


def splitting_type_formula(p: AciParams) -> tuple[SplittingType, str]:
    """Closed-form generic splitting type in characteristic zero, with the case used."""
    conds = aci_conditions(p)
    total = p.total
    if conds.semistable:
        k, rest = divmod(total, 3)
        if rest == 1:
            return SplittingType(-k - 1, -k, -k), "semistable 3k+1"
        if rest == 2:
            return SplittingType(-k - 1, -k - 1, -k), "semistable 3k+2"
        if aci_wlp(p).has_wlp:
            return SplittingType(-k, -k, -k), "semistable 3k, WLP"
        return SplittingType(-k - 1, -k, -k + 1), "semistable 3k, no WLP"

    q = _sorted_params(p)
    a, b, c, al, be, ga = q.as_tuple()
    mixed = al + be + ga
    if min(mixed, c) >= a + b - 1:
        return SplittingType.of((-c, -mixed, -a - b)), "(i)"
    # lcm degrees of the mixed generator with x^a, y^b, z^c
    lcms = (a + be + ga, b + al + ga, c + al + be)
    half_abg = Fraction(a + b + mixed, 2)
    half_abc = Fraction(a + b + c, 2)
    if half_abc <= min(*lcms, half_abg):
        return (
            SplittingType.of((-mixed, -math.ceil(half_abc), -math.floor(half_abc))),
            "(ii)",
        )
    if half_abg <= min(*lcms, half_abc):
        neg_q = min(a + be + ga, b + al + ga, math.ceil(half_abg))
        return SplittingType.of((-c, -neg_q, -(a + b + mixed) + neg_q)), "(iii)"
    # (x+y)^c restricts into (x^a, y^b, x^alpha y^beta (x+y)^gamma) once c reaches its
    # regularity; the Hilbert-Burch degrees of that three-generated ideal then decide
    reg_mixed = regularity_2var(a, b, al, be, ga)
    if c >= reg_mixed:
        top = reg_mixed + 1
        return SplittingType.of((-c, -top, -(a + b + mixed) + top)), "(iv)"
    s = -min(lcms)
    half = Fraction(-total - s, 2)
    return SplittingType.of((math.floor(half), math.ceil(half), s)), "(iv)"


@dataclass(frozen=True)
class EquivalenceReport:
    characteristic: int
    d: int
    wlp: bool
    det_nonzero: bool
    balanced_splitting: bool
    det_value: int
    splitting_type: SplittingType

    @property
    def agree(self) -> bool:
        return self.wlp == self.det_nonzero == self.balanced_splitting


def equivalence_check(p: AciParams, characteristic: int = 0) -> EquivalenceReport:
    """WLP, det Z(T_d(I)) != 0 in K, and splitting type (-d,-d,-d), computed independently."""
    check_characteristic(characteristic)
    conds = aci_conditions(p)
    if not conds.all_hold:
        raise ValueError(f"I_{{{p}}} does not satisfy conditions (i)-(iv)")
    d = int(conds.d)
    ideal = aci_ideal(p)
    zmat = biadjacency(build_region(ideal, d))
    det = determinant(zmat)
    if characteristic:
        det_nonzero = determinant_mod(zmat, characteristic) != 0
    else:
        det_nonzero = det != 0
    split = splitting_type_oracle(p, characteristic)
    return EquivalenceReport(
        characteristic=characteristic,
        d=d,
        wlp=wlp_rank_scan(ideal, characteristic).has_wlp,
        det_nonzero=det_nonzero,
        balanced_splitting=split == SplittingType(-d, -d, -d),
        det_value=det,
        splitting_type=split,
    )


def bundle_report(
    ideal: MonomialIdeal, d: int | None = None, params: AciParams | None = None
) -> dict[str, Any]:
    """JSON-ready stability and splitting-type summary."""
    report = semistability(ideal, d)
    out: dict[str, Any] = {
        "semistable": report.semistable,
        "stable": report.stable,
        "witness": None if report.witness is None else [str(g) for g in report.witness],
        "splitting_type": None,
        "case": None,
    }
    if params is not None:
        split, case = splitting_type_formula(params)
        out["splitting_type"] = list(split.as_tuple())
        out["case"] = case
    return out


__all__ = [
    "EquivalenceReport",
    "SplittingType",
    "StabilityReport",
    "TwoOfThree",
    "aci_semistable",
    "bundle_report",
    "equivalence_check",
    "hilbert_oracle",
    "ideal_dimension_2var",
    "mixed_lcm_degrees",
    "regularity_2var",
    "regularity_2var_oracle",
    "semistability",
    "splitting_type_formula",
    "splitting_type_oracle",
    "stability_region",
    "two_of_three",
]
