"""Command-line front end: ``lzlef region|wlp|bundle|tilings|scan|verify-paper``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, Sequence

from .bundles import (
    bundle_report,
    equivalence_check,
    semistability,
    splitting_type_formula,
    splitting_type_oracle,
    two_of_three,
)
from .lefschetz import (
    aci_conditions,
    aci_wlp,
    axes_central_form,
    gravity_central,
    peak_matrix,
    prime_factors,
    wlp_peak,
    wlp_rank_scan,
)
from .matrix import check_characteristic, determinant, permanent, rank
from .monomials import (
    AciParams,
    Monomial,
    MonomialIdeal,
    ParseError,
    aci_ideal,
    is_level,
    minimize,
    parse_monomials,
    revlex_compare,
    socle_degrees,
)
from .regions import (
    TriangularRegion,
    build_region,
    classify_punctures,
    monomial_subregion,
    over_puncturing,
    puncture_relation,
    region_ideal,
)
from .tilings import (
    biadjacency,
    count_tilings,
    default_limit,
    enumerate_tilings,
    is_tileable_matching,
    is_tileable_structural,
)

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CONSISTENCY = 0, 2, 3, 4

EDGE = 24
HEIGHT = EDGE * math.sqrt(3) / 2
PAD = 4
PUNCTURE_FILL = "#404040"
CELL_FILL = "#ffffff"
GRID_STROKE = "#808080"


class UsageError(Exception):
    pass


class ConsistencyError(Exception):
    pass


def _dump(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def _parse_ideal(text: str) -> MonomialIdeal:
    try:
        return minimize(parse_monomials(text))
    except ParseError as exc:
        raise UsageError(f"cannot parse ideal {text!r}: {exc}") from exc


def _parse_aci(text: str) -> AciParams:
    try:
        return AciParams.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_char(n: int) -> int:
    try:
        check_characteristic(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return n


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


# --- rendering ---------------------------------------------------------------


def _row_cells(d: int, r: int) -> Iterator[tuple[bool, Monomial]]:
    """Cells of row r (top row 0) from left to right as (is_up, label)."""
    ex = d - 1 - r
    for k in range(r + 1):
        yield True, Monomial(ex, r - k, k)
        if k < r:
            yield False, Monomial(ex, r - 1 - k, k)


def render_ascii(region: TriangularRegion) -> str:
    d = region.d
    ups, downs = region.up_set, region.down_set
    lines = []
    for r in range(d):
        cells = []
        for is_up, label in _row_cells(d, r):
            present = label in (ups if is_up else downs)
            cells.append(("/\\" if is_up else "\\/") if present else "##")
        lines.append(" " * (2 * (d - 1 - r)) + "".join(cells))
    return "\n".join(lines) + "\n"


def _pt(x: float, y: float) -> str:
    return f"{x:.3f},{y:.3f}"


def render_svg(region: TriangularRegion) -> str:
    d = region.d
    ups, downs = region.up_set, region.down_set
    width = d * EDGE + 2 * PAD
    height = d * HEIGHT + 2 * PAD
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3f}" height="{height:.3f}" '
        f'viewBox="0 0 {width:.3f} {height:.3f}">',
        f'<g stroke="{GRID_STROKE}" stroke-width="0.5">',
    ]
    for r in range(d):
        top, bottom = PAD + r * HEIGHT, PAD + (r + 1) * HEIGHT
        left = PAD + (d - 1 - r) * EDGE / 2
        for k in range(r + 1):
            label = Monomial(d - 1 - r, r - k, k)
            x0 = left + k * EDGE
            pts = (_pt(x0 + EDGE / 2, top), _pt(x0, bottom), _pt(x0 + EDGE, bottom))
            fill = CELL_FILL if label in ups else PUNCTURE_FILL
            out.append(f'<polygon points="{" ".join(pts)}" fill="{fill}"><title>{label}</title></polygon>')
            if k < r:
                label = Monomial(d - 1 - r, r - 1 - k, k)
                pts = (_pt(x0 + EDGE / 2, top), _pt(x0 + 1.5 * EDGE, top), _pt(x0 + EDGE, bottom))
                fill = CELL_FILL if label in downs else PUNCTURE_FILL
                out.append(f'<polygon points="{" ".join(pts)}" fill="{fill}"><title>{label}</title></polygon>')
    out.append("</g>")
    frame = (_pt(PAD + d * EDGE / 2, PAD), _pt(PAD, PAD + d * HEIGHT), _pt(PAD + d * EDGE, PAD + d * HEIGHT))
    out.append(f'<polygon points="{" ".join(frame)}" fill="none" stroke="#000000" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def region_summary(region: TriangularRegion) -> dict[str, Any]:
    classes = classify_punctures(region)
    return {
        "d": region.d,
        "ideal": [str(g) for g in region.ideal.generators],
        "up": len(region.up_triangles),
        "down": len(region.down_triangles),
        "balanced": region.is_balanced,
        "over_puncturing": over_puncturing(region.ideal, region.d),
        "floating": [str(p) for p in classes.floating],
        "non_floating": [str(p) for p in classes.non_floating],
    }


# --- scan --------------------------------------------------------------------


def scan_record(p: AciParams) -> dict[str, Any]:
    """One ScanRecord; det and its primes are filled in when the peak region is square."""
    conds = aci_conditions(p)
    verdict = aci_wlp(p)
    d = math.ceil(p.d)
    det = None
    primes: list[int] = []
    if conds.all_hold:
        det = determinant(peak_matrix(aci_ideal(p), d))
        primes = list(prime_factors(det))
    split, case = splitting_type_formula(p)
    return {
        "params": list(p.as_tuple()),
        "d": d,
        "wlp_char0": verdict.has_wlp,
        "rule": verdict.rule,
        "det": None if det is None else str(det),
        "obstruction_primes": primes,
        "semistable": conds.semistable,
        "splitting_type": list(split.as_tuple()),
        "case": case,
        "level": is_level(p),
    }


def check_record(rec: dict[str, Any]) -> list[str]:
    """Cross-check a ScanRecord against the theorems that relate its fields."""
    problems = []
    p = AciParams(*rec["params"])
    if not rec["semistable"] and not rec["wlp_char0"]:
        problems.append("nonsemistable but WLP fails")
    if not p.d_is_integer and not rec["wlp_char0"]:
        problems.append("d not an integer but WLP fails")
    if rec["det"] is not None:
        d = rec["d"]
        nonzero = int(rec["det"]) != 0
        balanced = rec["splitting_type"] == [-d, -d, -d]
        if not rec["wlp_char0"] == nonzero == balanced:
            problems.append("WLP, det and splitting type disagree")
    if sum(rec["splitting_type"]) != -p.total:
        problems.append("splitting type violates the sum rule")
    return [f"{tuple(rec['params'])}: {msg}" for msg in problems]


def parse_range(text: str, name: str) -> range:
    try:
        if ":" in text:
            lo, hi = (int(v) for v in text.split(":"))
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"--{name}: expected an integer or lo:hi, got {text!r}") from exc
    return range(lo, hi + 1)


def _positive(r: range, name: str, least: int) -> range:
    if len(r) and r.start < least:
        raise UsageError(f"--{name} must be at least {least}")
    return r


def family_params(family: str, ranges: dict[str, str]) -> list[AciParams]:
    """Parameter tuples of a scan family in deterministic order."""
    if family == "level":
        al = _positive(parse_range(ranges["alpha"], "alpha"), "alpha", 1)
        be = _positive(parse_range(ranges["beta"], "beta"), "beta", 1)
        ga = _positive(parse_range(ranges["gamma"], "gamma"), "gamma", 1)
        ts = _positive(parse_range(ranges["t"], "t"), "t", 1)
        return [
            AciParams(x + t, y + t, z + t, x, y, z) for x in al for y in be for z in ga for t in ts
        ]
    if family == "symmetric":
        As = _positive(parse_range(ranges["a"], "a"), "a", 2)
        return [AciParams(a, a, a, x, x, x) for a in As for x in range(1, a)]
    if family == "box":
        As = _positive(parse_range(ranges["a"], "a"), "a", 2)
        Bs = _positive(parse_range(ranges["b"], "b"), "b", 2)
        Cs = _positive(parse_range(ranges["c"], "c"), "c", 2)
        return [
            AciParams(a, b, c, x, y, z)
            for a in As
            for b in Bs
            for c in Cs
            for x in range(1, a)
            for y in range(1, b)
            for z in range(1, c)
        ]
    raise UsageError(f"unknown family {family!r}")


def _existing_lines(path: str) -> dict[tuple[int, ...], str]:
    found: dict[tuple[int, ...], str] = {}
    if not os.path.exists(path):
        return found
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            try:
                key = tuple(json.loads(line)["params"])
            except (ValueError, KeyError, TypeError):
                continue  # torn or foreign line; recompute
            found[key] = line
    return found


def run_scan(params: Sequence[AciParams], out: str, jobs: int = 1) -> list[str]:
    """Write one JSONL record per tuple, reusing records already present in ``out``.

    Returns the consistency problems found among the newly computed records.
    """
    existing = _existing_lines(out)
    todo = [p for p in params if p.as_tuple() not in existing]
    if jobs > 1 and len(todo) > 1:
        with Pool(jobs) as pool:
            fresh = pool.map(scan_record, todo, chunksize=max(1, len(todo) // (8 * jobs)))
    else:
        fresh = [scan_record(p) for p in todo]
    problems = [msg for rec in fresh for msg in check_record(rec)]
    computed = {tuple(rec["params"]): _dump(rec) for rec in fresh}
    lines = [existing.get(p.as_tuple()) or computed[p.as_tuple()] for p in params]

    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".scan-", suffix=".jsonl")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write("".join(line + "\n" for line in lines))
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return problems


# --- verify-paper ------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    locus: str
    expected: Any
    compute: Callable[[], Any]


@dataclass(frozen=True)
class CheckResult:
    name: str
    locus: str
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "example": self.name,
            "locus": self.locus,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


def _ideal(text: str) -> MonomialIdeal:
    return MonomialIdeal.parse(text)


def _aci(*values: int) -> AciParams:
    return AciParams(*values)


SIX_PUNCTURES = "x^7,y^7,z^6,xy^4z^2,x^3yz^2,x^4yz"
I1 = "x^5,y^5,z^5,xyz^2,xy^2z,x^2yz"
J55 = "x^5,y^5,z^5,xy^2z,xyz^2"
LADDER = ("x^2,y^2,z^2,xy,xz,yz", "x^2,y^2,z^2,xy,xz", "x^3,y^3,z^3,xyz,x^2y,x^2z")


def _gens(ideal: MonomialIdeal) -> list[str]:
    return [str(g) for g in ideal.generators]


def _six_puncture_classes() -> dict[str, int]:
    classes = classify_punctures(build_region(_ideal(SIX_PUNCTURES), 8))
    return {"non_floating": len(classes.non_floating), "floating": len(classes.floating)}


def _rank_scan_all(ideal: str, chars: Iterable[int]) -> list[bool]:
    return [wlp_rank_scan(_ideal(ideal), p).has_wlp for p in chars]


def _aci_rank_scan_all(p: AciParams, chars: Iterable[int]) -> list[bool]:
    return [wlp_rank_scan(aci_ideal(p), q).has_wlp for q in chars]


def _peak(p: AciParams, d: int, char: int) -> list[Any]:
    v = wlp_peak(aci_ideal(p), d, char)
    return [v.has_wlp, abs(v.det_value or 0), list(v.obstruction_primes or ())]


def _stability(text: str, d: int) -> list[Any]:
    rep = semistability(_ideal(text), d)
    return [rep.semistable, rep.stable, str(rep.witness_gcd)]


def _two_of_three(text: str, d: int) -> list[bool]:
    t = two_of_three(_ideal(text), d)
    return [t.perfectly_punctured, t.tileable, t.semistable]


def _not_semistable_when_j_adds() -> list[bool]:
    ideal = _ideal(I1)
    region = build_region(ideal, 6)
    larger = any(g not in ideal for g in region_ideal(region).generators)
    return [larger, is_tileable_matching(region), semistability(ideal, 6).semistable]


def _equivalence(p: AciParams, char: int) -> list[bool]:
    rep = equivalence_check(p, char)
    return [rep.wlp, rep.det_nonzero, rep.balanced_splitting]


def _level_family_consistent() -> bool:
    # same parity of t and alpha+beta+gamma, or t odd with alpha = beta = gamma even
    for p in family_params("level", {"alpha": "1:4", "beta": "1:4", "gamma": "1:4", "t": "1:8"}):
        s, t = p.alpha + p.beta + p.gamma, p.a - p.alpha
        covered = (t - s) % 2 == 0 or (t % 2 == 1 and p.alpha == p.beta == p.gamma and p.alpha % 2 == 0)
        if s % 3 == 0 and covered and not aci_wlp(p).has_wlp:
            return False
    return True


def _symmetric_corollary() -> bool:
    for a in range(2, 10):
        for alpha in range(1, a):
            fails = not aci_wlp(_aci(a, a, a, alpha, alpha, alpha)).has_wlp
            if fails != (alpha % 2 == 1 and a % 2 == 1 and a >= 2 * alpha + 1):
                return False
    return True


def paper_checks() -> list[Check]:
    p5 = _aci(5, 5, 3, 1, 1, 2)
    p6 = _aci(6, 7, 8, 3, 3, 3)
    p7 = _aci(7, 7, 7, 3, 3, 3)
    p4 = _aci(4, 5, 5, 3, 1, 1)
    p3 = _aci(3, 5, 5, 1, 2, 2)
    chars = (0, 2, 3, 5, 7)
    return [
        Check("revlex x^3 vs x^2y", "degree-3 revlex listing", 1,
              lambda: revlex_compare(Monomial.parse("x^3"), Monomial.parse("x^2y"))),
        Check("revlex y^2z vs xz^2", "degree-3 revlex listing", 1,
              lambda: revlex_compare(Monomial.parse("y^2z"), Monomial.parse("xz^2"))),
        Check("I_1 is minimal", "ideal I_1 of the over-puncturing discussion",
              ["x^5", "y^5", "z^5", "x^2yz", "xy^2z", "xyz^2"], lambda: _gens(_ideal(I1))),
        Check("socle of I_{5,5,3,1,1,2}", "ACI socle-degree formula", [6, 6, 9],
              lambda: socle_degrees(aci_ideal(p5))),
        Check("I_{5,5,3,1,1,2} generators", "worked example I_{5,5,3,1,1,2}",
              ["x^5", "y^5", "xyz^2", "z^3"], lambda: _gens(aci_ideal(p5))),
        Check("I_{3,5,5,1,2,2} generators", "non-level ACI I_{3,5,5,1,2,2}",
              ["y^5", "xy^2z^2", "z^5", "x^3"], lambda: _gens(aci_ideal(p3))),
        Check("level family is level", "level ACIs I_{alpha+t,beta+t,gamma+t,alpha,beta,gamma}",
              True, lambda: is_level(_aci(4, 5, 6, 1, 2, 3))),
        Check("I_{3,5,5,1,2,2} not level", "non-level ACI I_{3,5,5,1,2,2}", False,
              lambda: is_level(p3)),
        Check("T_4(xy,y^2,z^3)", "small region T_4(xy, y^2, z^3)",
              {"up": 4, "down": 4},
              lambda: {k: v for k, v in region_summary(build_region(_ideal("xy,y^2,z^3"), 4)).items()
                       if k in ("up", "down")}),
        Check("six-puncture T_8 classes", "introductory region T_8 with six punctures",
              {"non_floating": 3, "floating": 3}, _six_puncture_classes),
        Check("I_1 punctures overlap", "T_6(I_1) = T_6(I_2)", "overlapping",
              lambda: puncture_relation(*(p for p in build_region(_ideal(I1), 6).punctures
                                          if str(p.generator) in ("xyz^2", "xy^2z")), 6).value),
        Check("subregion of xy^2z", "monomial subregion associated to xy^2z",
              {"d": 4, "up": 7, "down": 6},
              lambda: (lambda s: {"d": s.d, "up": len(s.up_triangles), "down": len(s.down_triangles)})(
                  monomial_subregion(build_region(_ideal(SIX_PUNCTURES), 8), Monomial.parse("xy^2z")))),
        Check("o_6(I_1)", "over-puncturing of I_1", 3, lambda: over_puncturing(_ideal(I1), 6)),
        Check("o_6(I_2)", "over-puncturing of I_2", 0,
              lambda: over_puncturing(_ideal("x^5,y^5,z^5,xyz"), 6)),
        Check("J(T_6(I_1))", "T_6(I_1) = T_6(I_2)", ["x^5", "y^5", "z^5", "xyz"],
              lambda: _gens(region_ideal(build_region(_ideal(I1), 6)))),
        Check("semistable ACI region", "balanced and perfectly-punctured ACI regions",
              {"balanced": True, "over_puncturing": 0},
              lambda: {k: v for k, v in region_summary(build_region(aci_ideal(p6), 10)).items()
                       if k in ("balanced", "over_puncturing")}),
        Check("det Z(T_6(I_{5,5,3,1,1,2}))", "worked example I_{5,5,3,1,1,2}", 5,
              lambda: determinant(peak_matrix(aci_ideal(p5), 6))),
        Check("det Z(T_6(J))", "ideal (x^5,y^5,z^5,xy^2z,xyz^2)", 0,
              lambda: determinant(peak_matrix(_ideal(J55), 6))),
        Check("|det Z(T_10(I_{6,7,8,3,3,3}))|", "worked example I_{6,7,8,3,3,3}", 1764,
              lambda: abs(determinant(peak_matrix(aci_ideal(p6), 10)))),
        Check("per Z of six-puncture T_8", "introductory region T_8 with six punctures", 13,
              lambda: permanent(biadjacency(build_region(_ideal(SIX_PUNCTURES), 8)))),
        Check("six-puncture T_8 tileable", "introductory region T_8 with six punctures", [True, True],
              lambda: (lambda r: [is_tileable_structural(r), is_tileable_matching(r)])(
                  build_region(_ideal(SIX_PUNCTURES), 8))),
        Check("T_3 ladder region tileable", "over-punctured, non-tileable regions", False,
              lambda: is_tileable_matching(build_region(_ideal(LADDER[0]), 3))),
        Check("six-puncture T_8 tilings enumerated", "introductory region T_8 with six punctures", 13,
              lambda: count_tilings(build_region(_ideal(SIX_PUNCTURES), 8))),
        Check("rank over F_5", "worked example I_{5,5,3,1,1,2}", 10,
              lambda: rank(peak_matrix(aci_ideal(p5), 6), 5)),
        Check("rank over Q", "worked example I_{5,5,3,1,1,2}", 11,
              lambda: rank(peak_matrix(aci_ideal(p5), 6), 0)),
        Check("J never has WLP", "ideal (x^5,y^5,z^5,xy^2z,xyz^2), chars 0,2,3,5,7",
              [False] * 5, lambda: _rank_scan_all(J55, chars)),
        Check("I_{3,5,5,1,2,2} never has WLP", "non-level ACI I_{3,5,5,1,2,2}, chars 0,2,3,5,7",
              [False] * 5, lambda: _aci_rank_scan_all(p3, chars)),
        Check("peak verdict I_{5,5,3,1,1,2} char 0", "worked example I_{5,5,3,1,1,2}",
              [True, 5, [5]], lambda: _peak(p5, 6, 0)),
        Check("peak verdict I_{5,5,3,1,1,2} char 5", "worked example I_{5,5,3,1,1,2}",
              False, lambda: _peak(p5, 6, 5)[0]),
        Check("peak verdict I_{6,7,8,3,3,3}", "worked example I_{6,7,8,3,3,3}",
              [True, 1764, [2, 3, 7]], lambda: _peak(p6, 10, 0)),
        Check("decision tree I_{7,7,7,3,3,3}", "worked example I_{7,7,7,3,3,3}",
              [False, "(IV')"], lambda: (lambda v: [v.has_wlp, v.rule])(aci_wlp(p7))),
        Check("decision tree I_{4,4,4,1,1,1}", "level ACIs, t and alpha+beta+gamma of equal parity",
              [True, "(II)"], lambda: (lambda v: [v.has_wlp, v.rule])(aci_wlp(_aci(4, 4, 4, 1, 1, 1)))),
        Check("decision tree I_{5,5,3,1,1,2}", "worked example I_{5,5,3,1,1,2}",
              [True, "(a)"], lambda: (lambda v: [v.has_wlp, v.rule])(aci_wlp(p5))),
        Check("axes-central I_{7,7,7,3,3,3}", "worked example I_{7,7,7,3,3,3}",
              [1, 3, 3, 3, 1, True],
              lambda: (lambda f: [f.case, f.A, f.B, f.C, f.M, f.all_odd])(axes_central_form(p7))),
        Check("gravity-central level ACI", "level ACIs I_{alpha+t,beta+t,gamma+t,alpha,beta,gamma}",
              True, lambda: gravity_central(_aci(4, 5, 6, 1, 2, 3))),
        Check("stable ladder step", "stability ladder (x^2,y^2,z^2,xy,xz,yz)",
              [True, True, "None"], lambda: _stability(LADDER[0], 3)),
        Check("semistable ladder step", "stability ladder (x^2,y^2,z^2,xy,xz)",
              [True, False, "x"], lambda: _stability(LADDER[1], 3)),
        Check("unstable ladder step", "stability ladder (x^3,y^3,z^3,xyz,x^2y,x^2z)",
              [False, False, "x^2"], lambda: _stability(LADDER[2], 4)),
        Check("I_{5,5,3,1,1,2} not semistable", "worked example I_{5,5,3,1,1,2}",
              [False, False], lambda: (lambda c: [c.semistable, c.mixed_lcms_large])(aci_conditions(p5))),
        Check("two-of-three, unstable ladder step", "stability ladder (x^3,y^3,z^3,xyz,x^2y,x^2z)",
              [False, False, False], lambda: _two_of_three(LADDER[2], 4)),
        Check("I + J(T) larger, tileable", "T_6(I_1) = T_6(I_2)", [True, True, False],
              _not_semistable_when_j_adds),
        Check("oracle I_{7,7,7,3,3,3}", "worked example I_{7,7,7,3,3,3}", [-11, -10, -9],
              lambda: list(splitting_type_oracle(p7).as_tuple())),
        Check("oracle I_{6,7,8,3,3,3}", "worked example I_{6,7,8,3,3,3}", [-10, -10, -10],
              lambda: list(splitting_type_oracle(p6).as_tuple())),
        Check("oracle I_{4,5,5,3,1,1}", "worked example I_{4,5,5,3,1,1}", [-7, -6, -6],
              lambda: list(splitting_type_oracle(p4).as_tuple())),
        Check("formula I_{4,5,5,3,1,1}", "worked example I_{4,5,5,3,1,1}", [[-7, -6, -6], "(iv)"],
              lambda: (lambda r: [list(r[0].as_tuple()), r[1]])(splitting_type_formula(p4))),
        Check("formula I_{7,7,7,3,3,3}", "worked example I_{7,7,7,3,3,3}", [-11, -10, -9],
              lambda: list(splitting_type_formula(p7)[0].as_tuple())),
        Check("equivalence I_{6,7,8,3,3,3} char 0", "worked example I_{6,7,8,3,3,3}",
              [True, True, True], lambda: _equivalence(p6, 0)),
        Check("equivalence I_{7,7,7,3,3,3} char 0", "worked example I_{7,7,7,3,3,3}",
              [False, False, False], lambda: _equivalence(p7, 0)),
        Check("wlp --aci 5,5,3,1,1,2 --char 5", "worked example I_{5,5,3,1,1,2}", False,
              lambda: aci_wlp(p5, 5).has_wlp),
        Check("wlp --aci 6,7,8,3,3,3", "worked example I_{6,7,8,3,3,3}", True,
              lambda: aci_wlp(p6).has_wlp),
        Check("bundle --aci 7,7,7,3,3,3", "worked example I_{7,7,7,3,3,3}", [True, [-11, -10, -9]],
              lambda: (lambda r: [r["semistable"], r["splitting_type"]])(
                  bundle_report(aci_ideal(p7), None, p7))),
        Check("bundle --aci 4,5,5,3,1,1", "worked example I_{4,5,5,3,1,1}", [False, [-7, -6, -6]],
              lambda: (lambda r: [r["semistable"], r["splitting_type"]])(
                  bundle_report(aci_ideal(p4), None, p4))),
        Check("level family scan", "WLP of level ACIs, alpha,beta,gamma <= 4, t <= 8", True,
              _level_family_consistent),
        Check("symmetric family scan", "WLP of I_{a,a,a,alpha,alpha,alpha}, a <= 9", True,
              _symmetric_corollary),
    ]


def _normalise(value: Any) -> Any:
    return json.loads(json.dumps(value, default=str))


def verify_paper(checks: Sequence[Check] | None = None) -> list[CheckResult]:
    results = []
    for check in checks if checks is not None else paper_checks():
        expected = _normalise(check.expected)
        try:
            computed = _normalise(check.compute())
            shown = _dump(computed)
        except Exception as exc:  # a crash is a failed row, not a failed report
            computed = shown = f"error: {type(exc).__name__}: {exc}"
        results.append(
            CheckResult(check.name, check.locus, _dump(expected), shown, computed == expected)
        )
    return results


def format_table(results: Sequence[CheckResult]) -> str:
    header = ("example", "locus", "expected", "computed", "result")
    rows = [header] + [
        (r.name, r.locus, r.expected, r.computed, "pass" if r.passed else "FAIL") for r in results
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    return "\n".join(lines) + "\n"


# --- commands ----------------------------------------------------------------


def _ideal_or_aci(args: argparse.Namespace) -> tuple[MonomialIdeal, AciParams | None]:
    if args.aci is not None:
        p = _parse_aci(args.aci)
        return aci_ideal(p), p
    if args.ideal is None:
        raise UsageError("give --aci or --ideal")
    return _parse_ideal(args.ideal), None


def cmd_region(args: argparse.Namespace) -> int:
    ideal = _parse_ideal(args.ideal)
    if args.d < 1:
        raise UsageError("d must be at least 1")
    region = build_region(ideal, args.d)
    if args.render == "ascii":
        text = render_ascii(region)
    elif args.render == "svg":
        text = render_svg(region)
    else:
        text = _dump(region_summary(region), args.pretty) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_wlp(args: argparse.Namespace) -> int:
    char = _check_char(args.char)
    ideal, p = _ideal_or_aci(args)
    if p is not None:
        verdict = aci_wlp(p, char)
    else:
        if not ideal.is_artinian:
            raise UsageError(f"{ideal} is not Artinian")
        verdict = wlp_rank_scan(ideal, char)
    _write(_dump(verdict.to_json(), args.pretty) + "\n", None)
    return EXIT_OK


def cmd_bundle(args: argparse.Namespace) -> int:
    ideal, p = _ideal_or_aci(args)
    if len(ideal.generators) < 3 or not ideal.is_artinian:
        raise UsageError(f"{ideal} needs at least three generators and must be Artinian")
    d = args.degree
    if d is not None and any(g.degree > d for g in ideal.generators):
        raise UsageError(f"--degree {d} is below a generator degree")
    report = bundle_report(ideal, d, p)
    if d is not None and not build_region(ideal, d).is_empty:
        check = two_of_three(ideal, d)
        if not check.consistent:
            raise ConsistencyError(f"two-of-three violated for T_{d}{ideal}: {check}")
    _write(_dump(report, args.pretty) + "\n", None)
    return EXIT_OK


def cmd_tilings(args: argparse.Namespace) -> int:
    ideal = _parse_ideal(args.ideal)
    if args.d < 1:
        raise UsageError("d must be at least 1")
    limit = args.limit if args.limit is not None else default_limit()
    if limit < 0:
        raise UsageError("--limit must be non-negative")
    region = build_region(ideal, args.d)
    if args.list:
        found = enumerate_tilings(region, limit)
        body: dict[str, Any] = {
            "tilings": [[[str(v), str(u)] for v, u in t.sorted_pairs()] for t in found],
            "truncated": len(found) == limit and limit > 0 and count_tilings(region, limit + 1) > limit,
        }
    else:
        n = count_tilings(region, limit)
        body = {"count": n, "truncated": n >= limit and count_tilings(region, limit + 1) > limit}
        if region.is_balanced and not body["truncated"]:
            per = permanent(biadjacency(region))
            if per != n:
                raise ConsistencyError(f"permanent {per} differs from tiling count {n}")
    _write(_dump(body, args.pretty) + "\n", None)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    ranges = {
        "a": args.a, "b": args.b, "c": args.c,
        "alpha": args.alpha, "beta": args.beta, "gamma": args.gamma, "t": args.t,
    }
    defaults = {
        "level": {"alpha": "1:4", "beta": "1:4", "gamma": "1:4", "t": "1:8"},
        "symmetric": {"a": "2:9"},
        "box": {"a": "2:6", "b": "2:6", "c": "2:6"},
    }[args.family]
    filled = {k: (ranges[k] if ranges[k] is not None else v) for k, v in defaults.items()}
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    params = family_params(args.family, filled)
    problems = run_scan(params, args.out, args.jobs)
    if problems:
        raise ConsistencyError("; ".join(problems[:5]))
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    results = verify_paper()
    if args.pretty:
        _write(format_table(results), None)
    else:
        _write("".join(_dump(r.to_json()) + "\n" for r in results), None)
    return EXIT_OK if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lzlef", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--aci", help="six integers a,b,c,alpha,beta,gamma")
        group.add_argument("--ideal", help='comma-separated monomials, e.g. "x^3,y^3,xyz"')

    p = sub.add_parser("region", help="render T_d(I)")
    p.add_argument("ideal")
    p.add_argument("d", type=int)
    p.add_argument("--render", choices=("ascii", "svg", "json"), default="ascii")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("wlp", help="weak Lefschetz verdict as JSON")
    source(p)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_wlp)

    p = sub.add_parser("bundle", help="syzygy bundle stability and splitting type as JSON")
    source(p)
    p.add_argument("--degree", type=int)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("tilings", help="count or list lozenge tilings of T_d(I)")
    p.add_argument("ideal")
    p.add_argument("d", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="count tilings (default)")
    mode.add_argument("--list", action="store_true", help="list tilings")
    p.add_argument("--limit", type=int, help="enumeration cap (default $LZLEF_LIMIT or 10^6)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("scan", help="sweep an ACI family into a JSONL file")
    p.add_argument("family", choices=("level", "symmetric", "box"))
    for name in ("a", "b", "c", "alpha", "beta", "gamma", "t"):
        p.add_argument(f"--{name}", help="integer or inclusive range lo:hi")
    p.add_argument("--out", required=True, help="JSONL file; existing records are kept")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-paper", help="recompute every published example")
    p.add_argument("--pretty", action="store_true", help="aligned table instead of JSONL")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lzlef: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"lzlef: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"lzlef: io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConsistencyError as exc:
        print(f"lzlef: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


def entry() -> None:
    sys.exit(main())
