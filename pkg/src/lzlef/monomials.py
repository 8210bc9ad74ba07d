"""Monomials in x, y, z, monomial ideals, and the almost complete intersections I_{a,b,c,alpha,beta,gamma}."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Raised for malformed monomial or ideal literals; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, slots=True)
class Monomial:
    ex: int = 0
    ey: int = 0
    ez: int = 0

    def __post_init__(self) -> None:
        if min(self.ex, self.ey, self.ez) < 0:
            raise ValueError(f"negative exponent in {(self.ex, self.ey, self.ez)}")

    @property
    def degree(self) -> int:
        return self.ex + self.ey + self.ez

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.ex, self.ey, self.ez)

    def revlex_key(self) -> tuple[int, int, int]:
        # ascending key order == ascending graded reverse-lex order
        return (self.ex + self.ey + self.ez, -self.ez, -self.ey)

    def __lt__(self, other: Monomial) -> bool:
        return self.revlex_key() < other.revlex_key()

    def __le__(self, other: Monomial) -> bool:
        return self.revlex_key() <= other.revlex_key()

    def __gt__(self, other: Monomial) -> bool:
        return self.revlex_key() > other.revlex_key()

    def __ge__(self, other: Monomial) -> bool:
        return self.revlex_key() >= other.revlex_key()

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.ex + other.ex, self.ey + other.ey, self.ez + other.ez)

    def divides(self, other: Monomial) -> bool:
        return self.ex <= other.ex and self.ey <= other.ey and self.ez <= other.ez

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(min(self.ex, other.ex), min(self.ey, other.ey), min(self.ez, other.ez))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.ex, other.ex), max(self.ey, other.ey), max(self.ez, other.ez))

    def quotient(self, divisor: Monomial) -> Monomial:
        """Return ``self / divisor``; raises ``ValueError`` unless ``divisor`` divides ``self``."""
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(self.ex - divisor.ex, self.ey - divisor.ey, self.ez - divisor.ez)

    def colon(self, other: Monomial) -> Monomial:
        """The generator of the colon ideal (self) : (other)."""
        return Monomial(
            max(self.ex - other.ex, 0), max(self.ey - other.ey, 0), max(self.ez - other.ez, 0)
        )

    def __str__(self) -> str:
        parts = []
        for var, e in zip("xyz", self.exponents):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "".join(parts) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"

    @classmethod
    def parse(cls, text: str) -> Monomial:
        return _parse_monomial(text, 0)


ONE = Monomial()
X, Y, Z = Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)
VARIABLES = (X, Y, Z)


def revlex_compare(m1: Monomial, m2: Monomial) -> int:
    """Return 1, 0 or -1 as ``m1`` is greater than, equal to or less than ``m2`` in graded revlex."""
    k1, k2 = m1.revlex_key(), m2.revlex_key()
    return (k1 > k2) - (k1 < k2)


def monomials_of_degree(j: int) -> list[Monomial]:
    """All monomials of degree ``j`` in descending revlex order."""
    if j < 0:
        return []
    out = [Monomial(j - ey - ez, ey, ez) for ez in range(j + 1) for ey in range(j - ez + 1)]
    return out


_TOKEN = re.compile(r"\s*([xyz])\s*(?:\^\s*)?(\d*)\s*")


def _parse_monomial(text: str, offset: int) -> Monomial:
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if stripped == "":
        raise ParseError("empty monomial", lead)
    if stripped == "1":
        return ONE
    exps = {"x": 0, "y": 0, "z": 0}
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            col = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col]!r}", offset + col)
        var, power = m.group(1), m.group(2)
        if "^" in m.group(0) and power == "":
            raise ParseError("missing exponent after '^'", offset + m.end())
        exps[var] += int(power) if power else 1
        pos = m.end()
    return Monomial(exps["x"], exps["y"], exps["z"])


def parse_monomials(text: str) -> list[Monomial]:
    """Parse a comma-separated list such as ``"x^5, y^5, xy^2z"`` or ``"x3,y3,xyz"``."""
    out = []
    offset = 0
    for piece in text.split(","):
        out.append(_parse_monomial(piece, offset))
        offset += len(piece) + 1
    return out


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal of K[x,y,z] given by its minimal monomial generators.

    Generators are kept in descending revlex order. Build instances with
    :func:`minimize` (or :meth:`parse`) so minimality holds.
    """

    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        gens = self.generators
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and g.divides(h):
                    raise ValueError(f"generating set is not minimal: {g} divides {h}")

    @classmethod
    def parse(cls, text: str) -> MonomialIdeal:
        return minimize(parse_monomials(text))

    @cached_property
    def _exponents(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(g.exponents for g in self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains_exponents(m.ex, m.ey, m.ez)

    def contains_exponents(self, ex: int, ey: int, ez: int) -> bool:
        for gx, gy, gz in self._exponents:
            if gx <= ex and gy <= ey and gz <= ez:
                return True
        return False

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    @cached_property
    def pure_powers(self) -> tuple[int, int, int] | None:
        """Exponents (a, b, c) of x^a, y^b, z^c among the generators, or None if one is missing."""
        found: list[int | None] = [None, None, None]
        for g in self.generators:
            nz = [i for i, e in enumerate(g.exponents) if e]
            if len(nz) == 1:
                found[nz[0]] = g.exponents[nz[0]]
        if any(f is None for f in found):
            return None
        return (found[0], found[1], found[2])  # type: ignore[return-value]

    @property
    def is_artinian(self) -> bool:
        return ONE in self.generators or self.pure_powers is not None

    def basis(self, j: int) -> list[Monomial]:
        """Monomials of degree ``j`` outside the ideal, descending revlex."""
        return [m for m in monomials_of_degree(j) if m not in self]

    def colon(self, m: Monomial) -> MonomialIdeal:
        return minimize(g.colon(m) for g in self.generators)

    def truncate(self, max_degree: int) -> MonomialIdeal | None:
        """Ideal generated by the minimal generators of degree at most ``max_degree`` (None if none)."""
        gens = [g for g in self.generators if g.degree <= max_degree]
        return MonomialIdeal(tuple(gens)) if gens else None


def minimize(gens: Iterable[Monomial]) -> MonomialIdeal:
    """Discard every generator divisible by another one."""
    pool = sorted(set(gens), key=lambda g: g.degree)
    if not pool:
        raise ValueError("an ideal needs at least one generator")
    kept: list[Monomial] = []
    for g in pool:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    kept.sort(reverse=True)
    return MonomialIdeal(tuple(kept))


def hilbert_function(ideal: MonomialIdeal, j: int) -> int:
    """dim_K [R/I]_j by enumerating the degree-j monomials."""
    if j < 0:
        return 0
    return sum(1 for m in monomials_of_degree(j) if m not in ideal)


def socle_monomials(ideal: MonomialIdeal) -> list[Monomial]:
    """Monomials m outside I with xm, ym, zm in I."""
    if not ideal.is_artinian:
        raise ValueError(f"{ideal} is not Artinian")
    if ONE in ideal.generators:
        return []
    a, b, c = ideal.pure_powers  # type: ignore[misc]
    inside = ideal.contains_exponents
    out = []
    # a monomial outside I lies in the box below the pure powers
    for ex in range(a):
        for ey in range(b):
            for ez in range(c):
                if (
                    not inside(ex, ey, ez)
                    and inside(ex + 1, ey, ez)
                    and inside(ex, ey + 1, ez)
                    and inside(ex, ey, ez + 1)
                ):
                    out.append(Monomial(ex, ey, ez))
    out.sort(reverse=True)
    return out


def socle_degrees(ideal: MonomialIdeal) -> list[int]:
    """Degrees of the socle monomials, sorted, with multiplicity."""
    return sorted(m.degree for m in socle_monomials(ideal))


@dataclass(frozen=True)
class AciParams:
    """Parameters of I = (x^a, y^b, z^c, x^alpha y^beta z^gamma) with 0 < alpha < a etc."""

    a: int
    b: int
    c: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        for small, big, sname, bname in (
            (self.alpha, self.a, "alpha", "a"),
            (self.beta, self.b, "beta", "b"),
            (self.gamma, self.c, "gamma", "c"),
        ):
            if not 0 < small < big:
                raise ValueError(f"need 0 < {sname} < {bname}, got {sname}={small}, {bname}={big}")

    @classmethod
    def parse(cls, text: str) -> AciParams:
        try:
            values = [int(v) for v in text.replace(" ", "").split(",")]
        except ValueError as exc:
            raise ValueError(f"expected six comma-separated integers, got {text!r}") from exc
        if len(values) != 6:
            raise ValueError(f"expected six comma-separated integers, got {text!r}")
        return cls(*values)

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.alpha, self.beta, self.gamma)

    @property
    def mixed(self) -> Monomial:
        return Monomial(self.alpha, self.beta, self.gamma)

    @property
    def total(self) -> int:
        """Sum of the generator degrees a+b+c+alpha+beta+gamma."""
        return sum(self.as_tuple())

    @property
    def d(self) -> Fraction:
        return Fraction(self.total, 3)

    @property
    def d_is_integer(self) -> bool:
        return self.total % 3 == 0

    def permuted(self, perm: tuple[int, int, int]) -> AciParams:
        """Relabel the variables: new coordinate i is old coordinate perm[i]."""
        big = (self.a, self.b, self.c)
        small = (self.alpha, self.beta, self.gamma)
        return AciParams(*(big[i] for i in perm), *(small[i] for i in perm))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


def aci_ideal(p: AciParams) -> MonomialIdeal:
    gens = [Monomial(p.a, 0, 0), Monomial(0, p.b, 0), Monomial(0, 0, p.c), p.mixed]
    ideal = minimize(gens)
    if len(ideal) != 4:
        raise ValueError(f"I_{{{p}}} does not have four minimal generators")
    return ideal


def is_level(p: AciParams) -> bool:
    return p.a - p.alpha == p.b - p.beta == p.c - p.gamma


def aci_socle_degrees(p: AciParams) -> list[int]:
    """Closed form for the socle degrees of R/I_{a,b,c,alpha,beta,gamma}."""
    return sorted(
        [p.alpha + p.b + p.c - 3, p.a + p.beta + p.c - 3, p.a + p.b + p.gamma - 3]
    )
