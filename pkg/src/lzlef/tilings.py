"""Bi-adjacency matrices of triangular regions and lozenge tilings."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .matrix import IntegerMatrix
from .monomials import VARIABLES, Monomial, monomials_of_degree
from .regions import TriangularRegion, triangle_counts

DEFAULT_LIMIT = 10**6


def default_limit() -> int:
    env = os.environ.get("LZLEF_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


@dataclass(frozen=True)
class Tiling:
    """A set of lozenges, each a (down label, up label) pair of edge-adjacent triangles."""

    lozenges: frozenset[tuple[Monomial, Monomial]]

    def is_valid_for(self, region: TriangularRegion) -> bool:
        downs = [v for v, _ in self.lozenges]
        ups = [u for _, u in self.lozenges]
        if sorted(downs) != sorted(region.down_triangles) or sorted(ups) != sorted(region.up_triangles):
            return False
        return all(any(v * var == u for var in VARIABLES) for v, u in self.lozenges)

    def sorted_pairs(self) -> list[tuple[Monomial, Monomial]]:
        return sorted(self.lozenges, key=lambda vu: (vu[0].revlex_key(), vu[1].revlex_key()), reverse=True)


def neighbours(region: TriangularRegion) -> dict[Monomial, list[Monomial]]:
    """For each down triangle, the up triangles sharing an edge with it (x, y, z order)."""
    ups = region.up_set
    return {v: [v * var for var in VARIABLES if v * var in ups] for v in region.down_triangles}


def biadjacency(region: TriangularRegion) -> IntegerMatrix:
    """Rows: down triangles, columns: up triangles, both in descending revlex order."""
    col = {u: j for j, u in enumerate(region.up_triangles)}
    ncols = len(col)
    rows = []
    for v in region.down_triangles:
        row = [0] * ncols
        for var in VARIABLES:
            j = col.get(v * var)
            if j is not None:
                row[j] = 1
        rows.append(row)
    return IntegerMatrix(len(rows), ncols, tuple(tuple(r) for r in rows))


def is_tileable_structural(region: TriangularRegion) -> bool:
    """Tileability via the absence of down-heavy monomial subregions.

    A down-heavy region is reported as non-tileable outright (the whole
    region is itself a down-heavy monomial subregion).  Up-heavy regions are
    outside the criterion's reach; use :func:`is_tileable_matching`.
    """
    if region.is_empty:
        return True
    if region.balance > 0:
        raise ValueError(
            f"{region} has {region.balance} more up than down triangles; "
            "the subregion criterion needs a balanced region, use is_tileable_matching"
        )
    for e in range(region.d):
        for m in monomials_of_degree(e):
            ups, downs = triangle_counts(region, m)
            if downs > ups:
                return False
    return True


def _graph(region: TriangularRegion) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from((("v", v) for v in region.down_triangles), bipartite=0)
    g.add_nodes_from((("u", u) for u in region.up_triangles), bipartite=1)
    for v, us in neighbours(region).items():
        g.add_edges_from((("v", v), ("u", u)) for u in us)
    return g


def maximum_matching_size(region: TriangularRegion) -> int:
    if region.is_empty:
        return 0
    g = _graph(region)
    top = [("v", v) for v in region.down_triangles]
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=top)
    return len(matching) // 2


def is_tileable_matching(region: TriangularRegion) -> bool:
    if not region.is_balanced:
        return False
    return maximum_matching_size(region) == len(region.down_triangles)


def iter_tilings(region: TriangularRegion) -> Iterator[Tiling]:
    """Yield every lozenge tiling of ``region`` exactly once."""
    if not region.is_balanced:
        return
    # each up triangle borders down triangles u/x, u/y, u/z
    up_nbrs = {}
    downs = region.down_set
    for u in region.up_triangles:
        up_nbrs[u] = [
            v for v in (_div(u, var) for var in VARIABLES) if v is not None and v in downs
        ]
    order = list(region.up_triangles)
    used: set[Monomial] = set()
    chosen: list[tuple[Monomial, Monomial]] = []

    def search(k: int) -> Iterator[Tiling]:
        if k == len(order):
            yield Tiling(frozenset(chosen))
            return
        u = order[k]
        for v in up_nbrs[u]:
            if v in used:
                continue
            used.add(v)
            chosen.append((v, u))
            yield from search(k + 1)
            chosen.pop()
            used.discard(v)

    yield from search(0)


def _div(u: Monomial, var: Monomial) -> Monomial | None:
    return u.quotient(var) if var.divides(u) else None


def enumerate_tilings(region: TriangularRegion, limit: int | None = None) -> list[Tiling]:
    if limit is None:
        limit = default_limit()
    out = []
    for t in iter_tilings(region):
        if len(out) >= limit:
            break
        out.append(t)
    return out


def count_tilings(region: TriangularRegion, limit: int | None = None) -> int:
    if limit is None:
        limit = default_limit()
    n = 0
    for _ in iter_tilings(region):
        n += 1
        if n >= limit:
            break
    return n
