"""Dense integer matrices with exact determinant, permanent and rank."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

# 2^31 - 1: products of two residues fit in int64
_LARGE_PRIME = 2_147_483_647

RYSER_MAX = 12


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        entries = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> IntegerMatrix:
        cols = tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        return IntegerMatrix(self.cols, self.rows, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def dumps(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(v) for v in r) for r in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> IntegerMatrix:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix dump")
        rows, cols = (int(v) for v in lines[0].split())
        body = [[int(v) for v in ln.split()] for ln in lines[1 : 1 + rows]]
        if len(body) != rows:
            raise ValueError(f"expected {rows} rows, found {len(body)}")
        return cls(rows, cols, tuple(tuple(r) for r in body))


def _require_square(m: IntegerMatrix, what: str) -> None:
    if not m.is_square:
        raise ValueError(f"{what} needs a square matrix, got {m.rows}x{m.cols}")


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    _require_square(m, "determinant")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            if lead == 0:
                if pivot != prev:
                    for j in range(k + 1, n):
                        row_i[j] = row_i[j] * pivot // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_mod(m: IntegerMatrix, p: int) -> int:
    """Determinant reduced into [0, p)."""
    _require_square(m, "determinant")
    n = m.rows
    a = [[v % p for v in r] for r in m.entries]
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[k])]
    return det % p


def _rank_mod_numpy(m: IntegerMatrix, p: int) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return _rank_mod_array(np.array(m.entries, dtype=np.int64), p)


def _rank_mod_array(arr: np.ndarray, p: int) -> int:
    a = arr % p
    rows, cols = a.shape
    if rows > cols:
        a = a.T.copy()
        rows, cols = cols, rows
    r = 0
    for c in range(cols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        below = a[r + 1 :, c].copy()
        nzb = np.nonzero(below)[0]
        if nzb.size:
            idx = r + 1 + nzb
            a[idx, c:] = (a[idx, c:] - np.outer(below[nzb], a[r, c:])) % p
        r += 1
        if r == rows:
            break
    return r


def _rank_mod_python(m: IntegerMatrix, p: int) -> int:
    a = [[v % p for v in r] for r in m.entries]
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, rows):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def _rank_exact(m: IntegerMatrix) -> int:
    """Rank over Q by fraction-free elimination with pivot tracking."""
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        row_r = a[r]
        for i in range(r + 1, rows):
            row_i = a[i]
            lead = row_i[c]
            for j in range(c + 1, cols):
                row_i[j] = (row_i[j] * pivot - lead * row_r[j]) // prev
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == rows:
            break
    return r


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def check_characteristic(characteristic: int) -> None:
    if characteristic != 0 and (characteristic < 2 or not _is_prime(characteristic)):
        raise ValueError(f"characteristic must be 0 or a prime, got {characteristic}")


def rank(m: IntegerMatrix, characteristic: int = 0) -> int:
    """Exact rank over Q (characteristic 0) or over the prime field F_p."""
    check_characteristic(characteristic)
    if m.rows == 0 or m.cols == 0:
        return 0
    if characteristic:
        if characteristic < _LARGE_PRIME:
            return _rank_mod_numpy(m, characteristic)
        return _rank_mod_python(m, characteristic)
    # rank mod p never exceeds the rank over Q, so a maximal modular rank is exact
    r = _rank_mod_numpy(m, _LARGE_PRIME)
    if r == min(m.rows, m.cols):
        return r
    return _rank_exact(m)


def has_maximal_rank(m: IntegerMatrix, characteristic: int = 0) -> bool:
    return rank(m, characteristic) == min(m.rows, m.cols)


def array_has_maximal_rank(arr: np.ndarray, characteristic: int = 0) -> bool:
    """:func:`has_maximal_rank` for an int64 array with small entries."""
    rows, cols = arr.shape
    full = min(rows, cols)
    if full == 0:
        return True
    if characteristic and characteristic < _LARGE_PRIME:
        return _rank_mod_array(arr, characteristic) == full
    if characteristic == 0 and _rank_mod_array(arr, _LARGE_PRIME) == full:
        return True
    return has_maximal_rank(IntegerMatrix.from_rows(arr.tolist(), cols), characteristic)


def _permanent_ryser(a: Sequence[Sequence[int]], n: int) -> int:
    # Gray-code walk over column subsets; row sums updated one column at a time
    sums = [0] * n
    total = 0
    prev_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        changed = gray ^ prev_gray
        col = changed.bit_length() - 1
        if gray & changed:
            for i in range(n):
                sums[i] += a[i][col]
        else:
            for i in range(n):
                sums[i] -= a[i][col]
        prev_gray = gray
        prod = 1
        for s in sums:
            prod *= s
            if not prod:
                break
        if prod:
            total += -prod if bin(gray).count("1") % 2 else prod
    return total * (-1) ** n


def _permanent_rowwise(a: Sequence[Sequence[int]], n: int) -> int:
    # dynamic programming over rows, memoised on the bitmask of used columns
    support = [[(j, v) for j, v in enumerate(row) if v] for row in a]
    states: dict[int, int] = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = defaultdict(int)
        for mask, count in states.items():
            for j, v in support[i]:
                bit = 1 << j
                if not mask & bit:
                    nxt[mask | bit] += count * v
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def permanent(m: IntegerMatrix) -> int:
    """Exact permanent (Ryser inclusion-exclusion for small n, row-wise DP otherwise)."""
    _require_square(m, "permanent")
    n = m.rows
    if n == 0:
        return 1
    if n <= RYSER_MAX:
        return _permanent_ryser(m.entries, n)
    return _permanent_rowwise(m.entries, n)
