from __future__ import annotations

import itertools
import math
import random

import pytest
import sympy

from lzlef.matrix import (
    IntegerMatrix,
    _permanent_rowwise,
    _permanent_ryser,
    _rank_exact,
    _rank_mod_python,
    determinant,
    determinant_mod,
    has_maximal_rank,
    permanent,
    rank,
)


def brute_permanent(rows) -> int:
    n = len(rows)
    return sum(math.prod(rows[i][s[i]] for i in range(n)) for s in itertools.permutations(range(n)))


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -3, hi: int = 3) -> IntegerMatrix:
    return IntegerMatrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols)


def test_shape_validation():
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, ((1, 2),))


def test_dump_round_trip():
    mat = IntegerMatrix.from_rows([[1, 0, -3], [2, 5, 7]])
    assert IntegerMatrix.loads(mat.dumps()) == mat
    assert mat.dumps() == "2 3\n1 0 -3\n2 5 7\n"
    with pytest.raises(ValueError):
        IntegerMatrix.loads("")
    with pytest.raises(ValueError):
        IntegerMatrix.loads("3 1\n1\n")


def test_transpose():
    mat = IntegerMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert mat.transpose().entries == ((1, 4), (2, 5), (3, 6))
    assert IntegerMatrix.zeros(0, 3).transpose().rows == 3


def test_determinant_small_cases():
    assert determinant(IntegerMatrix.zeros(0, 0)) == 1
    assert determinant(IntegerMatrix.from_rows([[7]])) == 7
    assert determinant(IntegerMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntegerMatrix.from_rows([[1, 2], [2, 4]])) == 0
    with pytest.raises(ValueError):
        determinant(IntegerMatrix.zeros(2, 3))


def test_determinant_against_sympy():
    rng = random.Random(7)
    for n in range(1, 9):
        for _ in range(6):
            mat = random_matrix(rng, n, n)
            assert determinant(mat) == sympy.Matrix(mat.entries).det()


def test_determinant_big_entries():
    mat = IntegerMatrix.from_rows([[10**30, 1], [3, 10**30]])
    assert determinant(mat) == 10**60 - 3


def test_determinant_mod():
    rng = random.Random(11)
    for n in range(1, 7):
        mat = random_matrix(rng, n, n)
        for p in (2, 3, 5, 7, 101):
            assert determinant_mod(mat, p) == determinant(mat) % p


def test_rank_against_sympy():
    rng = random.Random(3)
    for rows, cols in [(3, 5), (5, 3), (6, 6), (4, 4)]:
        for _ in range(5):
            base = random_matrix(rng, rows, 2)
            other = random_matrix(rng, 2, cols)
            # product has rank at most 2, so the exact fallback is exercised
            low = IntegerMatrix.from_rows(
                [[sum(base.entries[i][k] * other.entries[k][j] for k in range(2)) for j in range(cols)]
                 for i in range(rows)], cols,
            )
            for mat in (low, random_matrix(rng, rows, cols)):
                expected = sympy.Matrix(mat.entries).rank()
                assert rank(mat) == expected
                assert _rank_exact(mat) == expected


def test_rank_mod_p():
    mat = IntegerMatrix.from_rows([[5, 0], [0, 1]])
    assert rank(mat, 5) == 1
    assert rank(mat, 0) == 2
    assert not has_maximal_rank(mat, 5)
    # the pure-python path for primes above 2^31
    big = 2**61 - 1
    assert rank(IntegerMatrix.from_rows([[big, 1], [0, 1]]), big) == 1
    rng = random.Random(5)
    for _ in range(20):
        mat = random_matrix(rng, 5, 6)
        for p in (2, 3, 7):
            assert rank(mat, p) == _rank_mod_python(mat, p)


def test_rank_empty():
    assert rank(IntegerMatrix.zeros(0, 4)) == 0
    assert has_maximal_rank(IntegerMatrix.zeros(0, 4))


@pytest.mark.parametrize("bad", [1, 4, 9, -3])
def test_rank_rejects_non_primes(bad):
    with pytest.raises(ValueError):
        rank(IntegerMatrix.from_rows([[1]]), bad)


def test_permanent_kernels_agree():
    rng = random.Random(2)
    for n in range(1, 8):
        for _ in range(5):
            mat = random_matrix(rng, n, n, 0, 2)
            expected = brute_permanent(mat.entries)
            assert _permanent_ryser(mat.entries, n) == expected
            assert _permanent_rowwise(mat.entries, n) == expected
            assert permanent(mat) == expected


def test_permanent_large_all_ones():
    # per(J_n) = n!, above the Ryser threshold
    n = 14
    mat = IntegerMatrix.from_rows([[1] * n for _ in range(n)])
    assert permanent(mat) == math.factorial(n)
    assert permanent(IntegerMatrix.zeros(0, 0)) == 1
    with pytest.raises(ValueError):
        permanent(IntegerMatrix.zeros(1, 2))
