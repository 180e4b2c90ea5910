import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from braidscope.smith import invariant_factors, matrix_rank, smith_normal_form


def sympy_factors(m):
    if not m or not m[0]:
        return []
    d = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    return sorted((abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0))


@pytest.mark.parametrize("m, expected", [
    ([[2]], [2]),
    ([[0, 0], [0, 0]], []),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[1, 1], [1, -1]], [1, 2]),
    ([[6, 0], [0, 4]], [2, 12]),
])
def test_known_forms(m, expected):
    assert invariant_factors(m) == expected


@pytest.mark.parametrize("seed", range(60))
def test_against_sympy(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 6), rng.randint(1, 6)
    lo, hi = rng.choice([(-1, 1), (-3, 3), (-9, 9)])
    m = [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]
    ours = invariant_factors(m)
    assert sorted(ours) == sympy_factors(m)
    assert all(b % a == 0 for a, b in zip(ours, ours[1:]))


def test_sparse_rows_and_rank():
    rows = [{0: 1, 5: -1}, {5: 1, 9: -1}, {0: 1, 9: -1}]
    assert matrix_rank(rows) == 2
    assert invariant_factors([{}, {3: 4}]) == [4]


def test_dense_wrapper_shape():
    d = smith_normal_form([[2, 4], [6, 8], [0, 0]])
    assert d == [[2, 0], [0, 4], [0, 0]]
