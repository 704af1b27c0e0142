"""Row reduction and solving over small fields."""

import numpy as np
import pytest

from subsystem_codes import linalg
from subsystem_codes.gf import FieldSpec


@pytest.fixture(params=[(2, 1), (3, 1), (2, 2), (3, 2)])
def field(request):
    return FieldSpec(*request.param)


def test_rref_idempotent_and_rank(field):
    rng = np.random.default_rng(7)
    for _ in range(25):
        mat = rng.integers(0, field.q, size=(4, 6)).astype(np.int64)
        red, piv = linalg.rref(mat, field)
        again, piv2 = linalg.rref(red, field)
        assert np.array_equal(red, again)
        assert piv == piv2
        assert red.shape[0] == len(piv) == linalg.rank(mat, field)
        # pivot columns hold an identity
        for i, c in enumerate(piv):
            col = red[:, c]
            assert col[i] == 1 and (col != 0).sum() == 1


def test_nullspace_annihilates(field):
    rng = np.random.default_rng(8)
    for _ in range(25):
        mat = rng.integers(0, field.q, size=(3, 6)).astype(np.int64)
        ker = linalg.nullspace(mat, field)
        prod = linalg.matmul(mat, ker.T, field)
        assert not prod.any()
        assert ker.shape[0] == 6 - linalg.rank(mat, field)
        assert linalg.rank(ker, field) == ker.shape[0]


def test_solve_and_membership(field):
    rng = np.random.default_rng(9)
    for _ in range(25):
        mat = rng.integers(0, field.q, size=(4, 5)).astype(np.int64)
        x = rng.integers(0, field.q, size=5).astype(np.int64)
        b = linalg.matmul(mat, x.reshape(-1, 1), field)[:, 0]
        sol = linalg.solve(mat, b, field)
        assert sol is not None
        assert np.array_equal(
            linalg.matmul(mat, sol.reshape(-1, 1), field)[:, 0], b)
        red, piv = linalg.rref(mat.T, field)
        # any row-space combination must be recognized as a member
        v = linalg.matmul(x.reshape(1, -1), mat.T, field)[0]
        coeffs = linalg.row_space_contains(red, piv, v, field)
        assert coeffs is not None


def test_solve_infeasible():
    f = FieldSpec(2)
    mat = np.array([[1, 0], [1, 0]], dtype=np.int64)
    assert linalg.solve(mat, np.array([1, 0]), f) is None


def test_matmul_matches_naive():
    f = FieldSpec(2, 2)
    rng = np.random.default_rng(10)
    a = rng.integers(0, 4, size=(3, 4)).astype(np.int64)
    b = rng.integers(0, 4, size=(4, 2)).astype(np.int64)
    got = linalg.matmul(a, b, f)
    for i in range(3):
        for j in range(2):
            acc = 0
            for k in range(4):
                acc = f.add(acc, f.mul(int(a[i, k]), int(b[k, j])))
            assert got[i, j] == acc
