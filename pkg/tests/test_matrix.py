"""Exact linear algebra tests."""

import numpy as np
import pytest

from cssconcat.errors import Singular
from cssconcat.galois import Field
from cssconcat.matrix import MatGF, enumerate_span


def test_rref_identity():
    f = Field(2)
    M = MatGF.identity(f, 4)
    R, piv, rank = M.rref()
    assert rank == 4 and piv == (0, 1, 2, 3)
    assert np.array_equal(R.a, np.eye(4, dtype=np.int64))


def test_rank_and_nullspace():
    f = Field(2)
    M = MatGF(f, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert M.rank == 2
    N = M.null_space()
    assert N.rows == 1
    assert not f.matmul(M.a, N.a.T).any()


def test_nullspace_random_fields():
    rng = np.random.default_rng(3)
    for f in (Field(2), Field(3), Field(2, 2), Field(5)):
        for _ in range(10):
            A = rng.integers(0, f.q, size=(4, 7))
            M = MatGF(f, A)
            N = M.null_space()
            assert M.rank + N.rows == 7
            assert not f.matmul(A, N.a.T).any()


def test_invert_roundtrip():
    rng = np.random.default_rng(4)
    f = Field(3)
    while True:
        A = rng.integers(0, 3, size=(5, 5))
        M = MatGF(f, A)
        if M.rank == 5:
            break
    inv = M.invert()
    assert np.array_equal(f.matmul(A, inv.a), np.eye(5, dtype=np.int64))


def test_invert_singular():
    f = Field(2)
    with pytest.raises(Singular):
        MatGF(f, [[1, 1], [1, 1]]).invert()


def test_span_membership():
    f = Field(2)
    M = MatGF(f, [[1, 1, 0, 0], [0, 0, 1, 1]])
    assert M.span_contains([1, 1, 1, 1])
    assert not M.span_contains([1, 0, 0, 0])
    mask = M.span_contains_rows(np.array([[1, 1, 0, 0], [1, 0, 1, 0]]))
    assert mask.tolist() == [True, False]


def test_same_row_space():
    f = Field(3)
    A = MatGF(f, [[1, 2, 0], [0, 1, 1]])
    B = MatGF(f, [[1, 0, 1], [0, 2, 2]])  # row ops of A
    assert A.same_row_space(B)
    assert not A.same_row_space(MatGF(f, [[1, 0, 0], [0, 1, 0]]))


def test_matrix_text_roundtrip():
    f = Field(2, 2)
    M = MatGF(f, [[0, 1, 2], [3, 2, 1]])
    M2 = MatGF.from_text(f, M.to_text())
    assert M == M2


def test_enumerate_span_counts():
    f = Field(3)
    G = np.array([[1, 0, 2], [0, 1, 1]])
    words = np.concatenate(list(enumerate_span(f, G)))
    assert words.shape == (9, 3)
    assert len({tuple(w) for w in words}) == 9
