"""Linear codes, CSS pairs, coset generators, leader tables."""

import numpy as np
import pytest

from cssconcat.codes import (
    CosetLeaderTable,
    CssPair,
    LinearCode,
    QuotientCode,
    bvector_pair,
    coset_generators,
    css_min_distance,
    min_weight_excluding,
    random_css_pair,
    validate_css,
)
from cssconcat.errors import (
    NotOrthogonal,
    RankDeficient,
    TooLarge,
    ZeroEntry,
)
from cssconcat.galois import Field

F2 = Field(2)

HAMMING_H = np.array([[1, 0, 1, 0, 1, 0, 1],
                      [0, 1, 1, 0, 0, 1, 1],
                      [0, 0, 0, 1, 1, 1, 1]])


def steane_code():
    return LinearCode.from_parity_check(F2, HAMMING_H)


def test_linear_code_dims():
    C = steane_code()
    assert (C.n, C.dim) == (7, 4)
    assert C.dual().dim == 3
    assert not F2.matmul(C.G, C.H.T).any()


def test_rank_deficient_generator():
    with pytest.raises(RankDeficient):
        LinearCode(F2, [[1, 1, 0], [1, 1, 0]])


def test_contains():
    C = steane_code()
    assert C.contains(C.G[0])
    assert C.dual().is_subcode(C)  # Hamming contains its dual


def test_quotient_distance_steane():
    C = steane_code()
    q = QuotientCode(C, C.dual())
    assert q.distance() == 3


def test_min_weight_excluding_full_vs_sub():
    C = steane_code()
    assert min_weight_excluding(C, C.dual(), 1 << 20) == 3
    full = LinearCode.full_space(F2, 4)
    even = LinearCode.from_parity_check(F2, np.ones((1, 4), dtype=np.int64))
    assert min_weight_excluding(full, even, 1 << 20) == 1
    assert min_weight_excluding(even, even.dual(), 1 << 20) == 2


def test_min_weight_cap():
    C = LinearCode.full_space(F2, 30)
    with pytest.raises(TooLarge):
        min_weight_excluding(C, C.dual(), 1 << 10)


def test_validate_css():
    C = steane_code()
    assert validate_css(C, C)
    even = LinearCode.from_parity_check(F2, np.ones((1, 7), dtype=np.int64))
    assert not validate_css(even, even)  # dual(C2)=span(1)^... all-ones not in even


def _check_pair_postconditions(pair):
    f = pair.field
    # pairing <g1_i, g2_j> = delta_ij
    gram = f.matmul(pair.g1, pair.g2.T)
    assert np.array_equal(gram, np.eye(pair.k, dtype=np.int64))
    # C1 = dual(C2) + span g1; C2 = dual(C1) + span g2
    from cssconcat.matrix import MatGF
    m1 = MatGF(f, np.concatenate([pair.C2.H, pair.g1], axis=0))
    assert m1.same_row_space(pair.C1.Gmat)
    m2 = MatGF(f, np.concatenate([pair.C1.H, pair.g2], axis=0))
    assert m2.same_row_space(pair.C2.Gmat)
    # g2 rows orthogonal to dual(C2)
    assert not f.matmul(pair.g2, pair.C2.H.T).any()


def test_coset_generators_steane():
    C = steane_code()
    pair = CssPair.build(C, C)
    assert pair.k == 1
    _check_pair_postconditions(pair)


def test_coset_generators_randomized():
    rng = np.random.default_rng(11)
    violations = 0
    for i in range(100):
        f = [Field(2), Field(3), Field(2, 2)][i % 3]
        n = int(rng.integers(3, 11))
        k = int(rng.integers(1, min(n, 4) + 1))
        pair = random_css_pair(rng, f, n, k)
        try:
            _check_pair_postconditions(pair)
        except AssertionError:
            violations += 1
    assert violations == 0


def test_explicit_g1_coset_generators():
    C = steane_code()
    g1 = None
    for row in C.G:
        if not C.dual().contains(row):
            g1 = row[None, :]
            break
    g2, c1perp = coset_generators(C, C, g1)
    assert F2.dot(g1[0], g2[0]) == 1
    assert not F2.matmul(c1perp, C.G.T).any()


def test_bvector_pair():
    pair = bvector_pair(F2, [1, 1, 1, 1], [1, 1, 1, 1])
    assert (pair.n, pair.k) == (4, 2)
    assert css_min_distance(pair) == 2
    with pytest.raises(ZeroEntry):
        bvector_pair(F2, [1, 0, 1, 1], [1, 1, 1, 1])
    f3 = Field(3)
    with pytest.raises(NotOrthogonal):
        bvector_pair(f3, [1, 1, 1, 1], [1, 1, 1, 2])


def test_leader_table_hamming():
    C = steane_code()
    table = CosetLeaderTable(C)
    assert table.weights.tolist() == [0] + [1] * 7
    # determinism and lexicographic tie-break: rebuild identical
    table2 = CosetLeaderTable(C)
    assert np.array_equal(table.leaders, table2.leaders)


def test_leader_table_decodes_within_radius():
    C = steane_code()
    table = CosetLeaderTable(C)
    for i in range(7):
        e = np.zeros(7, dtype=np.int64)
        e[i] = 1
        s = C.syndrome(e)
        assert np.array_equal(table.leader(s), e)


def test_leader_table_q3():
    f3 = Field(3)
    C = LinearCode.from_parity_check(f3, np.array([[1, 1, 1, 1]]))
    table = CosetLeaderTable(C)
    assert table.weights.tolist() == [0, 1, 1]
    # leader of syndrome 1 is the lexicographically smallest weight-1 vector
    assert table.leaders[1].tolist() == [0, 0, 0, 1]


def test_css_pair_invalid():
    even = LinearCode.from_parity_check(F2, np.ones((1, 7), dtype=np.int64))
    with pytest.raises(NotOrthogonal):
        CssPair.build(even, even)
