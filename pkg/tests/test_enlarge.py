"""Enlargement, fixed-point-free matrices, distance-2 generator family."""

import numpy as np
import pytest

from cssconcat.codes import CssPair, LinearCode, css_min_distance, min_weight_excluding
from cssconcat.enlarge import (
    EnlargedCode,
    _verify_fixed_point_free,
    enlargement_distance_floor,
    distance2_inner_generator,
    enlarged_concat,
    fixed_point_free_matrix,
    steane_enlarge,
    symplectic_dual,
    symplectic_min_distance,
)
from cssconcat.errors import (
    BadField,
    BadLength,
    ConditionViolation,
    DomainError,
    PremiseViolation,
    TooLarge,
)
from cssconcat.galois import Extension, Field
from cssconcat.outer_grs import GrsCode, self_dual_multiplier_grs

F2 = Field(2)
F4 = Field(2, 2)

HAMMING_H = np.array([[1, 0, 1, 0, 1, 0, 1],
                      [0, 1, 1, 0, 0, 1, 1],
                      [0, 0, 0, 1, 1, 1, 1]])


def test_fpf_golden_2x2():
    M = fixed_point_free_matrix(F2, 2)
    assert M.tolist() == [[0, 1], [1, 1]]
    assert _verify_fixed_point_free(F2, M)


def test_fpf_various_sizes():
    for f, m in ((F2, 2), (F2, 3), (F2, 5), (F4, 2), (F4, 3),
                 (Field(3), 2), (Field(3), 4), (Field(5), 3)):
        M = fixed_point_free_matrix(f, m)
        assert M.shape == (m, m)
        assert _verify_fixed_point_free(f, M)


def test_fpf_m1_rejected():
    with pytest.raises(DomainError):
        fixed_point_free_matrix(F2, 1)


def _hamming_pair():
    C = LinearCode.from_parity_check(F2, HAMMING_H)
    Cp = LinearCode.from_parity_check(F2, HAMMING_H[:1])
    return C, Cp


def test_steane_enlarge_layout():
    C, Cp = _hamming_pair()
    enl = steane_enlarge(C, Cp)
    assert (enl.length, enl.logical_dims) == (7, 3)
    K, n = C.dim, C.n
    assert enl.G.shape == (2 * K + (Cp.dim - K), 2 * n)
    assert np.array_equal(enl.G[:K, :n], C.G)
    assert not enl.G[:K, n:].any()
    assert np.array_equal(enl.G[K:2 * K, n:], C.G)


def test_steane_enlarge_premises():
    C, Cp = _hamming_pair()
    with pytest.raises(PremiseViolation):
        steane_enlarge(C, C)  # no dimension gap
    even = LinearCode.from_parity_check(F2, np.ones((1, 4), dtype=np.int64))
    with pytest.raises(PremiseViolation):
        steane_enlarge(even, LinearCode.full_space(F2, 4))  # gap 1
    with pytest.raises(PremiseViolation):
        steane_enlarge(LinearCode.full_space(F2, 3), LinearCode.full_space(F2, 3))


def test_enlarged_contains_symplectic_dual():
    C, Cp = _hamming_pair()
    enl = steane_enlarge(C, Cp)
    H = symplectic_dual(F2, enl.G)
    from cssconcat.matrix import MatGF
    G = MatGF(F2, enl.G)
    assert all(G.span_contains(h) for h in H)


def test_symplectic_distance_css_correspondence():
    C = LinearCode.from_parity_check(F2, HAMMING_H)
    pair = CssPair.build(C, C)
    z = np.zeros_like(C.G)
    G = np.block([[C.G, z], [z, C.G]])
    assert symplectic_min_distance(F2, G) == css_min_distance(pair) == 3


def test_symplectic_distance_full_space():
    G = np.eye(8, dtype=np.int64)
    assert symplectic_min_distance(F2, G) == 1


def test_symplectic_distance_cap():
    with pytest.raises(TooLarge):
        symplectic_min_distance(F2, np.eye(40, dtype=np.int64), cap=1 << 10)


def _floor_check(C, Cp, cap=1 << 22):
    enl = steane_enlarge(C, Cp)
    d = min_weight_excluding(C, Cp.dual(), cap)
    dp = min_weight_excluding(Cp, Cp.dual(), cap)
    floor = enlargement_distance_floor(d, dp, C.field.q)
    brute = symplectic_min_distance(C.field, enl.G, cap=cap)
    assert brute >= floor, (brute, floor)
    return brute, floor


def test_enlargement_distance_floor_instances():
    # 1: Hamming [7,4] inside a [7,6]
    C, Cp = _hamming_pair()
    _floor_check(C, Cp)
    # 2: [8,4] extended Hamming (self-dual) inside [8,7] even-weight
    He = np.array([[1, 1, 1, 1, 1, 1, 1, 1],
                   [0, 0, 0, 0, 1, 1, 1, 1],
                   [0, 0, 1, 1, 0, 0, 1, 1],
                   [0, 1, 0, 1, 0, 1, 0, 1]])
    C8 = LinearCode.from_parity_check(F2, He)
    Cp8 = LinearCode.from_parity_check(F2, He[:1])
    _floor_check(C8, Cp8)
    # 3: self-dual [4,2] inside the full space
    C4 = LinearCode(F2, np.array([[1, 1, 0, 0], [0, 0, 1, 1]]))
    _floor_check(C4, LinearCode.full_space(F2, 4))
    # 4: GF(4) self-dual [4,2] inside the full space
    C4q = LinearCode(F4, np.array([[1, 0, 1, 0], [0, 1, 0, 1]]))
    _floor_check(C4q, LinearCode.full_space(F4, 4))
    # 5: GF(4) self-dual [6,3] (three repetition blocks) inside the full space
    C6 = LinearCode(F4, np.array([[1, 1, 0, 0, 0, 0],
                                  [0, 0, 1, 1, 0, 0],
                                  [0, 0, 0, 0, 1, 1]]))
    _floor_check(C6, LinearCode.full_space(F4, 6))


def test_distance2_generator_golden():
    G3, b, gs = distance2_inner_generator(F4, 3)
    z, z2 = 2, 3
    assert G3.a.tolist() == [[z, z2, 1], [z2, z, 0]]
    G4, _, _ = distance2_inner_generator(F4, 4)
    assert G4.a.tolist() == [[z, z2, z, z2], [z2, z, 0, 0], [1, z, z, 0]]


def test_distance2_generator_properties():
    for f in (F4, Field(2, 4)):
        for n in range(3, 11 if f is F4 else 8):
            G, b, gs = distance2_inner_generator(f, n)
            assert G.rows == n - 1 and G.cols == n
            assert (b != 0).all()
            assert f.dot(b, b) == 0
            gsm = np.array(gs)
            assert np.array_equal(f.matmul(gsm, gsm.T),
                                  np.eye(n - 2, dtype=np.int64))
            assert not f.matmul(gsm, b[:, None]).any()
            # span is an [n, n-1] code whose dual is spanned by b
            C = LinearCode(f, G.a)
            assert C.dim == n - 1
            assert C.Hmat.same_row_space(
                __import__("cssconcat.matrix", fromlist=["MatGF"]).MatGF(f, b[None, :]))


def test_distance2_generator_errors():
    with pytest.raises(BadField):
        distance2_inner_generator(F2, 4)
    with pytest.raises(BadField):
        distance2_inner_generator(Field(2, 3), 4)
    with pytest.raises(BadLength):
        distance2_inner_generator(F4, 2)


def _tower_gf4(N, K, Kp):
    e16 = Extension(F4, 2)
    pts = [e16.alpha_pow(j) for j in range(N)]
    D = self_dual_multiplier_grs(e16, pts, K)
    Dp = GrsCode(e16, pts, D.multipliers, Kp)
    return e16, D, Dp


def test_enlarged_concat_builds():
    G4m, b4, gs4 = distance2_inner_generator(F4, 4)
    C1 = LinearCode(F4, G4m.a)
    e16, D, Dp = _tower_gf4(5, 3, 5)
    enl = enlarged_concat(C1, gs4, e16, D, Dp)
    assert isinstance(enl, EnlargedCode)
    assert (enl.length, enl.logical_dims) == (20, 6)
    assert enl.report["guaranteed"] >= 1


def test_enlarged_concat_conditions():
    G4m, b4, gs4 = distance2_inner_generator(F4, 4)
    C1 = LinearCode(F4, G4m.a)
    e16, D, Dp = _tower_gf4(5, 3, 5)
    # (A): a code not containing its dual
    bad = LinearCode(F4, np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]))
    with pytest.raises(ConditionViolation, match=r"\(A\)"):
        enlarged_concat(bad, gs4[:2], e16, D, Dp)
    # (B): non-orthonormal generators
    with pytest.raises(ConditionViolation, match=r"\(B\)"):
        enlarged_concat(C1, np.array(gs4) * 0 + 1, e16, D, Dp)
    # D = Dprime leaves no enlargement gap
    with pytest.raises(ConditionViolation):
        enlarged_concat(C1, gs4, e16, D, D)


def test_enlarged_concat_tiny_brute():
    """[[4,2]] from a trivial length-1 inner code; floor checked by brute force."""
    C1 = LinearCode.full_space(F4, 1)
    g1 = np.array([[1]])
    e4 = Extension(F4, 1)
    pts = [e4.alpha_pow(j) for j in range(3)] + [0]
    D = self_dual_multiplier_grs(e4, pts, 2)
    Dp = GrsCode(e4, pts, D.multipliers, 4)
    enl = enlarged_concat(C1, g1, e4, D, Dp)
    assert (enl.length, enl.logical_dims) == (4, 2)
    brute = symplectic_min_distance(F4, enl.G)
    assert brute >= enl.report["guaranteed"]
