"""Generalized Reed-Solomon codes over an extension field GF(Q).

A GRS code of dimension K evaluates polynomials of degree < K at N distinct
points, scaling column j by a nonzero multiplier v_j.  The dual is again GRS
on the same points with the classical dual multipliers; the canonical parity
check stored here is that dual's Vandermonde-style generator, and syndromes
fed to the bounded-distance decoder must be computed against it.

The decoder solves the key equation with the extended Euclidean algorithm
(error locator + evaluator), locates roots among the inverse evaluation
points, and recovers magnitudes with the derivative formula.  Its output is
always re-verified against the input syndrome; anything inconsistent is
reported as DecodeFailure rather than silently miscorrected.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    BadDimension,
    BadField,
    DecodeFailure,
    DimensionConflict,
    DomainError,
    DuplicatePoint,
    ZeroMultiplier,
)
from .codes import LinearCode
from .galois import Extension


# -- polynomial helpers over the extension (coefficient lists, low first) ----

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p):
    return len(p) - 1


def _poly_add(ext, a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = ext.add(x, y)
    return _trim(out)


def _poly_scale(ext, a, c):
    return _trim([ext.mul(x, c) for x in a])


def _poly_mul(ext, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ext.add(out[i + j], ext.mul(x, y))
    return _trim(out)


def _poly_divmod(ext, a, b):
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = ext.inv(b[-1])
    for i in range(len(a) - 1, len(b) - 2, -1):
        if a[i]:
            c = ext.mul(a[i], inv_lead)
            q[i - (len(b) - 1)] = c
            for j, bj in enumerate(b):
                a[i - (len(b) - 1) + j] = ext.sub(a[i - (len(b) - 1) + j],
                                                  ext.mul(c, bj))
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_eval(ext, p, x):
    acc = 0
    for c in reversed(p):
        acc = ext.add(ext.mul(acc, x), c)
    return acc


def _poly_deriv(ext, p):
    char = ext.base.p
    out = []
    for i in range(1, len(p)):
        out.append(ext.mul(p[i], i % char))
    return _trim(out)


class GrsCode:
    """A generalized Reed-Solomon code (see module docstring).

    Use :func:`grs_code` / :func:`nested_grs_pair` to construct instances.
    """

    def __init__(self, ext: Extension, points, multipliers, K: int):
        points = [int(x) for x in points]
        multipliers = [int(x) for x in multipliers]
        N = len(points)
        if len(set(points)) != N:
            raise DuplicatePoint("evaluation points must be distinct")
        if len(multipliers) != N:
            raise DomainError("need one multiplier per point")
        if any(v == 0 for v in multipliers):
            raise ZeroMultiplier("column multipliers must be nonzero")
        if not 1 <= K <= N:
            raise BadDimension(f"dimension K={K} out of range [1, {N}]")
        if N > ext.Q:
            raise DomainError("more points than field elements")
        self.ext = ext
        self.N = N
        self.K = K
        self.points = np.array(points, dtype=np.int64)
        self.multipliers = np.array(multipliers, dtype=np.int64)
        # generator: row i = (v_j * a_j^i)
        G = np.empty((K, N), dtype=np.int64)
        row = list(multipliers)
        for i in range(K):
            G[i] = row
            row = [ext.mul(c, a) for c, a in zip(row, points)]
        self.G = G
        # dual multipliers u_j = v_j^{-1} * prod_{m != j} (a_j - a_m)^{-1}
        u = []
        for j in range(N):
            prod = 1
            for m in range(N):
                if m != j:
                    prod = ext.mul(prod, ext.sub(points[j], points[m]))
            u.append(ext.div(ext.inv(multipliers[j]), prod))
        self.dual_multipliers = np.array(u, dtype=np.int64)
        M = N - K
        H = np.empty((M, N), dtype=np.int64)
        row = list(u)
        for i in range(M):
            H[i] = row
            row = [ext.mul(c, a) for c, a in zip(row, points)]
        self.H = H
        self._code = None

    @property
    def t(self):
        """Bounded-distance correction radius."""
        return (self.N - self.K) // 2

    def as_linear_code(self) -> LinearCode:
        if self._code is None:
            code = LinearCode(self.ext.as_field(), self.G)
            if self.N - self.K > 0:
                code._Hmat = None  # default null-space H; canonical H kept separate
            self._code = code
        return self._code

    def dual(self) -> "GrsCode":
        if self.K == self.N:
            raise BadDimension("dual of the full space has dimension 0")
        return GrsCode(self.ext, self.points, self.dual_multipliers,
                       self.N - self.K)

    def encode(self, msg):
        return self.ext.as_field().matmul(np.asarray(msg, dtype=np.int64), self.G)

    def syndrome(self, e):
        """Syndrome of an error vector against the canonical parity check."""
        if self.N == self.K:
            return np.zeros(0, dtype=np.int64)
        return self.ext.as_field().matmul(np.asarray(e, dtype=np.int64), self.H.T)

    def bd_decode(self, syndrome):
        """Errors-only bounded-distance decoding from a canonical syndrome.

        Returns the unique error vector of weight <= t matching the syndrome,
        or raises DecodeFailure.
        """
        ext = self.ext
        R = self.N - self.K
        syndrome = np.asarray(syndrome, dtype=np.int64).reshape(-1)
        if syndrome.shape[0] != R:
            raise DomainError(f"syndrome must have length {R}")
        e = np.zeros(self.N, dtype=np.int64)
        if not syndrome.any():
            return e
        t = R // 2
        if t == 0:
            raise DecodeFailure("nonzero syndrome but zero correction radius")
        if (self.points == 0).any():
            raise DomainError("decoding requires nonzero evaluation points")
        S = _trim([int(c) for c in syndrome])
        # extended Euclid on (z^R, S): track r and the S-cofactor v
        r_prev = [0] * R + [1]
        r_cur = list(S)
        v_prev: list[int] = []
        v_cur = [1]
        stop = (R + 1) // 2
        while r_cur and _deg(r_cur) >= stop:
            q, rem = _poly_divmod(ext, r_prev, r_cur)
            r_prev, r_cur = r_cur, rem
            v_next = _poly_add(ext, v_prev, _poly_scale(ext, _poly_mul(ext, q, v_cur),
                                                        ext.neg(1)))
            v_prev, v_cur = v_cur, v_next
        lam, omega = v_cur, r_cur
        if not lam or lam[0] == 0:
            raise DecodeFailure("degenerate error locator")
        c = ext.inv(lam[0])
        lam = _poly_scale(ext, lam, c)
        omega = _poly_scale(ext, omega, c)
        if _deg(lam) > t:
            raise DecodeFailure("locator degree exceeds radius")
        dlam = _poly_deriv(ext, lam)
        nerr = 0
        for j in range(self.N):
            x = int(self.points[j])
            xinv = ext.inv(x)
            if _poly_eval(ext, lam, xinv) == 0:
                num = ext.mul(x, _poly_eval(ext, omega, xinv))
                den = _poly_eval(ext, dlam, xinv)
                if den == 0:
                    raise DecodeFailure("repeated locator root")
                y = ext.neg(ext.div(num, den))
                e[j] = ext.div(y, int(self.dual_multipliers[j]))
                nerr += 1
        if nerr != _deg(lam) or nerr > t:
            raise DecodeFailure("locator roots do not match its degree")
        if not np.array_equal(self.syndrome(e), syndrome):
            raise DecodeFailure("re-encoded syndrome mismatch")
        return e

    def __repr__(self):
        return f"GrsCode[{self.N},{self.K}] over GF({self.ext.Q})"


def grs_code(ext: Extension, points, multipliers, K: int) -> GrsCode:
    return GrsCode(ext, points, multipliers, K)


def default_points(ext: Extension, N: int):
    """The first N powers of the primitive root: (1, alpha, alpha^2, ...)."""
    if N > ext.Q - 1:
        raise DomainError(f"default points need N <= Q-1 = {ext.Q - 1}")
    return [ext.alpha_pow(j) for j in range(N)]


def nested_grs_pair(ext: Extension, N: int, K1: int, K2: int):
    """A CSS-compatible nested pair (D1, D2) of GRS codes on shared points.

    D1 is the plain RS code of dimension K1; D2 is the dual of the RS code of
    dimension N-K2 (again GRS on the same points), so dual(D2) is the RS code
    of dimension N-K2, contained in D1 whenever K1 + K2 >= N.
    """
    if K1 + K2 < N:
        raise DimensionConflict("need K1 + K2 >= N for a nested pair")
    points = default_points(ext, N)
    ones = [1] * N
    D1 = GrsCode(ext, points, ones, K1)
    if K2 == N:
        D2 = GrsCode(ext, points, ones, N)
    else:
        rs = GrsCode(ext, points, ones, N - K2)
        D2 = rs.dual()
    return D1, D2


def self_dual_multiplier_grs(ext: Extension, points, K: int) -> GrsCode:
    """A GRS code whose dual shares its multipliers (characteristic 2 only).

    With v_j the square root of prod_{m != j}(a_j - a_m)^{-1}, the dual of
    GRS_K(a, v) is GRS_{N-K}(a, v); dimension nesting then gives towers
    dual(D) <= D <= D' on the same points whenever N - K <= K.
    """
    if ext.base.p != 2:
        raise BadField("square-root multipliers need characteristic 2")
    points = [int(x) for x in points]
    N = len(points)
    v = []
    for j in range(N):
        prod = 1
        for m in range(N):
            if m != j:
                prod = ext.mul(prod, ext.sub(points[j], points[m]))
        s = ext.inv(prod)
        v.append(ext.pow(s, ext.Q // 2))  # square root in char 2
    return GrsCode(ext, points, v, K)
