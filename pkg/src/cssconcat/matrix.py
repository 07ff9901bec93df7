"""Dense exact linear algebra over a finite field.

A :class:`MatGF` wraps a 2-D numpy integer array of element codes together
with the field the codes live in.  Elimination uses first-nonzero pivoting;
fields are exact so no numerical strategy is needed.  Intended scale is
desk-size (dimensions up to a few thousand).
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, FieldMismatch, Singular


class MatGF:
    """A matrix over a finite field.

    Parameters
    ----------
    field : Field (or extension field view)
        Element arithmetic provider.
    array : array-like of int
        2-D array of element codes in ``[0, field.q)``.
    """

    def __init__(self, field, array):
        a = np.asarray(array, dtype=np.int64)
        if a.ndim == 1:
            a = a[None, :]
        if a.ndim != 2:
            raise DomainError("matrix must be 2-D")
        if a.size and (a.min() < 0 or a.max() >= field.q):
            raise DomainError("entries are not codes of the declared field")
        self.field = field
        self.a = a
        self._rref_cache = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int64))

    # -- basic structure -----------------------------------------------------

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def copy(self):
        return MatGF(self.field, self.a.copy())

    def __eq__(self, other):
        return (isinstance(other, MatGF) and self.field == other.field
                and self.a.shape == other.a.shape
                and np.array_equal(self.a, other.a))

    def __hash__(self):  # pragma: no cover - rarely useful
        return hash((self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"MatGF({self.rows}x{self.cols} over GF({self.field.q}))"

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check_field(other)
        return MatGF(self.field, self.field.add(self.a, other.a))

    def __sub__(self, other):
        self._check_field(other)
        return MatGF(self.field, self.field.sub(self.a, other.a))

    def __matmul__(self, other):
        self._check_field(other)
        return MatGF(self.field, self.field.matmul(self.a, other.a))

    def scale(self, c):
        carr = np.full_like(self.a, int(c))
        return MatGF(self.field, self.field.mul(carr, self.a))

    @property
    def T(self):
        return MatGF(self.field, self.a.T.copy())

    def stack(self, other):
        self._check_field(other)
        return MatGF(self.field, np.concatenate([self.a, other.a], axis=0))

    def hstack(self, other):
        self._check_field(other)
        return MatGF(self.field, np.concatenate([self.a, other.a], axis=1))

    # -- elimination ---------------------------------------------------------

    def rref(self):
        """Reduced row-echelon form.

        Returns ``(R, pivots, rank)`` where ``R`` is a new MatGF with the
        same row space, ``pivots`` is the tuple of pivot column indices and
        ``rank`` is the number of nonzero rows.
        """
        if self._rref_cache is None:
            f = self.field
            A = self.a.copy()
            rows, cols = A.shape
            pivots = []
            row = 0
            for col in range(cols):
                if row >= rows:
                    break
                piv = None
                for r in range(row, rows):
                    if A[r, col]:
                        piv = r
                        break
                if piv is None:
                    continue
                if piv != row:
                    A[[row, piv]] = A[[piv, row]]
                lead = int(A[row, col])
                if lead != 1:
                    A[row] = f.mul(np.full(cols, f.inv(lead), dtype=np.int64), A[row])
                nz = np.nonzero(A[:, col])[0]
                nz = nz[nz != row]
                if nz.size:
                    A[nz] = f.sub(A[nz], f.mul(A[nz, col][:, None], A[row][None, :]))
                pivots.append(col)
                row += 1
            self._rref_cache = (MatGF(f, A), tuple(pivots), row)
        R, piv, rank = self._rref_cache
        return R.copy(), piv, rank

    @property
    def rank(self):
        return self.rref()[2]

    def invert(self):
        """Matrix inverse; raises Singular unless square and full rank."""
        if self.rows != self.cols:
            raise Singular("only square matrices can be inverted")
        aug = self.hstack(MatGF.identity(self.field, self.rows))
        R, pivots, rank = aug.rref()
        if rank < self.rows or any(p >= self.rows for p in pivots[: self.rows]):
            raise Singular("matrix is singular")
        return MatGF(self.field, R.a[:, self.rows:])

    def null_space(self):
        """Full-rank matrix whose rows span {y : self @ y^t = 0}."""
        f = self.field
        R, pivots, rank = self.rref()
        cols = self.cols
        free = [c for c in range(cols) if c not in pivots]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for i, fc in enumerate(free):
            basis[i, fc] = 1
            for r, pc in enumerate(pivots):
                basis[i, pc] = f.neg(int(R.a[r, fc]))
        return MatGF(f, basis)

    # -- span queries --------------------------------------------------------

    def reduce_vector(self, v):
        """Residual of ``v`` after elimination against this matrix's rref rows."""
        f = self.field
        R, pivots, _ = self.rref()
        v = np.array(v, dtype=np.int64)
        for r, pc in enumerate(pivots):
            c = int(v[pc])
            if c:
                v = f.sub(v, f.mul(np.full(self.cols, c, dtype=np.int64), R.a[r]))
        return v

    def span_contains(self, v):
        """True iff ``v`` lies in the row space."""
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.cols:
            raise DomainError("vector length mismatch")
        return not self.reduce_vector(v).any()

    def reduce_rows(self, X):
        """Vectorized :meth:`reduce_vector` for a batch of row vectors."""
        f = self.field
        R, pivots, _ = self.rref()
        X = np.array(X, dtype=np.int64)
        for r, pc in enumerate(pivots):
            coef = X[:, pc]
            nz = np.nonzero(coef)[0]
            if nz.size:
                X[nz] = f.sub(X[nz], f.mul(coef[nz][:, None], R.a[r][None, :]))
        return X

    def span_contains_rows(self, X):
        """Boolean mask: which rows of ``X`` lie in the row space."""
        return ~self.reduce_rows(X).any(axis=1)

    def same_row_space(self, other):
        self._check_field(other)
        if self.cols != other.cols:
            return False
        r1 = self.rref()
        r2 = other.rref()
        if r1[2] != r2[2]:
            return False
        return np.array_equal(r1[0].a[: r1[2]], r2[0].a[: r2[2]])

    # -- serialization -------------------------------------------------------

    def to_text(self):
        lines = [f"{self.rows} {self.cols}"]
        for row in self.a:
            lines.append(" ".join(str(int(x)) for x in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, field, text):
        tokens = text.split()
        if len(tokens) < 2:
            raise DomainError("matrix text too short")
        rows, cols = int(tokens[0]), int(tokens[1])
        vals = [int(t) for t in tokens[2: 2 + rows * cols]]
        if len(vals) != rows * cols:
            raise DomainError("matrix text truncated")
        return cls(field, np.array(vals, dtype=np.int64).reshape(rows, cols))


def enumerate_span(field, G, chunk=1 << 14):
    """Yield chunks of all codewords in the row space of ``G`` (numpy array).

    Messages run over all q^rows mixed-radix tuples; each yielded chunk is a
    2-D array of codewords.  The zero word is included.
    """
    G = np.asarray(G, dtype=np.int64)
    rows = G.shape[0]
    q = field.q
    total = q ** rows
    pows = q ** np.arange(rows, dtype=np.int64)
    for lo in range(0, total, chunk):
        hi = min(total, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        msgs = (idx[:, None] // pows) % q
        yield field.matmul(msgs, G)
