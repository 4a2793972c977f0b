"""3-dimensional matrices: sections, rows, transversals, traces, adjoints.

All public indices are 1-based: ``A[i, j, k]`` with ``1 <= i <= m`` etc.
Directions I, J, K are the axes of the first, second and third index.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import ArityError, DomainError, LabelError, ShapeError
from .scalar import CArray, Scalar, _total, ceinsum


class Direction(str, Enum):
    I = "i"
    J = "j"
    K = "k"

    @classmethod
    def parse(cls, value):
        if isinstance(value, Direction):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown direction {value!r}; expected one of i, j, k") from None

    @property
    def axis(self):
        return "ijk".index(self.value)


class Matrix2(CArray):
    """Rectangular complex matrix, e.g. a section of a Matrix3."""

    __slots__ = ()

    def _validate(self):
        if self.re.ndim != 2 or min(self.shape) < 1:
            raise ShapeError(f"Matrix2 needs a nonempty 2-d shape, got {self.shape}")

    @property
    def rows(self):
        return self.shape[0]

    @property
    def cols(self):
        return self.shape[1]

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        a, b = idx
        _check_label(a, self.rows, "row")
        _check_label(b, self.cols, "column")
        return self.entry((a - 1, b - 1))

    def trace(self):
        if not self.is_square:
            raise DomainError(f"trace of a non-square {self.shape} matrix")
        return Scalar(_total(np.diagonal(self.re)), _total(np.diagonal(self.im)))


class Matrix3(CArray):
    """Dense m x n x p complex matrix."""

    __slots__ = ()

    def _validate(self):
        if self.re.ndim != 3 or min(self.shape) < 1:
            raise ShapeError(f"Matrix3 needs three positive extents, got {self.shape}")

    @property
    def m(self):
        return self.shape[0]

    @property
    def n(self):
        return self.shape[1]

    @property
    def p(self):
        return self.shape[2]

    @property
    def is_cubic(self):
        return self.m == self.n == self.p

    @property
    def order(self):
        if not self.is_cubic:
            raise DomainError(f"matrix of shape {self.shape} is not cubic")
        return self.n

    def __getitem__(self, idx):
        if len(idx) != 3:
            raise ArityError("Matrix3 index needs three components")
        for v, extent in zip(idx, self.shape):
            _check_label(v, extent, "index")
        i, j, k = idx
        return self.entry((i - 1, j - 1, k - 1))


def _check_label(v, extent, what="label"):
    if not isinstance(v, (int, np.integer)) or not 1 <= v <= extent:
        raise LabelError(f"{what} {v!r} outside 1..{extent}")


def require_cubic(*mats):
    """Return the common order of cubic matrices, raising on any mismatch."""
    orders = set()
    for a in mats:
        if not isinstance(a, Matrix3):
            raise TypeError(f"expected Matrix3, got {type(a).__name__}")
        if not a.is_cubic:
            raise ShapeError(f"matrix of shape {a.shape} is not cubic")
        orders.add(a.n)
    if len(orders) > 1:
        raise ShapeError(f"cubic matrices of different orders {sorted(orders)}")
    return orders.pop()


def _cubic_order(a):
    if not a.is_cubic:
        raise DomainError(f"matrix of shape {a.shape} is not cubic")
    return a.n


def make_matrix3(m, n, p, entries):
    """Build an m x n x p matrix from scalars listed in lexicographic (i,j,k) order."""
    for extent in (m, n, p):
        if not isinstance(extent, (int, np.integer)) or extent < 1:
            raise ShapeError(f"extents must be positive integers, got {(m, n, p)}")
    entries = list(entries)
    if len(entries) != m * n * p:
        raise ShapeError(f"{m}x{n}x{p} matrix needs {m * n * p} entries, got {len(entries)}")
    vals = [Scalar.coerce(e) for e in entries]
    re = np.array([v.re for v in vals], dtype=object).reshape(m, n, p)
    im = np.array([v.im for v in vals], dtype=object).reshape(m, n, p)
    return Matrix3(re, im)


def zeros3(m, n=None, p=None, exact=True):
    n = m if n is None else n
    p = m if p is None else p
    return Matrix3.zeros((m, n, p), exact=exact)


def identity_cubic(n, exact=True):
    """Order-n cubic matrix with I[i, j, i] = 1 and zeros elsewhere."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ShapeError(f"order must be a positive integer, got {n!r}")
    re = np.zeros((n, n, n), dtype=np.int64 if exact else np.float64)
    for i in range(n):
        re[i, :, i] = 1
    return Matrix3._from_parts(re, np.zeros_like(re))


def section(a, o, label):
    """The section of orientation ``o`` with fixed index ``label``.

    Orientation I gives the n x p matrix (A[f, j, k]), J the m x p matrix
    (A[i, r, k]), K the m x n matrix (A[i, j, g]).
    """
    o = Direction.parse(o)
    _check_label(label, a.shape[o.axis])
    sl = [slice(None)] * 3
    sl[o.axis] = label - 1
    sl = tuple(sl)
    return Matrix2._from_parts(a.re[sl], a.im[sl])


def row(a, d, f1, f2):
    """The row of direction ``d`` through the two fixed indices (f1, f2).

    The fixed indices are the remaining two in their natural order, e.g. for
    direction J they are (i, k).
    """
    d = Direction.parse(d)
    others = [ax for ax in range(3) if ax != d.axis]
    _check_label(f1, a.shape[others[0]], "fixed index")
    _check_label(f2, a.shape[others[1]], "fixed index")
    sl = [slice(None)] * 3
    sl[others[0]] = f1 - 1
    sl[others[1]] = f2 - 1
    sl = tuple(sl)
    return [Scalar(re, im) for re, im in zip(a.re[sl].tolist(), a.im[sl].tolist())]


def _check_cells(a, cells, n):
    cells = [tuple(c) for c in cells]
    if len(cells) != n:
        raise ArityError(f"need {n} cells for an order-{n} matrix, got {len(cells)}")
    for c in cells:
        if len(c) != 3:
            raise ArityError(f"cell {c!r} is not an index triple")
        for v in c:
            _check_label(v, n, "cell index")
    if len(set(cells)) != len(cells):
        raise ValueError("cell set contains duplicates")
    return cells


def is_transversal(a, cells):
    """True iff no two of the n cells share a section of any orientation."""
    n = _cubic_order(a)
    cells = _check_cells(a, cells, n)
    return all(len({c[ax] for c in cells}) == n for ax in range(3))


def is_transversal_section(a, d, rows):
    """True iff no section passes through two of the given rows of direction ``d``.

    Each row is named by its two fixed indices, as in :func:`row`.
    """
    d = Direction.parse(d)
    n = _cubic_order(a)
    rows = [tuple(r) for r in rows]
    if len(rows) != n:
        raise ArityError(f"need {n} rows for an order-{n} matrix, got {len(rows)}")
    for r in rows:
        if len(r) != 2:
            raise ArityError(f"row {r!r} must be a pair of fixed indices")
        for v in r:
            _check_label(v, n, "fixed index")
    return len({r[0] for r in rows}) == n and len({r[1] for r in rows}) == n


def diagonals(n):
    """The main diagonal followed by the three single-index-reversal diagonals."""
    ts = range(1, n + 1)
    return [
        [(t, t, t) for t in ts],
        [(n + 1 - t, t, t) for t in ts],
        [(t, n + 1 - t, t) for t in ts],
        [(t, t, n + 1 - t) for t in ts],
    ]


# (t, l) entry of the main diagonal section, as an index triple
_DIAG = {
    Direction.I: lambda t, l: (t, l, l),
    Direction.J: lambda t, l: (t, l, t),
    Direction.K: lambda t, l: (l, l, t),
}


def main_diagonal_section(a, d):
    """n x n matrix of the main diagonal section of direction ``d``.

    Entry (t, l) is A[t, l, t] for J, A[t, l, l] for I and A[l, l, t] for K.
    """
    d = Direction.parse(d)
    n = _cubic_order(a)
    idx = np.arange(n)
    t, l = np.meshgrid(idx, idx, indexing="ij")
    sel = _DIAG[d](t, l)
    return Matrix2._from_parts(a.re[sel], a.im[sel])


_TRACE = {
    Direction.I: "lkk->",
    Direction.J: "ili->",
    Direction.K: "jjl->",
}


def trace_dir(a, d=Direction.J):
    """Trace relative to direction ``d``: the sum of its main diagonal section."""
    d = Direction.parse(d)
    _cubic_order(a)
    re, im = ceinsum(_TRACE[d], a)
    return Scalar(re[()], im[()])


# axis permutation realising each adjoint's index swap
_ADJOINT_AXES = {
    Direction.I: (0, 2, 1),
    Direction.J: (2, 1, 0),
    Direction.K: (1, 0, 2),
}


def hermitian_adjoint(a, d=Direction.J):
    """Conjugate transpose fixing direction ``d``; for J, B[i,j,k] = conj(A[k,j,i])."""
    d = Direction.parse(d)
    _cubic_order(a)
    axes = _ADJOINT_AXES[d]
    return Matrix3._from_parts(a.re.transpose(axes), (-a.im).transpose(axes))
