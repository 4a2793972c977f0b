"""Cubic (r,s)-supermatrices relative to direction J.

The first r sections of orientations I and K are even, the remaining s odd;
cell (i, j, k) has parity p(i) + p(k).  Each J-section is then an ordinary
square (r,s)-supermatrix, and the supertrace sums their supertraces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .cubic_algebra import mul_dir
from .cubic_core import Matrix3, section
from .errors import HomogeneityError, ShapeError
from .report import ResidualReport
from .scalar import CArray, Scalar, _nonzero, ceinsum, resolve_tol, sign


class Degree(Enum):
    EVEN = "even"
    ODD = "odd"
    INHOMOGENEOUS = "inhomogeneous"
    ZERO = "zero"


@dataclass(frozen=True)
class SuperStructure:
    r: int
    s: int

    def __post_init__(self):
        if not (isinstance(self.r, int) and isinstance(self.s, int)) or self.r < 1 or self.s < 1:
            raise ShapeError(f"super structure needs r >= 1 and s >= 1, got ({self.r}, {self.s})")

    @property
    def n(self):
        return self.r + self.s

    def parity(self, t):
        """Parity of the 1-based section label t."""
        return 0 if t <= self.r else 1

    @cached_property
    def odd_cells(self):
        """Boolean n x n x n mask of cells with parity 1."""
        p = (np.arange(self.n) >= self.r).astype(int)
        mask = (p[:, None] + p[None, :]) % 2 == 1
        return np.broadcast_to(mask[:, None, :], (self.n,) * 3)

    @cached_property
    def diagonal_signs(self):
        """+1 for i <= r, -1 otherwise, as an int64 vector."""
        return np.where(np.arange(self.n) < self.r, 1, -1).astype(np.int64)


@dataclass(frozen=True, eq=False)
class SuperCubic:
    mat: Matrix3
    ss: SuperStructure

    def __post_init__(self):
        if not self.mat.is_cubic or self.mat.n != self.ss.n:
            raise ShapeError(f"matrix of shape {self.mat.shape} does not fit a ({self.ss.r},{self.ss.s}) structure")

    @cached_property
    def degree(self):
        odd = self.ss.odd_cells
        has_odd = _nonzero(self.mat.re[odd]) or _nonzero(self.mat.im[odd])
        has_even = _nonzero(self.mat.re[~odd]) or _nonzero(self.mat.im[~odd])
        if has_odd and has_even:
            return Degree.INHOMOGENEOUS
        if has_odd:
            return Degree.ODD
        return Degree.EVEN if has_even else Degree.ZERO

    @property
    def parity(self):
        """0 or 1; the zero matrix counts as even."""
        d = self.degree
        if d is Degree.INHOMOGENEOUS:
            raise HomogeneityError("inhomogeneous cubic supermatrix has no degree")
        return 1 if d is Degree.ODD else 0

    @property
    def exact(self):
        return self.mat.exact

    def _like(self, mat):
        return SuperCubic(mat, self.ss)

    def __add__(self, other):
        _same_structure(self, other)
        return self._like(self.mat + other.mat)

    def __sub__(self, other):
        _same_structure(self, other)
        return self._like(self.mat - other.mat)

    def __neg__(self):
        return self._like(-self.mat)

    def scale(self, c):
        return self._like(self.mat.scale(c))

    def max_abs(self):
        return self.mat.max_abs()

    def is_zero(self):
        return self.mat.is_zero()

    def __eq__(self, other):
        if not isinstance(other, SuperCubic):
            return NotImplemented
        return self.ss == other.ss and self.mat == other.mat

    __hash__ = None


def _same_structure(*xs):
    ss = xs[0].ss
    for x in xs[1:]:
        if x.ss != ss:
            raise ShapeError(f"super structures differ: {ss} vs {x.ss}")
    return ss


def _homogeneous(*xs):
    _same_structure(*xs)
    return [x.parity for x in xs]


def attach_super(a, r, s):
    return SuperCubic(a, SuperStructure(r, s))


def cell_parity(ss, i, j, k):
    return (ss.parity(i) + ss.parity(k)) % 2


def blocks(x):
    """(B00, B01, B10, B11) with shapes r x n x r, r x n x s, s x n x r, s x n x s."""
    r = x.ss.r
    re, im = x.mat.re, x.mat.im
    out = []
    for rows in (slice(None, r), slice(r, None)):
        for cols in (slice(None, r), slice(r, None)):
            sl = (rows, slice(None), cols)
            out.append(Matrix3._from_parts(re[sl], im[sl]))
    return tuple(out)


def assemble(b00, b01, b10, b11, ss):
    """Inverse of :func:`blocks`."""
    re = np.concatenate(
        [np.concatenate([b00.re, b01.re], axis=2), np.concatenate([b10.re, b11.re], axis=2)], axis=0
    )
    im = np.concatenate(
        [np.concatenate([b00.im, b01.im], axis=2), np.concatenate([b10.im, b11.im], axis=2)], axis=0
    )
    return SuperCubic(Matrix3(re, im), ss)


def degree(x):
    return x.degree


def _masked(x, keep_odd):
    mask = x.ss.odd_cells if keep_odd else ~x.ss.odd_cells
    zero = np.zeros((), dtype=x.mat.re.dtype)
    return x._like(Matrix3._from_parts(np.where(mask, x.mat.re, zero), np.where(mask, x.mat.im, zero)))


def even_part(x):
    return _masked(x, keep_odd=False)


def odd_part(x):
    return _masked(x, keep_odd=True)


def supertrace(x):
    """Sum over J-sections of their supertraces: sum_l sum_i sign(i) A[i, l, i]."""
    sgn = x.ss.diagonal_signs
    weights = CArray._from_parts(sgn, np.zeros_like(sgn))
    re, im = ceinsum("ili,i->", x.mat, weights)
    return Scalar(re[()], im[()])


def section_supertrace(m2, r):
    """Supertrace of a square (r,s)-supermatrix: even diagonal minus odd diagonal."""
    diag = [m2[t, t] for t in range(1, m2.rows + 1)]
    return sum(diag[:r], Scalar(0)) - sum(diag[r:], Scalar(0))


def graded_commutator(x, y):
    """[X,Y] = X *_j Y - (-1)^{xy} Y *_j X."""
    a, b = _homogeneous(x, y)
    return x._like(mul_dir(x.mat, y.mat) - mul_dir(y.mat, x.mat).scale(sign(a * b)))


def super_triple_product(x, y, z):
    """(XYZ) = Str_j(X) * (Y *_j Z)."""
    _homogeneous(x, y, z)
    return x._like(mul_dir(y.mat, z.mat).scale(supertrace(x)))


def prop2_residuals(a, b, c, d, f, tol=None):
    """Residuals of (AB(CDF)) = (A(CBD)F), ((ABC)DF) = (-1)^{bc}((ACB)DF)
    and (AB(CDF)) = (CB(ADF))."""
    pa, pb, pc, pd, pf = _homogeneous(a, b, c, d, f)
    tol = resolve_tol(all(x.exact for x in (a, b, c, d, f)), tol)
    tp = super_triple_product
    args = (a, b, c, d, f)
    outer = tp(a, b, tp(c, d, f))
    return (
        ResidualReport.of("inner_shift", outer - tp(a, tp(c, b, d), f), tol, args),
        ResidualReport.of("graded_swap", tp(tp(a, b, c), d, f) - tp(tp(a, c, b), d, f).scale(sign(pb * pc)), tol, args),
        ResidualReport.of("outer_exchange", outer - tp(c, b, tp(a, d, f)), tol, args),
    )


def graded_triple_commutator(x, y, z):
    """Six-term signed sum of super triple products."""
    a, b, c = _homogeneous(x, y, z)
    tp = super_triple_product
    return (
        tp(x, y, z)
        + tp(y, z, x).scale(sign(a * (b + c)))
        + tp(z, x, y).scale(sign(c * (a + b)))
        - tp(y, x, z).scale(sign(a * b))
        - tp(x, z, y).scale(sign(b * c))
        - tp(z, y, x).scale(sign(a * b + b * c + a * c))
    )


def quantum_super_nambu(x, y, z):
    """Str(X)[Y,Z] + (-1)^{x(y+z)} Str(Y)[Z,X] + (-1)^{z(x+y)} Str(Z)[X,Y]."""
    a, b, c = _homogeneous(x, y, z)
    gc = graded_commutator
    return (
        gc(y, z).scale(supertrace(x))
        + gc(z, x).scale(supertrace(y) * sign(a * (b + c)))
        + gc(x, y).scale(supertrace(z) * sign(c * (a + b)))
    )


def gfi_residual_cubic(x, y, z, v, w, tol=None, bracket=quantum_super_nambu):
    """Residual of the graded ternary Filippov-Jacobi identity."""
    px, py, pz, pv, pw = _homogeneous(x, y, z, v, w)
    tol = resolve_tol(all(t.exact for t in (x, y, z, v, w)), tol)
    br = bracket
    xy = px + py
    res = (
        br(x, y, br(z, v, w))
        - br(br(x, y, z), v, w)
        - br(z, br(x, y, v), w).scale(sign(xy * pz))
        - br(z, v, br(x, y, w)).scale(sign(xy * (pz + pv)))
    )
    return ResidualReport.of("graded_filippov_jacobi", res, tol, (x, y, z, v, w))


def section_supertraces(x):
    """Independent per-section supertraces, for cross-checking :func:`supertrace`."""
    return [section_supertrace(section(x.mat, "j", l), x.ss.r) for l in range(1, x.ss.n + 1)]
