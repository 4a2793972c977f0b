"""Lie (super)algebras given by structure constants, their cochains, and the
n-ary brackets a cochain induces.

Basis indices are 1-based in the public API and in files, 0-based in the
dense tensors.  The bracket is ``[e_a, e_b] = sum_e c[a, b, e] e_e``.

Sign conventions:

* coboundary ``(dw)(x0..xm) = sum_{i<j} (-1)^(i+j+1) w([xi, xj], x0..^i..^j..xm)``,
  which makes ``dw(x, y) = w([x, y])`` for 1-cochains;
* wedge is the plain shuffle sum, so for degrees 1 and 2
  ``(a ^ b)(u, v, t) = a(u) b(v, t) + a(v) b(t, u) + a(t) b(u, v)``.

Both normalizations leave every vanishing condition used here unchanged.
"""

from __future__ import annotations

import itertools
import math
import string
from dataclasses import dataclass

import numpy as np

from .errors import ArityError, ConfigError, HomogeneityError, ShapeError, UnsupportedError
from .report import ResidualReport, ResidualTracker, VerificationReport
from .rng import Xoshiro256StarStar, check_mode, random_vector
from .scalar import EXACT, CArray, Scalar, ceinsum, resolve_tol, sign

EXHAUSTIVE_LIMIT = 10**6


def _carray(re, im):
    return CArray._from_parts(re, im)


def _moveaxis(t, src, dst):
    return _carray(np.moveaxis(t.re, src, dst), np.moveaxis(t.im, src, dst))


def _times(t, signs):
    """Entrywise product with an integer (+-1) array, broadcast to t's shape."""
    signs = np.broadcast_to(signs, t.shape).astype(np.int64)
    if t.exact:
        return _carray(t.re * signs, t.im * signs)
    return _carray(t.re * signs.astype(np.float64), t.im * signs.astype(np.float64))


def _scalar0(pair):
    re, im = pair
    return Scalar(re[()], im[()])


@dataclass(frozen=True, eq=False)
class Element:
    """Coefficient vector over the basis, optionally tagged with its parity."""

    coeffs: CArray
    parity: int | None = None

    @property
    def dim(self):
        return self.coeffs.shape[0]

    @property
    def exact(self):
        return self.coeffs.exact

    def _check(self, other):
        if not isinstance(other, Element) or other.dim != self.dim:
            raise ShapeError("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        par = self.parity if self.parity == other.parity else None
        return Element(self.coeffs + other.coeffs, par)

    def __sub__(self, other):
        self._check(other)
        par = self.parity if self.parity == other.parity else None
        return Element(self.coeffs - other.coeffs, par)

    def __neg__(self):
        return Element(-self.coeffs, self.parity)

    def scale(self, c):
        return Element(self.coeffs.scale(c), self.parity)

    def max_abs(self):
        return self.coeffs.max_abs()

    def is_zero(self):
        return self.coeffs.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"Element({self.coeffs.to_complex().tolist()}, parity={self.parity})"


@dataclass(frozen=True, eq=False)
class StructureAlgebra:
    parity: tuple
    c: CArray
    name: str = ""

    def __post_init__(self):
        d = len(self.parity)
        if self.c.shape != (d, d, d):
            raise ShapeError(f"structure constants of shape {self.c.shape} for dimension {d}")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError(f"parities must be 0 or 1, got {self.parity}")
        object.__setattr__(self, "parity", tuple(int(p) for p in self.parity))

    @property
    def dim(self):
        return len(self.parity)

    @property
    def graded(self):
        return any(self.parity)

    @property
    def exact(self):
        return self.c.exact

    @property
    def parity_array(self):
        return np.array(self.parity, dtype=np.int64)

    def as_float(self):
        return StructureAlgebra(self.parity, self.c.as_float(), self.name)

    def basis(self, a):
        """The basis element e_a (1-based)."""
        if not 1 <= a <= self.dim:
            raise ShapeError(f"basis index {a} outside 1..{self.dim}")
        re = np.zeros(self.dim, dtype=np.int64)
        re[a - 1] = 1
        return Element(_carray(re, np.zeros_like(re)), self.parity[a - 1])

    def element(self, coeffs, parity=None):
        coeffs = coeffs if isinstance(coeffs, CArray) else CArray(
            [Scalar.coerce(v).re for v in coeffs], [Scalar.coerce(v).im for v in coeffs]
        )
        if coeffs.shape != (self.dim,):
            raise ShapeError(f"need {self.dim} coefficients, got {coeffs.shape}")
        return Element(coeffs, parity)

    def parity_of(self, x):
        """Degree of a homogeneous element (the zero element counts as even)."""
        if x.dim != self.dim:
            raise ShapeError("element does not belong to this algebra")
        if x.parity is not None:
            return x.parity
        support = (x.coeffs.re != 0) | (x.coeffs.im != 0)
        pars = {self.parity[a] for a in np.flatnonzero(support)}
        if len(pars) > 1:
            raise HomogeneityError("element is not homogeneous")
        return pars.pop() if pars else 0


@dataclass(frozen=True, eq=False)
class Cochain:
    """Alternating multilinear form stored as a dense tensor of shape (d,)*degree."""

    tensor: CArray
    graded: bool = False

    @property
    def degree(self):
        return len(self.tensor.shape)

    @property
    def dim(self):
        return self.tensor.shape[0] if self.tensor.shape else 0

    @property
    def exact(self):
        return self.tensor.exact

    @classmethod
    def zero(cls, dim, degree, graded=False, exact=True):
        return cls(CArray.zeros((dim,) * degree, exact=exact), graded)

    @classmethod
    def linear(cls, g, coeffs):
        """1-cochain with w(e_a) = coeffs[a-1]."""
        vals = [Scalar.coerce(v) for v in coeffs]
        if len(vals) != g.dim:
            raise ShapeError(f"need {g.dim} values, got {len(vals)}")
        return cls(CArray([v.re for v in vals], [v.im for v in vals]), g.graded)

    @classmethod
    def from_values(cls, g, degree, values):
        """Build from values on strictly increasing 1-based index tuples."""
        if g.graded and degree >= 2:
            raise UnsupportedError("graded cochains of degree >= 2 are not built from tuples")
        shape = (g.dim,) * degree
        re = np.zeros(shape, dtype=object)
        im = np.zeros(shape, dtype=object)
        for args, val in dict(values).items():
            args = tuple(args)
            if len(args) != degree:
                raise ArityError(f"cochain of degree {degree} given arguments {args}")
            if any(not 1 <= a <= g.dim for a in args) or any(x >= y for x, y in zip(args, args[1:])):
                raise ValueError(f"arguments {args} must be strictly increasing in 1..{g.dim}")
            v = Scalar.coerce(val)
            for perm in itertools.permutations(range(degree)):
                idx = tuple(args[p] - 1 for p in perm)
                s = _perm_sign(perm)
                re[idx] = s * v.re
                im[idx] = s * v.im
        return cls(CArray(re, im), g.graded)

    def as_float(self):
        return Cochain(self.tensor.as_float(), self.graded)

    def __call__(self, *xs):
        if len(xs) != self.degree:
            raise ArityError(f"cochain of degree {self.degree} applied to {len(xs)} arguments")
        letters = string.ascii_letters[: self.degree]
        subs = letters + "".join("," + l for l in letters) + "->"
        return _scalar0(ceinsum(subs, self.tensor, *(x.coeffs for x in xs)))

    def on_basis(self, *idx):
        return self.tensor.entry(tuple(a - 1 for a in idx))

    def values(self):
        """Nonzero values on strictly increasing 1-based tuples."""
        out = {}
        for idx in itertools.combinations(range(self.dim), self.degree):
            v = self.tensor.entry(idx)
            if not v.is_zero():
                out[tuple(a + 1 for a in idx)] = v
        return out

    def max_abs(self):
        return self.tensor.max_abs()

    def is_zero(self):
        return self.tensor.is_zero()


def _perm_sign(perm):
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return sign(inv)


# ---------------------------------------------------------------- algebra


def bracket2(g, x, y):
    """[x, y] with coefficients sum_{a,b} x^a y^b c[a, b, e]."""
    if x.dim != g.dim or y.dim != g.dim:
        raise ShapeError("elements do not belong to this algebra")
    par = (x.parity + y.parity) % 2 if x.parity is not None and y.parity is not None else None
    return Element(_carray(*ceinsum("abe,a,b->e", g.c, x.coeffs, y.coeffs)), par)


def validate_algebra(g):
    """Check graded skew-symmetry, parity closure and the graded Jacobi
    identity on all basis pairs and triples.  Failures are reported."""
    p = g.parity_array
    c = g.c
    pp = (p[:, None] * p[None, :])[:, :, None]
    skew = c + _times(_moveaxis(c, (0, 1), (1, 0)), np.where(pp % 2, -1, 1))
    wrong = (p[:, None, None] + p[None, :, None] + p[None, None, :]) % 2 == 1
    closure = _carray(np.where(wrong, c.re, 0), np.where(wrong, c.im, 0))
    # [x,[y,z]] - [[x,y],z] - (-1)^{xy} [y,[x,z]]
    j1 = _carray(*ceinsum("yzf,xfe->xyze", c, c))
    j2 = _carray(*ceinsum("xyf,fze->xyze", c, c))
    j3 = _carray(*ceinsum("xzf,yfe->xyze", c, c))
    jac = j1 - j2 - _times(j3, np.where((p[:, None] * p[None, :]) % 2, -1, 1)[:, :, None, None])
    config = {"algebra": g.name, "dim": g.dim, "parity": list(g.parity)}
    checks = []
    for name, res in (("skew_symmetry", skew), ("parity_closure", closure), ("jacobi", jac)):
        m = res.max_abs()
        checks.append(ResidualReport(name, m, res.re.size, _argmax(res) if m > 0 else None, m == 0))
    return VerificationReport("validate-algebra", config, checks)


def _argmax(t):
    mag = np.maximum(np.abs(t.re), np.abs(t.im))
    idx = np.unravel_index(int(np.argmax(mag)), mag.shape)
    return [int(i) + 1 for i in idx]


# ---------------------------------------------------------------- cochains


def coboundary(g, w):
    """The coboundary of a cochain (ungraded for degree >= 2)."""
    m = w.degree
    if m < 1:
        raise ArityError("coboundary needs a cochain of degree >= 1")
    if g.graded and m >= 2:
        raise UnsupportedError("graded coboundary is only provided for 1-cochains")
    if w.dim != g.dim:
        raise ShapeError("cochain and algebra dimensions differ")
    rest = string.ascii_letters[: m - 1]
    # t[a, b, rest] = w([e_a, e_b], rest)
    t = _carray(*ceinsum(f"XYZ,Z{rest}->XY{rest}", g.c, w.tensor))
    total = None
    for i, j in itertools.combinations(range(m + 1), 2):
        term = _moveaxis(t, (0, 1), (i, j))
        term = term if (i + j + 1) % 2 == 0 else -term
        total = term if total is None else total + term
    return Cochain(total, g.graded)


def wedge(phi, psi):
    """Shuffle product of two ungraded cochains."""
    if phi.graded or psi.graded:
        raise UnsupportedError("wedge of graded cochains is not provided")
    if phi.dim != psi.dim:
        raise ShapeError("cochains on different algebras")
    p, q, d = phi.degree, psi.degree, phi.dim
    if p + q > d:
        return Cochain.zero(d, p + q, exact=phi.exact and psi.exact)
    letters = string.ascii_letters[: p + q]
    outer = _carray(*ceinsum(f"{letters[:p]},{letters[p:]}->{letters}", phi.tensor, psi.tensor))
    total = None
    for first in itertools.combinations(range(p + q), p):
        rest = [k for k in range(p + q) if k not in first]
        inversions = sum(f - k for k, f in enumerate(first))
        term = _moveaxis(outer, list(range(p + q)), list(first) + rest)
        term = term if inversions % 2 == 0 else -term
        total = term if total is None else total + term
    return Cochain(total)


# ---------------------------------------------------------------- brackets


def nary_bracket_from_cochain(g, w, *xs):
    """[x1..xn] = sum_{i<j} (-1)^(i+j+1) w(x1..^i..^j..xn) [xi, xj].

    On a graded algebra only n = 3 exists; it is the graded ternary bracket.
    """
    n = len(xs)
    if n < 3 or w.degree != n - 2:
        raise ArityError(f"{n}-ary bracket needs a cochain of degree {n - 2}, got {w.degree}")
    if g.graded:
        if n != 3:
            raise UnsupportedError("graded n-ary brackets are only provided for n = 3")
        return graded_ternary_bracket_from_cochain(g, w, *xs)
    pars = [x.parity for x in xs]
    par = sum(pars) % 2 if None not in pars else None
    total = Element(CArray.zeros((g.dim,), exact=g.exact and all(x.exact for x in xs)), par)
    for i, j in itertools.combinations(range(n), 2):
        others = [x for k, x in enumerate(xs) if k not in (i, j)]
        coef = w(*others)
        if coef.is_zero():
            continue
        # 1-based positions i+1, j+1 give (-1)^(i+j+3)
        term = bracket2(g, xs[i], xs[j]).scale(coef * sign(i + j + 1))
        total = Element((total + term).coeffs, par)
    return total


def graded_ternary_bracket_from_cochain(g, w, x, y, z):
    """w(x)[y,z] + (-1)^{x(y+z)} w(y)[z,x] + (-1)^{z(x+y)} w(z)[x,y]."""
    if w.degree != 1:
        raise ArityError("the graded ternary bracket needs a 1-cochain")
    a, b, c = (g.parity_of(v) for v in (x, y, z))
    x, y, z = (Element(v.coeffs, p) for v, p in ((x, a), (y, b), (z, c)))
    out = (
        bracket2(g, y, z).scale(w(x))
        + bracket2(g, z, x).scale(w(y) * sign(a * (b + c)))
        + bracket2(g, x, y).scale(w(z) * sign(c * (a + b)))
    )
    return Element(out.coeffs, (a + b + c) % 2)


def induced_bracket(g, w):
    """The bracket induced by ``w`` as a callable of ``w.degree + 2`` arguments."""

    def bracket(*xs):
        return nary_bracket_from_cochain(g, w, *xs)

    bracket.arity = w.degree + 2
    return bracket


def fi_residual(bracket, xs, ys, tol=None, name="filippov_jacobi"):
    """LHS - RHS of the n-ary Filippov-Jacobi identity for any bracket callable.

    ``xs`` holds n-1 and ``ys`` n values supporting +, - and max_abs().
    """
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys) - 1:
        raise ArityError(f"need n-1 = {len(ys) - 1} outer arguments, got {len(xs)}")
    arity = getattr(bracket, "arity", None)
    if arity is not None and arity != len(ys):
        raise ArityError(f"bracket of arity {arity} given {len(ys)} inner arguments")
    tol = resolve_tol(all(v.exact for v in xs + ys), tol)
    res = bracket(*xs, bracket(*ys))
    for k in range(len(ys)):
        args = ys[:k] + [bracket(*xs, ys[k])] + ys[k + 1 :]
        res = res - bracket(*args)
    return ResidualReport.of(name, res, tol, (tuple(xs), tuple(ys)))


def gfi_residual(bracket, xs, ys, parity, tol=None, name="graded_filippov_jacobi"):
    """Graded version of :func:`fi_residual`; ``parity(v)`` gives degrees.

    The k-th term carries (-1)^{alpha_k}, alpha_k = (sum x_i)(sum_{j<k} y_j).
    """
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys) - 1:
        raise ArityError(f"need n-1 = {len(ys) - 1} outer arguments, got {len(xs)}")
    tol = resolve_tol(all(v.exact for v in xs + ys), tol)
    px = sum(parity(v) for v in xs)
    py = [parity(v) for v in ys]
    res = bracket(*xs, bracket(*ys))
    for k in range(len(ys)):
        args = ys[:k] + [bracket(*xs, ys[k])] + ys[k + 1 :]
        term = bracket(*args)
        res = res - (term if sign(px * sum(py[:k])) > 0 else -term)
    return ResidualReport.of(name, res, tol, (tuple(xs), tuple(ys)))


# ---------------------------------------------------------------- exhaustive tensors


def bracket_tensor(g, w):
    """T[a1..an, e]: the induced bracket evaluated on every basis n-tuple."""
    n = w.degree + 2
    if g.graded:
        if n != 3:
            raise UnsupportedError("graded n-ary brackets are only provided for n = 3")
        p = g.parity_array
        px, py, pz = p[:, None, None, None], p[None, :, None, None], p[None, None, :, None]
        t1 = _carray(*ceinsum("x,yze->xyze", w.tensor, g.c))
        t2 = _carray(*ceinsum("y,zxe->xyze", w.tensor, g.c))
        t3 = _carray(*ceinsum("z,xye->xyze", w.tensor, g.c))
        return t1 + _times(t2, np.where((px * (py + pz)) % 2, -1, 1)) + _times(
            t3, np.where((pz * (px + py)) % 2, -1, 1)
        )
    wl = string.ascii_letters[: n - 2]
    outer = _carray(*ceinsum(f"{wl},XYZ->{wl}XYZ", w.tensor, g.c))
    total = None
    for i, j in itertools.combinations(range(n), 2):
        rest = [k for k in range(n) if k not in (i, j)]
        term = _moveaxis(outer, list(range(n + 1)), rest + [i, j, n])
        term = term if (i + j + 1) % 2 == 0 else -term
        total = term if total is None else total + term
    return total


def fi_residual_tensor(t, parity=None, tol=0, name="filippov_jacobi"):
    """(Graded) Filippov-Jacobi residual of a bracket tensor over all basis tuples.

    The witness is ``[x_1..x_{n-1}, y_1..y_n, e]`` (1-based) of the largest entry.
    """
    n = len(t.shape) - 1
    letters = iter(string.ascii_letters)
    xs = "".join(next(letters) for _ in range(n - 1))
    ys = "".join(next(letters) for _ in range(n))
    f, e = next(letters), next(letters)
    out = xs + ys + e
    res = _carray(*ceinsum(f"{ys}{f},{xs}{f}{e}->{out}", t, t))
    d = t.shape[0]
    if parity is not None:
        p = np.asarray(parity, dtype=np.int64)
        grid = np.ix_(*[p] * (2 * n - 1))
        px = sum(grid[: n - 1]) if n > 1 else 0
        ys_par = grid[n - 1 :]
    for k in range(n):
        inner = f"{xs}{ys[k]}{f}"
        outer = f"{ys[:k]}{f}{ys[k + 1:]}{e}"
        term = _carray(*ceinsum(f"{inner},{outer}->{out}", t, t))
        if parity is not None and k > 0:
            alpha = px * sum(ys_par[:k])
            term = _times(term, np.where(alpha % 2, -1, 1)[..., None])
        res = res - term
    m = res.max_abs()
    trials = d ** (2 * n - 1)
    return ResidualReport(name, m, trials, _argmax(res) if m > 0 else None, m <= tol, True, tol, res)


# ---------------------------------------------------------------- random elements


def random_element(rng, g, mode=EXACT, R=3, parity=None):
    support = None if parity is None else (g.parity_array == parity)
    return Element(random_vector(rng, g.dim, mode, R, support), parity)


def _prepare(g, w, mode):
    if mode == EXACT:
        if not (g.exact and w.exact):
            raise ConfigError("exact mode needs exact structure constants and cochain")
        return g, w
    return g.as_float(), w.as_float()


# ---------------------------------------------------------------- reports


def theorem1_report(g, w, n=None, trials=2000, seed=0, mode=EXACT, R=3, tol=None,
                    exhaustive_limit=EXHAUSTIVE_LIMIT):
    """Wedge condition and Filippov-Jacobi residual of the bracket induced by ``w``.

    The FI residual is asserted only when w ^ dw vanishes: the report checks
    sufficiency and merely measures the residual otherwise.
    """
    if g.graded:
        raise UnsupportedError("theorem1_report needs an ungraded algebra")
    n = w.degree + 2 if n is None else n
    if n != w.degree + 2 or n < 3:
        raise ArityError(f"{n}-ary bracket needs a cochain of degree {n - 2}, got {w.degree}")
    check_mode(mode, R)
    g, w = _prepare(g, w, mode)
    tol = resolve_tol(mode == EXACT, tol)
    d = g.dim

    ww = wedge(w, coboundary(g, w))
    wn = ww.max_abs()
    wedge_witness = _argmax(ww.tensor) if wn > 0 else None
    cond = wn <= tol
    wedge_check = ResidualReport("wedge_norm", wn, math.comb(d, 2 * n - 3), wedge_witness, cond, False, tol)

    exhaustive = d ** (2 * n - 1) <= exhaustive_limit
    if exhaustive:
        fi = fi_residual_tensor(bracket_tensor(g, w), tol=tol)
        fi.residual = None
    else:
        rng = Xoshiro256StarStar(seed)
        bracket = induced_bracket(g, w)
        tracker = ResidualTracker("filippov_jacobi", tol)
        for _ in range(trials):
            xs = [random_element(rng, g, mode, R) for _ in range(n - 1)]
            ys = [random_element(rng, g, mode, R) for _ in range(n)]
            rep = fi_residual(bracket, xs, ys, tol)
            tracker.add(rep.max_abs, rep.witness)
        fi = tracker.report()
    fi.asserted = cond
    config = {
        "algebra": g.name, "dim": d, "arity": n, "mode": mode, "seed": seed, "R": R,
        "tol": tol, "trials": trials, "exhaustive": exhaustive, "exhaustive_limit": exhaustive_limit,
    }
    return VerificationReport("cochain-fi", config, [wedge_check, fi])


def graded_condition_tensor(g, w):
    """w(x) w([y,z]) + (-1)^{x(y+z)} w(y) w([z,x]) + (-1)^{z(x+y)} w(z) w([x,y])
    on every basis triple."""
    p = g.parity_array
    dw = coboundary(g, w).tensor
    px, py, pz = p[:, None, None], p[None, :, None], p[None, None, :]
    t1 = _carray(*ceinsum("x,yz->xyz", w.tensor, dw))
    t2 = _carray(*ceinsum("y,zx->xyz", w.tensor, dw))
    t3 = _carray(*ceinsum("z,xy->xyz", w.tensor, dw))
    return t1 + _times(t2, np.where((px * (py + pz)) % 2, -1, 1)) + _times(
        t3, np.where((pz * (px + py)) % 2, -1, 1)
    )


def theorem2_report(g, w, trials=20, seed=0, mode=EXACT, R=3, tol=None,
                    exhaustive_limit=EXHAUSTIVE_LIMIT):
    """Conditions on a 1-cochain of a Lie superalgebra and the graded FI
    residual of the ternary bracket it induces.

    In random mode ``trials`` homogeneous tuples are drawn for each of the 32
    degree patterns.  The residual is asserted only when both conditions hold.
    """
    if w.degree != 1:
        raise ArityError(f"the graded ternary bracket needs a 1-cochain, got degree {w.degree}")
    check_mode(mode, R)
    g, w = _prepare(g, w, mode)
    tol = resolve_tol(mode == EXACT, tol)
    d = g.dim
    p = g.parity_array

    odd = p == 1
    odd_vals = _carray(np.where(odd, w.tensor.re, 0), np.where(odd, w.tensor.im, 0))
    m1 = odd_vals.max_abs()
    cond1 = ResidualReport("odd_vanishing", m1, int(odd.sum()), _argmax(odd_vals) if m1 > 0 else None,
                           m1 <= tol, False, tol)

    cond_t = graded_condition_tensor(g, w)
    m2 = cond_t.max_abs()
    cond2 = ResidualReport("wedge_condition", m2, d**3, _argmax(cond_t) if m2 > 0 else None,
                           m2 <= tol, False, tol)

    dw = coboundary(g, w).tensor
    mixed = (p[:, None] + p[None, :]) % 2 == 1
    mixed_vals = _carray(np.where(mixed, dw.re, 0), np.where(mixed, dw.im, 0))
    m3 = mixed_vals.max_abs()
    diag = ResidualReport("mixed_coboundary", m3, int(mixed.sum()), _argmax(mixed_vals) if m3 > 0 else None,
                          m3 <= tol, False, tol)

    holds = cond1.passed and cond2.passed
    exhaustive = d**5 <= exhaustive_limit
    if exhaustive:
        gfi = fi_residual_tensor(bracket_tensor(g, w), parity=p, tol=tol, name="graded_filippov_jacobi")
        gfi.residual = None
    else:
        rng = Xoshiro256StarStar(seed)
        tracker = ResidualTracker("graded_filippov_jacobi", tol)

        def bracket(x, y, z):
            return graded_ternary_bracket_from_cochain(g, w, x, y, z)

        for pattern in itertools.product((0, 1), repeat=5):
            for _ in range(trials):
                args = [random_element(rng, g, mode, R, par) for par in pattern]
                rep = gfi_residual(bracket, args[:2], args[2:], lambda v: g.parity_of(v), tol)
                tracker.add(rep.max_abs, rep.witness)
        gfi = tracker.report()
    gfi.asserted = holds
    config = {
        "algebra": g.name, "dim": d, "parity": list(g.parity), "mode": mode, "seed": seed, "R": R,
        "tol": tol, "trials": trials, "exhaustive": exhaustive, "exhaustive_limit": exhaustive_limit,
    }
    return VerificationReport("cochain-gfi", config, [cond1, cond2, diag, gfi])


# ---------------------------------------------------------------- builtin algebras


def _algebra(parity, entries, name):
    """Algebra from {(a, b): {e: value}} with 0-based indices."""
    d = len(parity)
    re = np.zeros((d, d, d), dtype=np.int64)
    for (a, b), row in entries.items():
        for e, v in row.items():
            re[a, b, e] += v
    return StructureAlgebra(tuple(parity), _carray(re, np.zeros_like(re)), name)


def build_gl(n):
    """gl(n) on matrix units E_ab (basis index (a-1)*n + b) with w = Tr."""
    return build_gl_super(n, 0)


def build_gl_super(m, n):
    """gl(m,n) on matrix units, E_ab of parity p(a)+p(b), with w = Str.

    ``n = 0`` gives the ungraded gl(m) with w = Tr.
    """
    if not (isinstance(m, int) and isinstance(n, int)) or m < 1 or n < 0:
        raise ShapeError(f"gl sizes must be positive, got ({m}, {n})")
    size = m + n
    row_par = [0 if a < m else 1 for a in range(size)]

    def idx(a, b):
        return a * size + b

    parity = [0] * (size * size)
    for a in range(size):
        for b in range(size):
            parity[idx(a, b)] = (row_par[a] + row_par[b]) % 2
    entries = {}
    for a, b, c, d in itertools.product(range(size), repeat=4):
        s = sign(parity[idx(a, b)] * parity[idx(c, d)])
        row = entries.setdefault((idx(a, b), idx(c, d)), {})
        # [E_ab, E_cd] = d_bc E_ad - (-1)^{|E_ab||E_cd|} d_da E_cb
        if b == c:
            row[idx(a, d)] = row.get(idx(a, d), 0) + 1
        if d == a:
            row[idx(c, b)] = row.get(idx(c, b), 0) - s
    name = f"gl({m})" if n == 0 else f"gl({m},{n})"
    g = _algebra(parity, entries, name)
    w = [0] * (size * size)
    for a in range(size):
        w[idx(a, a)] = 1 if a < m else -1
    return g, Cochain.linear(g, w)


def heisenberg():
    """h3: [e1, e2] = e3, all other brackets of basis elements zero."""
    return _algebra([0, 0, 0], {(0, 1): {2: 1}, (1, 0): {2: -1}}, "h3")


def sl2():
    """sl(2) on (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    entries = {
        (0, 1): {1: 2}, (1, 0): {1: -2},
        (0, 2): {2: -2}, (2, 0): {2: 2},
        (1, 2): {0: 1}, (2, 1): {0: -1},
    }
    return _algebra([0, 0, 0], entries, "sl2")


def abelian(d):
    return _algebra([0] * d, {}, f"abelian({d})")


# ---------------------------------------------------------------- matrix views


def element_to_matrix(x, size):
    """Coefficients over matrix units E_ab as a (size x size) complex array pair."""
    return x.coeffs.re.reshape(size, size), x.coeffs.im.reshape(size, size)
