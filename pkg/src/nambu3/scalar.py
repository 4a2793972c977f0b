"""Complex scalars and dense complex arrays in an exact or a float regime.

Real and imaginary parts live in separate numpy arrays.  Exact arrays hold
integers: int64 while every intermediate provably stays below 2**62, object
arrays of Python ints (or Fractions) otherwise.  Float arrays are float64.
Mixing the two regimes promotes to float.
"""

from __future__ import annotations

import itertools
import numbers
from fractions import Fraction

import numpy as np

from .errors import ShapeError

EXACT = "exact"
FLOAT = "float"
DEFAULT_TOL = 1e-9

_LIMIT = 1 << 62


def resolve_tol(exact, tol=None):
    """Tolerance actually used by a checker: 0 in exact mode."""
    if exact:
        return 0
    return DEFAULT_TOL if tol is None else tol


def sign(e):
    """(-1)**e for an integer exponent (a sum of Z2 representatives)."""
    return -1 if e % 2 else 1


def _py(x):
    """Convert numpy scalars to plain Python numbers."""
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _number(x):
    x = _py(x)
    if isinstance(x, bool) or not isinstance(x, (int, float, Fraction)):
        raise TypeError(f"not a real scalar component: {x!r}")
    return x


def _maxabs(a):
    if a.size == 0:
        return 0
    return _py(np.abs(a).max())


def _normalize(a):
    """Coerce user data into one of the three storage dtypes."""
    a = np.array(a, copy=True)
    kind = a.dtype.kind
    if kind == "f":
        return a.astype(np.float64)
    if kind in "iu":
        if a.size and _maxabs(a.astype(object)) >= _LIMIT:
            return a.astype(object)
        return a.astype(np.int64)
    if kind == "O":
        flat = [_number(v) for v in a.flat]
        if any(isinstance(v, float) for v in flat):
            return np.array(flat, dtype=np.float64).reshape(a.shape)
        out = np.empty(a.shape, dtype=object)
        out.flat[:] = flat if flat else []
        if all(isinstance(v, int) for v in flat) and (not flat or max(abs(v) for v in flat) < _LIMIT):
            return out.astype(np.int64)
        return out
    raise TypeError(f"unsupported array dtype {a.dtype}")


def _promote(arrays):
    kinds = {a.dtype.kind for a in arrays}
    if "f" in kinds:
        return [a.astype(np.float64) for a in arrays]
    if "O" in kinds:
        return [a.astype(object) for a in arrays]
    return list(arrays)


def _add(a, b, sgn=1):
    if a.dtype.kind == b.dtype.kind == "i" and _maxabs(a) + _maxabs(b) >= _LIMIT:
        a, b = a.astype(object), b.astype(object)
    else:
        a, b = _promote([a, b])
    return a + b if sgn > 0 else a - b


def _smul(a, c):
    """Multiply an array by a real scalar."""
    c = _py(c)
    if isinstance(c, float) or a.dtype.kind == "f":
        return a.astype(np.float64) * float(c)
    if c == 0:
        return np.zeros(a.shape, dtype=np.int64)
    if a.dtype.kind == "i" and isinstance(c, int) and abs(c) * _maxabs(a) < _LIMIT:
        return a * c
    return a.astype(object) * c


def _total(a):
    if a.dtype.kind == "f":
        return float(a.sum())
    if a.dtype.kind == "i" and a.size * _maxabs(a) < _LIMIT:
        return int(a.sum())
    return _py(a.astype(object).sum()) if a.size else 0


def _summed_size(subscripts, arrays):
    inputs, output = subscripts.split("->")
    size = 1
    seen = set()
    for spec, arr in zip(inputs.split(","), arrays):
        for letter, extent in zip(spec, arr.shape):
            if letter not in output and letter not in seen:
                seen.add(letter)
                size *= extent
    return size


def _einsum(subscripts, arrays, bound=None):
    """Einsum in the right regime; ``bound`` caps |result| when all inputs are int64."""
    kinds = {a.dtype.kind for a in arrays}
    if "f" in kinds:
        return np.einsum(subscripts, *[a.astype(np.float64) for a in arrays])
    if kinds == {"i"}:
        if bound is None:
            bound = _summed_size(subscripts, arrays)
            for a in arrays:
                bound *= _maxabs(a)
        if bound < _LIMIT:
            return np.einsum(subscripts, *arrays)
    out = np.einsum(subscripts, *[a.astype(object) for a in arrays])
    return np.asarray(out, dtype=object)


def _nonzero(a):
    return bool(np.any(a != 0))


def ceinsum(subscripts, *operands):
    """Complex einsum over CArray operands; returns the (re, im) pair.

    Each operand splits into real and imaginary parts; a product that picks
    q imaginary factors carries i**q.  Operands with vanishing imaginary
    part contribute only their real part.
    """
    choices = []
    for op in operands:
        opts = [(0, op.re)]
        if _nonzero(op.im):
            opts.append((1, op.im))
        choices.append(opts)
    all_int = all(a.dtype.kind == "i" for opts in choices for _, a in opts)
    if all_int:
        size = _summed_size(subscripts, [op.re for op in operands])
        bounds = [{q: _maxabs(a) for q, a in opts} for opts in choices]
    acc = {0: None, 1: None}
    # running bound on |acc| while everything stays int64
    acc_bound = {0: 0, 1: 0}
    for combo in itertools.product(*choices):
        q = sum(c[0] for c in combo) % 4
        part, sgn = q % 2, (1 if q < 2 else -1)
        bound = None
        if all_int:
            bound = size
            for b, c in zip(bounds, combo):
                bound *= b[c[0]]
        term = _einsum(subscripts, [c[1] for c in combo], bound)
        if acc[part] is None:
            acc[part] = term if sgn > 0 else -term
        elif bound is not None and acc_bound[part] + bound < _LIMIT and acc[part].dtype.kind == term.dtype.kind == "i":
            acc[part] = acc[part] + term if sgn > 0 else acc[part] - term
        else:
            acc[part] = _add(acc[part], term, sgn)
        acc_bound[part] += bound if bound is not None else _LIMIT
    re, im = acc[0], acc[1]
    if im is None:
        im = np.zeros(re.shape, dtype=np.float64 if re.dtype.kind == "f" else np.int64)
    return re, im


class Scalar:
    """A complex number with exact (int/Fraction) or float components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _number(re)
        self.im = _number(im)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            return cls(x.real, x.imag)
        if isinstance(x, (list, tuple)) and len(x) == 2:
            return cls(*x)
        if isinstance(x, (numbers.Real, np.number)):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {x!r} as a scalar")

    @property
    def exact(self):
        return not (isinstance(self.re, float) or isinstance(self.im, float))

    def __add__(self, other):
        o = Scalar.coerce(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = Scalar.coerce(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, CArray):
            return NotImplemented
        o = Scalar.coerce(other)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def norm(self):
        """Max-norm of the (re, im) pair; exact for exact scalars."""
        return max(abs(self.re), abs(self.im))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im})"


class CArray:
    """Immutable dense complex array; base of Matrix2, Matrix3 and vectors."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        re = _normalize(re)
        im = np.zeros(re.shape, dtype=np.int64) if im is None else _normalize(im)
        if re.shape != im.shape:
            raise ShapeError(f"real part {re.shape} and imaginary part {im.shape} differ")
        if (re.dtype.kind == "f") != (im.dtype.kind == "f"):
            re, im = re.astype(np.float64), im.astype(np.float64)
        self._set(re, im)

    def _set(self, re, im):
        re.flags.writeable = False
        im.flags.writeable = False
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        self._validate()

    def _validate(self):
        pass

    @classmethod
    def _from_parts(cls, re, im):
        obj = cls.__new__(cls)
        if (re.dtype.kind == "f") != (im.dtype.kind == "f"):
            re, im = re.astype(np.float64), im.astype(np.float64)
        obj._set(re, im)
        return obj

    @classmethod
    def zeros(cls, shape, exact=True):
        dtype = np.int64 if exact else np.float64
        return cls._from_parts(np.zeros(shape, dtype=dtype), np.zeros(shape, dtype=dtype))

    @classmethod
    def from_complex(cls, z, exact=False):
        z = np.asarray(z, dtype=np.complex128)
        if not exact:
            return cls._from_parts(z.real.copy(), z.imag.copy())
        re, im = np.rint(z.real), np.rint(z.imag)
        if not (np.array_equal(re, z.real) and np.array_equal(im, z.imag)):
            raise ValueError("exact construction requires integral entries")
        return cls._from_parts(re.astype(np.int64), im.astype(np.int64))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def shape(self):
        return self.re.shape

    @property
    def exact(self):
        return self.re.dtype.kind != "f"

    def entry(self, idx):
        """Scalar at a 0-based numpy index."""
        return Scalar(_py(self.re[idx]), _py(self.im[idx]))

    def _same_shape(self, other):
        if not isinstance(other, CArray):
            raise TypeError(f"expected an array, got {type(other).__name__}")
        if other.shape != self.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return type(self)._from_parts(_add(self.re, other.re), _add(self.im, other.im))

    def __sub__(self, other):
        self._same_shape(other)
        return type(self)._from_parts(_add(self.re, other.re, -1), _add(self.im, other.im, -1))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Scalar.coerce(c)
        re = _add(_smul(self.re, c.re), _smul(self.im, c.im), -1)
        im = _add(_smul(self.im, c.re), _smul(self.re, c.im))
        return type(self)._from_parts(re, im)

    def __mul__(self, c):
        if isinstance(c, CArray):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def conj(self):
        return type(self)._from_parts(self.re, _smul(self.im, -1))

    def total(self):
        """Sum of all entries."""
        return Scalar(_total(self.re), _total(self.im))

    def max_abs(self):
        """Largest |re| or |im| over all entries (0 for an empty array)."""
        return max(_maxabs(self.re), _maxabs(self.im))

    def is_zero(self):
        return not (_nonzero(self.re) or _nonzero(self.im))

    def as_float(self):
        return type(self)._from_parts(self.re.astype(np.float64), self.im.astype(np.float64))

    def to_complex(self):
        return self.re.astype(np.float64) + 1j * self.im.astype(np.float64)

    def __eq__(self, other):
        if not isinstance(other, CArray):
            return NotImplemented
        return (
            self.shape == other.shape
            and bool(np.all(self.re == other.re))
            and bool(np.all(self.im == other.im))
        )

    __hash__ = None

    def __repr__(self):
        return f"{type(self).__name__}(shape={self.shape}, exact={self.exact})"
