"""Seeded, portable random inputs: splitmix64 seeding of xoshiro256**.

Stream consumption is part of the contract so fixtures replay in any
implementation:

* a 64-bit seed is expanded into the four state words by four successive
  splitmix64 outputs;
* an exact integer in [lo, hi] takes 64-bit outputs by rejection (values at or
  above the largest multiple of the span are discarded) and reduces modulo
  the span;
* a float in [-1, 1) is ``-1 + 2 * (x >> 11) * 2**-53``;
* matrices are filled in lexicographic (i, j, k) order, real part then
  imaginary part of each entry; element vectors in basis order likewise.
"""

from __future__ import annotations

import numpy as np

from .cubic_core import Matrix3
from .errors import ConfigError
from .scalar import EXACT, FLOAT, CArray

MASK64 = (1 << 64) - 1


def splitmix64(state):
    """One splitmix64 step; returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    def __init__(self, seed=0, state=None):
        if state is not None:
            self.s = [int(v) & MASK64 for v in state]
            if len(self.s) != 4 or not any(self.s):
                raise ConfigError("xoshiro256** needs four words, not all zero")
            return
        if not isinstance(seed, int) or not 0 <= seed <= MASK64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        sm = seed
        self.s = []
        for _ in range(4):
            sm, out = splitmix64(sm)
            self.s.append(out)

    def next_u64(self):
        s0, s1, s2, s3 = self.s
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return result

    def integer(self, lo, hi):
        """Uniform integer in [lo, hi]."""
        span = hi - lo + 1
        limit = ((1 << 64) // span) * span
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span

    def unit(self):
        """Uniform float in [-1, 1)."""
        return -1.0 + 2.0 * (self.next_u64() >> 11) * 2.0**-53

    def complex_parts(self, count, mode=EXACT, R=3):
        """``count`` complex values as (re, im) arrays, real part drawn first."""
        if mode == EXACT:
            flat = [self.integer(-R, R) for _ in range(2 * count)]
            dtype = np.int64
        else:
            flat = [self.unit() for _ in range(2 * count)]
            dtype = np.float64
        pairs = np.array(flat, dtype=dtype).reshape(count, 2)
        return pairs[:, 0].copy(), pairs[:, 1].copy()


def check_mode(mode, R=None):
    if mode not in (EXACT, FLOAT):
        raise ConfigError(f"mode must be 'exact' or 'float', got {mode!r}")
    if mode == EXACT and (not isinstance(R, int) or isinstance(R, bool) or R < 1):
        raise ConfigError(f"exact mode needs an integer range R >= 1, got {R!r}")


def random_cubic(rng, n, mode=EXACT, R=3, shape=None):
    shape = (n, n, n) if shape is None else tuple(shape)
    if min(shape) < 1:
        raise ConfigError(f"extents must be positive, got {shape}")
    re, im = rng.complex_parts(int(np.prod(shape)), mode, R)
    return Matrix3._from_parts(re.reshape(shape), im.reshape(shape))


def gen_random_cubic(n, seed, mode=EXACT, R=3):
    """A single random cubic matrix from a freshly seeded stream."""
    check_mode(mode, R)
    if not isinstance(n, int) or n < 1:
        raise ConfigError(f"order must be a positive integer, got {n!r}")
    return random_cubic(Xoshiro256StarStar(seed), n, mode, R)


def random_super(rng, ss, parity, mode=EXACT, R=3):
    """Random homogeneous cubic supermatrix: a full draw with the cells of the
    opposite parity zeroed."""
    from .cubic_super import SuperCubic

    full = random_cubic(rng, ss.n, mode, R)
    keep = ss.odd_cells if parity else ~ss.odd_cells
    zero = np.zeros((), dtype=full.re.dtype)
    mat = Matrix3._from_parts(np.where(keep, full.re, zero), np.where(keep, full.im, zero))
    return SuperCubic(mat, ss)


def random_vector(rng, d, mode=EXACT, R=3, support=None):
    """Complex coefficient vector; entries outside ``support`` are drawn then zeroed."""
    re, im = rng.complex_parts(d, mode, R)
    if support is not None:
        re[~support] = 0
        im[~support] = 0
    return CArray._from_parts(re, im)
