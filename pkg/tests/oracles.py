"""Brute-force reference implementations used to cross-check the library.

Everything here works on nested Python lists indexed [i-1][j-1][k-1] and
loops over index formulas directly; no library arithmetic is reused.
Entries are Python complex numbers holding small Gaussian integers, which
double precision represents exactly (all magnitudes in the tests stay far
below 2**53).
"""

import itertools
import random


def to_lists(a):
    """Nested lists of complex numbers from any object with .re/.im arrays."""
    re, im = a.re.tolist(), a.im.tolist()

    def walk(r, i):
        if isinstance(r, list):
            return [walk(x, y) for x, y in zip(r, i)]
        return complex(r, i)

    return walk(re, im)


def random_lists(rnd, shape, R=3, gaussian=True):
    m, n, p = shape
    return [
        [[complex(rnd.randint(-R, R), rnd.randint(-R, R) if gaussian else 0) for _ in range(p)] for _ in range(n)]
        for _ in range(m)
    ]


def from_formula(n, f, shape=None):
    m, nn, p = shape or (n, n, n)
    return [[[complex(f(i, j, k)) for k in range(1, p + 1)] for j in range(1, nn + 1)] for i in range(1, m + 1)]


def shape(a):
    return len(a), len(a[0]), len(a[0][0])


def zeros(m, n, p):
    return [[[0j] * p for _ in range(n)] for _ in range(m)]


def add(a, b, cb=1):
    m, n, p = shape(a)
    return [[[a[i][j][k] + cb * b[i][j][k] for k in range(p)] for j in range(n)] for i in range(m)]


def scale(c, a):
    m, n, p = shape(a)
    return [[[c * a[i][j][k] for k in range(p)] for j in range(n)] for i in range(m)]


def max_abs(a):
    if isinstance(a, list):
        return max((max_abs(x) for x in a), default=0)
    return max(abs(a.real), abs(a.imag))


# ---------------------------------------------------------------- geometry


def section(a, o, label):
    m, n, p = shape(a)
    f = label - 1
    if o == "i":
        return [[a[f][j][k] for k in range(p)] for j in range(n)]
    if o == "j":
        return [[a[i][f][k] for k in range(p)] for i in range(m)]
    return [[a[i][j][f] for j in range(n)] for i in range(m)]


def trace_dir(a, d="j"):
    n = len(a)
    total = 0j
    for x in range(n):
        for y in range(n):
            if d == "j":
                total += a[x][y][x]
            elif d == "i":
                total += a[y][x][x]
            else:
                total += a[x][x][y]
    return total


def adjoint_j(a):
    n = len(a)
    return [[[a[k][j][i].conjugate() for k in range(n)] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------- products


def mul_j(a, b):
    """C[i][j][k] = sum_t A[i][j][t] B[t][j][k]."""
    m, n, p = shape(a)
    q = len(b[0][0])
    return [[[sum(a[i][j][t] * b[t][j][k] for t in range(p)) for k in range(q)] for j in range(n)] for i in range(m)]


def commutator(a, b):
    return add(mul_j(a, b), mul_j(b, a), -1)


def triple(a, b, c):
    return scale(trace_dir(b), mul_j(a, c))


def nambu(a, b, c):
    out = scale(trace_dir(b), commutator(a, c))
    out = add(out, scale(trace_dir(a), commutator(c, b)))
    return add(out, scale(trace_dir(c), commutator(b, a)))


def fi(br, a, b, c, d, e):
    lhs = br(a, b, br(c, d, e))
    rhs = add(add(br(br(a, b, c), d, e), br(c, br(a, b, d), e)), br(c, d, br(a, b, e)))
    return add(lhs, rhs, -1)


# ---------------------------------------------------------------- super


def cell_parity(i, k, r):
    """0-based i, k."""
    return (int(i >= r) + int(k >= r)) % 2


def supertrace(a, r):
    n = len(a)
    return sum((1 if i < r else -1) * a[i][l][i] for l in range(n) for i in range(n))


def homogeneous(rnd, n, r, parity, R=3):
    a = random_lists(rnd, (n, n, n), R)
    for i, j, k in itertools.product(range(n), repeat=3):
        if cell_parity(i, k, r) != parity:
            a[i][j][k] = 0j
    return a


def gcomm(a, b, pa, pb):
    return add(mul_j(a, b), mul_j(b, a), -((-1) ** (pa * pb)))


def super_triple(a, b, c, r):
    return scale(supertrace(a, r), mul_j(b, c))


def super_nambu(x, y, z, px, py, pz, r):
    out = scale(supertrace(x, r), gcomm(y, z, py, pz))
    out = add(out, scale((-1) ** (px * (py + pz)) * supertrace(y, r), gcomm(z, x, pz, px)))
    return add(out, scale((-1) ** (pz * (px + py)) * supertrace(z, r), gcomm(x, y, px, py)))


# ---------------------------------------------------------------- lie side


def gl_basis_matrix(a, b, size):
    return [[1 if (x, y) == (a, b) else 0 for y in range(size)] for x in range(size)]


def gl_bracket_constants(size, m=None):
    """{((a,b),(c,d)): {(e,f): coeff}} by multiplying explicit unit matrices.

    With ``m`` given, rows/columns >= m are odd and the bracket is graded.
    """
    par = (lambda a, b: 0) if m is None else (lambda a, b: (int(a >= m) + int(b >= m)) % 2)

    def matmul(x, y):
        return [[sum(x[i][t] * y[t][j] for t in range(size)) for j in range(size)] for i in range(size)]

    out = {}
    units = [(a, b) for a in range(size) for b in range(size)]
    for u, v in itertools.product(units, repeat=2):
        x, y = gl_basis_matrix(*u, size), gl_basis_matrix(*v, size)
        s = (-1) ** (par(*u) * par(*v))
        xy, yx = matmul(x, y), matmul(y, x)
        res = {(i, j): xy[i][j] - s * yx[i][j] for i in range(size) for j in range(size)}
        out[(u, v)] = {k: c for k, c in res.items() if c}
    return out


def rand_seeded(seed):
    return random.Random(seed)


def to_matrix(a):
    """Inverse of :func:`to_lists` for integral entries (input plumbing only)."""
    from nambu3.cubic_core import Matrix3

    re = [[[int(z.real) for z in line] for line in plane] for plane in a]
    im = [[[int(z.imag) for z in line] for line in plane] for plane in a]
    return Matrix3(re, im)
