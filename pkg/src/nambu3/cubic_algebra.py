"""Direction products of cubic matrices, the trace triple product and the
quantum Nambu bracket, with residual checkers for their identities.

Everything above :func:`mul_dir` works relative to direction J.
"""

from __future__ import annotations

from .cubic_core import Direction, Matrix3, hermitian_adjoint, require_cubic, trace_dir
from .errors import ShapeError
from .report import ResidualReport
from .scalar import ceinsum, resolve_tol

# C = A *_d B, written as an einsum; each direction multiplies its sections
_PRODUCT = {
    Direction.I: "ijt,itk->ijk",
    Direction.J: "ijt,tjk->ijk",
    Direction.K: "itk,tjk->ijk",
}


def _product_shape(a, b, d):
    (m, n, p), (p2, n2, q) = a.shape, b.shape
    if d is Direction.J:
        if n != n2 or p != p2:
            raise ShapeError(f"direction-j product needs m x n x p and p x n x q, got {a.shape}, {b.shape}")
    elif d is Direction.I:
        # sections (j,k): (n x p) . (p x q), shared first extent
        if a.shape[0] != b.shape[0] or a.shape[2] != b.shape[1]:
            raise ShapeError(f"direction-i product needs m x n x p and m x p x q, got {a.shape}, {b.shape}")
    else:
        # sections (i,j): (m x n) . (n x q), shared third extent
        if a.shape[2] != b.shape[2] or a.shape[1] != b.shape[0]:
            raise ShapeError(f"direction-k product needs m x n x p and n x q x p, got {a.shape}, {b.shape}")


def mul_dir(a, b, d=Direction.J):
    """Section-wise product: every section of orientation ``d`` of the result
    is the matrix product of the corresponding sections of ``a`` and ``b``."""
    d = Direction.parse(d)
    _product_shape(a, b, d)
    return Matrix3._from_parts(*ceinsum(_PRODUCT[d], a, b))


def commutator(a, b):
    require_cubic(a, b)
    return mul_dir(a, b) - mul_dir(b, a)


def triple_product(a, b, c):
    """(ABC) = Tr_j(B) * (A *_j C)."""
    require_cubic(a, b, c)
    return mul_dir(a, c).scale(trace_dir(b))


def associativity_residuals(a, b, c, d, f, tol=None):
    """Residuals of lr, first-kind and second-kind associativity of (ABC)."""
    require_cubic(a, b, c, d, f)
    tol = resolve_tol(all(x.exact for x in (a, b, c, d, f)), tol)
    tp = triple_product
    left = tp(tp(a, b, c), d, f)
    args = (a, b, c, d, f)
    return (
        ResidualReport.of("lr", left - tp(a, b, tp(c, d, f)), tol, args),
        ResidualReport.of("first_kind", left - tp(a, tp(b, c, d), f), tol, args),
        ResidualReport.of("second_kind", left - tp(a, tp(d, c, b), f), tol, args),
    )


def prop1_residuals(a, b, c, d, f, tol=None):
    """Residuals of the four identities obeyed by the trace triple product:
    lr-associativity, (ABC)^+ = (C^+ B^+ A^+), (A(BCD)F) = (A(DCB)F) and
    ((ABC)DF) = ((ADC)BF)."""
    require_cubic(a, b, c, d, f)
    tol = resolve_tol(all(x.exact for x in (a, b, c, d, f)), tol)
    tp, dag = triple_product, hermitian_adjoint
    args = (a, b, c, d, f)
    return (
        ResidualReport.of("lr_associative", tp(tp(a, b, c), d, f) - tp(a, b, tp(c, d, f)), tol, args),
        ResidualReport.of("adjoint", dag(tp(a, b, c)) - tp(dag(c), dag(b), dag(a)), tol, args),
        ResidualReport.of("middle_reversal", tp(a, tp(b, c, d), f) - tp(a, tp(d, c, b), f), tol, args),
        ResidualReport.of("middle_exchange", tp(tp(a, b, c), d, f) - tp(tp(a, d, c), b, f), tol, args),
    )


def ternary_commutator(a, b, c):
    """(ABC) + (BCA) + (CAB) - (CBA) - (BAC) - (ACB)."""
    tp = triple_product
    return tp(a, b, c) + tp(b, c, a) + tp(c, a, b) - tp(c, b, a) - tp(b, a, c) - tp(a, c, b)


def quantum_nambu(a, b, c):
    """Tr_j(B) [A,C] + Tr_j(A) [C,B] + Tr_j(C) [B,A]."""
    require_cubic(a, b, c)
    return (
        commutator(a, c).scale(trace_dir(b))
        + commutator(c, b).scale(trace_dir(a))
        + commutator(b, a).scale(trace_dir(c))
    )


def fi_residual_cubic(a, b, c, d, e, tol=None, bracket=quantum_nambu):
    """Residual of the ternary Filippov-Jacobi identity
    [A,B,[C,D,E]] - [[A,B,C],D,E] - [C,[A,B,D],E] - [C,D,[A,B,E]]."""
    require_cubic(a, b, c, d, e)
    tol = resolve_tol(all(x.exact for x in (a, b, c, d, e)), tol)
    br = bracket
    res = (
        br(a, b, br(c, d, e))
        - br(br(a, b, c), d, e)
        - br(c, br(a, b, d), e)
        - br(c, d, br(a, b, e))
    )
    return ResidualReport.of("filippov_jacobi", res, tol, (a, b, c, d, e))
