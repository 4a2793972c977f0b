"""Named verification suites: each turns a SuiteConfig into a VerificationReport."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, replace

from . import lie_cochain as lc
from .cubic_algebra import (
    associativity_residuals,
    commutator,
    fi_residual_cubic,
    prop1_residuals,
    quantum_nambu,
    ternary_commutator,
)
from .cubic_core import hermitian_adjoint, trace_dir
from .cubic_super import (
    SuperCubic,
    SuperStructure,
    gfi_residual_cubic,
    graded_commutator,
    graded_triple_commutator,
    prop2_residuals,
    quantum_super_nambu,
    supertrace,
)
from .errors import ConfigError, InputError
from .formats import load_algebra, load_cochain, load_matrix
from .report import ResidualReport, ResidualTracker, VerificationReport
from .rng import Xoshiro256StarStar, check_mode, random_cubic, random_super
from .scalar import EXACT, FLOAT, resolve_tol

PATTERNS5 = list(itertools.product((0, 1), repeat=5))


@dataclass
class SuiteConfig:
    suite: str
    order: int | None = None
    r: int | None = None
    s: int | None = None
    m: int | None = None
    n2: int | None = None
    arity: int | None = None
    trials: int | None = None
    seed: int = 42
    mode: str = EXACT
    tol: float | None = None
    R: int = 3
    algebra: str | None = None
    cochain: str | None = None
    matrix: str | None = None
    exhaustive_limit: int = lc.EXHAUSTIVE_LIMIT

    @property
    def exact(self):
        return self.mode == EXACT

    def validate(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        check_mode(self.mode, self.R)
        if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if self.exact and self.tol not in (None, 0):
            raise ConfigError("exact mode compares with tolerance 0; drop --tol or use --mode float")
        if self.mode == FLOAT and self.tol is not None and not self.tol > 0:
            raise ConfigError(f"float mode needs a positive tolerance, got {self.tol}")
        for name in ("order", "r", "s", "m", "arity", "trials"):
            v = getattr(self, name)
            if v is not None and (not isinstance(v, int) or v < 1):
                raise ConfigError(f"{name} must be a positive integer, got {v!r}")
        if self.n2 is not None and (not isinstance(self.n2, int) or self.n2 < 0):
            raise ConfigError(f"n2 must be a nonnegative integer, got {self.n2!r}")
        if (self.cochain is None) != (self.algebra is None):
            raise ConfigError("--algebra and --cochain must be given together")
        return self

    @property
    def tolerance(self):
        return resolve_tol(self.exact, self.tol)

    def echo(self, **resolved):
        """Config as recorded in reports: every field plus resolved defaults."""
        out = {k: v for k, v in asdict(self).items() if v is not None}
        out["tol"] = self.tolerance
        out.update(resolved)
        return out


def run_suite(cfg):
    cfg.validate()
    return SUITES[cfg.suite](cfg)


def _rng(cfg):
    return Xoshiro256StarStar(cfg.seed)


def _cubic(rng, cfg, n):
    return random_cubic(rng, n, cfg.mode, cfg.R)


def _fixed_matrix(cfg):
    """The --matrix file as a plain cubic matrix (or None), with its order."""
    if cfg.matrix is None:
        return None, cfg.order
    x = load_matrix(cfg.matrix, exact=cfg.exact)
    mat = x.mat if isinstance(x, SuperCubic) else x
    if not mat.is_cubic:
        raise InputError(f"matrix of shape {list(mat.shape)} is not cubic")
    if cfg.order is not None and cfg.order != mat.n:
        raise ConfigError(f"--order {cfg.order} disagrees with the matrix order {mat.n}")
    return mat, mat.n


def _cubic_args(rng, cfg, n, fixed, count=5):
    """``count`` random arguments; a fixed matrix replaces the first (after it is drawn,
    so the stream does not depend on the file)."""
    args = [_cubic(rng, cfg, n) for _ in range(count)]
    if fixed is not None:
        args[0] = fixed
    return args


# ---------------------------------------------------------------- cubic suites


def cubic_fi(cfg):
    fixed, n = _fixed_matrix(cfg)
    n = n or 3
    trials = cfg.trials or 1000
    tol = cfg.tolerance
    rng = _rng(cfg)
    fi = ResidualTracker("filippov_jacobi", tol)
    eq = ResidualTracker("ternary_equals_nambu", tol)
    for _ in range(trials):
        args = _cubic_args(rng, cfg, n, fixed)
        rep = fi_residual_cubic(*args, tol=tol)
        fi.add(rep.max_abs, rep.witness)
        a, b, c = args[:3]
        eq.add(ternary_commutator(a, b, c) - quantum_nambu(a, b, c), (a, b, c))
    return VerificationReport("cubic-fi", cfg.echo(order=n, trials=trials), [fi.report(), eq.report()])


def cubic_prop1(cfg):
    fixed, n = _fixed_matrix(cfg)
    n = n or 3
    trials = cfg.trials or 1000
    tol = cfg.tolerance
    rng = _rng(cfg)
    trackers = None
    for _ in range(trials):
        args = _cubic_args(rng, cfg, n, fixed)
        reps = prop1_residuals(*args, tol=tol)
        trackers = trackers or [ResidualTracker(r.name, tol) for r in reps]
        for t, rep in zip(trackers, reps):
            t.add(rep.max_abs, rep.witness)
    return VerificationReport("cubic-prop1", cfg.echo(order=n, trials=trials), [t.report() for t in trackers])


def cubic_assoc(cfg):
    """lr-associativity must hold; a nonzero first-kind residual must be found.

    The counterexample check passes when some trial breaks first-kind
    associativity and stores that quintuple as its witness.
    """
    fixed, n = _fixed_matrix(cfg)
    n = n or 2
    trials = cfg.trials or 1000
    tol = cfg.tolerance
    rng = _rng(cfg)
    lr = ResidualTracker("lr_associative", tol)
    first = ResidualTracker("first_kind", tol)
    second = ResidualTracker("second_kind", tol, asserted=False)
    for _ in range(trials):
        args = _cubic_args(rng, cfg, n, fixed)
        r_lr, r_first, r_second = associativity_residuals(*args, tol=tol)
        lr.add(r_lr.max_abs, r_lr.witness)
        first.add(r_first.max_abs, r_first.witness)
        second.add(r_second.max_abs, r_second.witness)
    found = first.report()
    counter = ResidualReport(
        "first_kind_counterexample", found.max_abs, found.trials, found.witness,
        found.max_abs > tol, True, tol,
    )
    return VerificationReport(
        "cubic-assoc", cfg.echo(order=n, trials=trials), [lr.report(), counter, second.report()]
    )


# ---------------------------------------------------------------- super suites


def _structure(cfg):
    r = cfg.r or 2
    s = cfg.s or 1
    if cfg.order is not None and cfg.order != r + s:
        raise ConfigError(f"order {cfg.order} does not equal r + s = {r + s}")
    return SuperStructure(r, s)


def _super_args(rng, ss, cfg, pattern):
    return [random_super(rng, ss, p, cfg.mode, cfg.R) for p in pattern]


def _fixed_super(cfg):
    """(structure, fixed supermatrix or None).  A plain matrix file takes the
    structure from --r/--s."""
    if cfg.matrix is None:
        return _structure(cfg), None
    x = load_matrix(cfg.matrix, exact=cfg.exact)
    if not isinstance(x, SuperCubic):
        x = SuperCubic(x, _structure(replace(cfg, order=None)))
    if (cfg.r, cfg.s) != (None, None) and (cfg.r, cfg.s) != (x.ss.r, x.ss.s):
        raise ConfigError(f"--r/--s disagree with the file structure ({x.ss.r},{x.ss.s})")
    x.parity  # rejects an inhomogeneous file
    return x.ss, x


def _patterns(fixed):
    """Degree patterns to cycle through; a fixed first argument pins the first degree."""
    if fixed is None:
        return PATTERNS5
    return [p for p in PATTERNS5 if p[0] == fixed.parity]


def _super_trial(rng, ss, cfg, pattern, fixed):
    args = _super_args(rng, ss, cfg, pattern)
    if fixed is not None:
        args[0] = fixed
    return args


def super_gfi(cfg):
    """Trial t uses degree pattern t mod 32, so 32 k trials give k per pattern."""
    ss, fixed = _fixed_super(cfg)
    pats = _patterns(fixed)
    trials = cfg.trials or 640
    tol = cfg.tolerance
    rng = _rng(cfg)
    gfi = ResidualTracker("graded_filippov_jacobi", tol)
    eq = ResidualTracker("triple_commutator_equals_nambu", tol)
    for t in range(trials):
        args = _super_trial(rng, ss, cfg, pats[t % len(pats)], fixed)
        rep = gfi_residual_cubic(*args, tol=tol)
        gfi.add(rep.max_abs, rep.witness)
        x, y, z = args[:3]
        eq.add(graded_triple_commutator(x, y, z) - quantum_super_nambu(x, y, z), (x, y, z))
    config = cfg.echo(r=ss.r, s=ss.s, order=ss.n, trials=trials)
    return VerificationReport("super-gfi", config, [gfi.report(), eq.report()])


def super_prop2(cfg):
    ss, fixed = _fixed_super(cfg)
    pats = _patterns(fixed)
    trials = cfg.trials or 640
    tol = cfg.tolerance
    rng = _rng(cfg)
    trackers = None
    for t in range(trials):
        args = _super_trial(rng, ss, cfg, pats[t % len(pats)], fixed)
        reps = prop2_residuals(*args, tol=tol)
        trackers = trackers or [ResidualTracker(r.name, tol) for r in reps]
        for tr, rep in zip(trackers, reps):
            tr.add(rep.max_abs, rep.witness)
    config = cfg.echo(r=ss.r, s=ss.s, order=ss.n, trials=trials)
    return VerificationReport("super-prop2", config, [t.report() for t in trackers])


def trace_laws(cfg):
    fixed, n = _fixed_matrix(cfg)
    n = n or 3
    if cfg.r is None and cfg.s is None:
        if n < 2:
            raise ConfigError("trace-laws needs order >= 2 for the super checks")
        ss = SuperStructure(n - 1, 1)
    else:
        ss = _structure(replace(cfg, order=None))
        if ss.n != n:
            raise ConfigError(f"r + s = {ss.n} must equal the order {n}")
    trials = cfg.trials or 1000
    tol = cfg.tolerance
    rng = _rng(cfg)
    names = ("trace_commutator", "supertrace_graded_commutator", "supertrace_odd", "trace_adjoint")
    tr = {k: ResidualTracker(k, tol) for k in names}
    for t in range(trials):
        a, b = _cubic_args(rng, cfg, n, fixed, 2)
        tr["trace_commutator"].add(trace_dir(commutator(a, b)).norm(), (a, b))
        adj = trace_dir(hermitian_adjoint(a)) - trace_dir(a).conjugate()
        tr["trace_adjoint"].add(adj.norm(), (a,))
        x, y = _super_args(rng, ss, cfg, ((t >> 1) & 1, t & 1))
        tr["supertrace_graded_commutator"].add(supertrace(graded_commutator(x, y)).norm(), (x, y))
        (odd,) = _super_args(rng, ss, cfg, (1,))
        tr["supertrace_odd"].add(supertrace(odd).norm(), (odd,))
    config = cfg.echo(order=n, r=ss.r, s=ss.s, trials=trials)
    return VerificationReport("trace-laws", config, [tr[k].report() for k in names])


# ---------------------------------------------------------------- cochain suites


def _algebra_and_cochain(cfg, graded):
    if cfg.algebra is not None:
        g = load_algebra(cfg.algebra, exact=cfg.exact)
        return g, load_cochain(cfg.cochain, g, exact=cfg.exact)
    if graded:
        return lc.build_gl_super(cfg.m or 1, 1 if cfg.n2 is None else cfg.n2)
    return lc.build_gl(cfg.m or cfg.order or 2)


def _validation_checks(g):
    return lc.validate_algebra(g).checks


def cochain_fi(cfg):
    g, w = _algebra_and_cochain(cfg, graded=False)
    trials = cfg.trials or 2000
    rep = lc.theorem1_report(
        g, w, cfg.arity, trials=trials, seed=cfg.seed, mode=cfg.mode, R=cfg.R,
        tol=cfg.tol, exhaustive_limit=cfg.exhaustive_limit,
    )
    config = cfg.echo(**rep.config)
    return VerificationReport("cochain-fi", config, _validation_checks(g) + rep.checks)


def cochain_gfi(cfg):
    g, w = _algebra_and_cochain(cfg, graded=True)
    if cfg.arity not in (None, 3):
        raise ConfigError("the graded bracket is ternary; --arity must be 3")
    trials = cfg.trials or 20
    rep = lc.theorem2_report(
        g, w, trials=trials, seed=cfg.seed, mode=cfg.mode, R=cfg.R,
        tol=cfg.tol, exhaustive_limit=cfg.exhaustive_limit,
    )
    config = cfg.echo(**rep.config)
    return VerificationReport("cochain-gfi", config, _validation_checks(g) + rep.checks)


# ---------------------------------------------------------------- gl cross-check


def _sym_matrix(x, size):
    """Coefficients over matrix units as an explicit sympy matrix."""
    import sympy

    re, im = lc.element_to_matrix(x, size)
    return sympy.Matrix(size, size, lambda a, b: sympy.Integer(int(re[a, b])) + sympy.I * int(im[a, b]))


def _sym_residual(mat, x, size):
    """Max-norm of mat minus the matrix of x."""
    import sympy

    diff = (mat - _sym_matrix(x, size)).expand()
    return max((max(abs(sympy.re(v)), abs(sympy.im(v))) for v in diff), default=0)


def gl_bracket_oracle(a, b, c):
    """Tr A [B,C] + Tr B [C,A] + Tr C [A,B] with explicit matrices."""

    def com(x, y):
        return x * y - y * x

    return a.trace() * com(b, c) + b.trace() * com(c, a) + c.trace() * com(a, b)


def gl_super_bracket_oracle(a, b, c, pa, pb, pc, m):
    """The graded bracket with Str = (even block trace) - (odd block trace)."""

    def strace(x):
        return sum(x[i, i] for i in range(m)) - sum(x[i, i] for i in range(m, x.rows))

    def com(x, y, px, py):
        return x * y - (-1) ** (px * py) * y * x

    return (
        strace(a) * com(b, c, pb, pc)
        + (-1) ** (pa * (pb + pc)) * strace(b) * com(c, a, pc, pa)
        + (-1) ** (pc * (pa + pb)) * strace(c) * com(a, b, pa, pb)
    )


def gl_crosscheck(cfg):
    """Cochain-induced brackets on gl(m) and gl(m,n) against explicit matrices."""
    if not cfg.exact:
        raise ConfigError("gl-crosscheck compares exact values; use --mode exact")
    m = cfg.m or 2
    n = 1 if cfg.n2 is None else cfg.n2
    if n < 1:
        raise ConfigError("gl-crosscheck needs a nonempty odd block (--n >= 1)")
    trials = cfg.trials or 100
    rng = _rng(cfg)

    g, tr = lc.build_gl(m)
    plain = ResidualTracker("gl_bracket", 0)
    for _ in range(trials):
        xs = [lc.random_element(rng, g, EXACT, cfg.R) for _ in range(3)]
        got = lc.nary_bracket_from_cochain(g, tr, *xs)
        want = gl_bracket_oracle(*(_sym_matrix(x, m) for x in xs))
        plain.add(int(_sym_residual(want, got, m)), tuple(xs))

    gs, st = lc.build_gl_super(m, n)
    graded = ResidualTracker("gl_super_bracket", 0)
    size = m + n
    for t in range(trials):
        pattern = ((t >> 2) & 1, (t >> 1) & 1, t & 1)
        xs = [lc.random_element(rng, gs, EXACT, cfg.R, p) for p in pattern]
        got = lc.nary_bracket_from_cochain(gs, st, *xs)
        want = gl_super_bracket_oracle(*(_sym_matrix(x, size) for x in xs), *pattern, m)
        graded.add(int(_sym_residual(want, got, size)), tuple(xs))

    checks = _validation_checks(g) + [plain.report()] + [
        ResidualReport(f"super_{c.name}", c.max_abs, c.trials, c.witness, c.passed) for c in _validation_checks(gs)
    ] + [graded.report()]
    return VerificationReport("gl-crosscheck", cfg.echo(m=m, n2=n, trials=trials), checks)


SUITES = {
    "cubic-fi": cubic_fi,
    "cubic-prop1": cubic_prop1,
    "cubic-assoc": cubic_assoc,
    "super-gfi": super_gfi,
    "super-prop2": super_prop2,
    "trace-laws": trace_laws,
    "cochain-fi": cochain_fi,
    "cochain-gfi": cochain_gfi,
    "gl-crosscheck": gl_crosscheck,
}
