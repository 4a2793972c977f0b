"""Command-line front end.

Exit codes: 0 when every asserted check passes, 1 when one fails, 2 for a
configuration or input problem.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lie_cochain as lc
from .cubic_core import Direction, section, trace_dir
from .cubic_super import SuperCubic, SuperStructure, supertrace
from .errors import ConfigError, Nambu3Error
from .formats import algebra_to_json, cochain_to_json, load_matrix, matrix_to_json, super_to_json, to_jsonable
from .report import canonical_json, emit_report
from .rng import Xoshiro256StarStar, gen_random_cubic, random_super
from .scalar import EXACT, FLOAT
from .suites import SUITES, SuiteConfig, run_suite

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so usage errors map to code 2."""

    def error(self, message):
        raise ConfigError(message)


def _u64(text):
    try:
        value = int(text, 0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits: {text}")
    return value


def build_parser():
    p = _Parser(prog="nambu3", description="Cubic matrix and n-ary bracket identity verifier.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--order", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--n", dest="n2", type=int)
    v.add_argument("--arity", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=_u64, default=42)
    v.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    v.add_argument("--tol", type=float)
    v.add_argument("--range", dest="R", type=int, default=3)
    v.add_argument("--algebra")
    v.add_argument("--cochain")
    v.add_argument("--matrix", help="pin the first argument of every trial (cubic and super suites)")
    v.add_argument("--exhaustive-limit", type=int, default=lc.EXHAUSTIVE_LIMIT)
    v.add_argument("--report", choices=("json", "text"), default="json")
    v.add_argument("--out")

    g = sub.add_parser("gen", help="write generated inputs as JSON")
    g.add_argument("what", choices=("random-cubic", "random-super", "gl", "gl-super"))
    g.add_argument("--order", type=int, default=3)
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--s", type=int, default=1)
    g.add_argument("--parity", type=int, choices=(0, 1), default=0)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--n", dest="n2", type=int, default=1)
    g.add_argument("--seed", type=_u64, default=42)
    g.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    g.add_argument("--range", dest="R", type=int, default=3)
    g.add_argument("--out", help="algebra or matrix output (default stdout)")
    g.add_argument("--cochain-out", help="also write the trace/supertrace cochain here")

    s = sub.add_parser("show", help="print a derived quantity of a matrix file")
    s.add_argument("what", choices=("trace", "supertrace", "section"))
    s.add_argument("--matrix", required=True)
    s.add_argument("--dir", default="j")
    s.add_argument("--label", type=int, default=1)
    s.add_argument("--r", type=int)
    s.add_argument("--s", type=int)
    s.add_argument("--mode", choices=(EXACT, FLOAT), default=EXACT)
    return p


def _write(data, out):
    text = canonical_json(data) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args):
    cfg = SuiteConfig(
        suite=args.suite, order=args.order, r=args.r, s=args.s, m=args.m, n2=args.n2,
        arity=args.arity, trials=args.trials, seed=args.seed, mode=args.mode, tol=args.tol,
        R=args.R, algebra=args.algebra, cochain=args.cochain, matrix=args.matrix,
        exhaustive_limit=args.exhaustive_limit,
    )
    rep = run_suite(cfg)
    emit_report(rep, args.report, args.out)
    return OK if rep.passed else FAILED


def cmd_gen(args):
    if args.what == "random-cubic":
        _write(matrix_to_json(gen_random_cubic(args.order, args.seed, args.mode, args.R)), args.out)
    elif args.what == "random-super":
        ss = SuperStructure(args.r, args.s)
        x = random_super(Xoshiro256StarStar(args.seed), ss, args.parity, args.mode, args.R)
        _write(super_to_json(x), args.out)
    else:
        g, w = lc.build_gl(args.m) if args.what == "gl" else lc.build_gl_super(args.m, args.n2)
        _write(algebra_to_json(g), args.out)
        if args.cochain_out:
            _write(cochain_to_json(w), args.cochain_out)
    return OK


def cmd_show(args):
    exact = args.mode == EXACT
    x = load_matrix(args.matrix, exact)
    if args.what == "supertrace":
        if not isinstance(x, SuperCubic):
            if args.r is None or args.s is None:
                raise ConfigError("a plain matrix file needs --r and --s for a supertrace")
            x = SuperCubic(x, SuperStructure(args.r, args.s))
        value = supertrace(x)
    else:
        mat = x.mat if isinstance(x, SuperCubic) else x
        d = Direction.parse(args.dir)
        value = trace_dir(mat, d) if args.what == "trace" else section(mat, d, args.label)
    sys.stdout.write(json.dumps(to_jsonable(value)) + "\n")
    return OK


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return {"verify": cmd_verify, "gen": cmd_gen, "show": cmd_show}[args.command](args)
    except (Nambu3Error, ValueError, TypeError, IndexError) as exc:
        sys.stderr.write(f"nambu3: error: {exc}\n")
        return BAD_INPUT
    except OSError as exc:
        sys.stderr.write(f"nambu3: error: {exc}\n")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
