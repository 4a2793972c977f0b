"""Residual reports, verification reports and their serialization."""

from __future__ import annotations

import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class ResidualReport:
    """Outcome of one named identity check.

    ``max_abs`` is the max-norm of the residual over all entries and trials
    (the larger of |re| and |im| per entry).  Checks with ``asserted=False``
    are measurements: they carry a pass flag but do not affect the overall
    verdict of a VerificationReport.
    """

    name: str
    max_abs: object = 0
    trials: int = 1
    witness: object = None
    passed: bool = True
    asserted: bool = True
    tol: object = 0
    residual: object = field(default=None, repr=False, compare=False)

    @classmethod
    def of(cls, name, residual, tol, witness=None):
        m = residual.max_abs()
        return cls(name, m, 1, witness if m > 0 else None, m <= tol, True, tol, residual)


class ResidualTracker:
    """Running max of residual norms with the first input tuple attaining it."""

    def __init__(self, name, tol, asserted=True):
        self.name = name
        self.tol = tol
        self.asserted = asserted
        self.max_abs = 0
        self.witness = None
        self.trials = 0

    def add(self, value, witness=None):
        """Record one trial; ``value`` is a residual object or a norm."""
        m = value if isinstance(value, (int, float, Fraction)) else value.max_abs()
        self.trials += 1
        if m > self.max_abs:
            self.max_abs = m
            self.witness = witness
        return m

    def report(self):
        return ResidualReport(
            self.name, self.max_abs, self.trials, self.witness,
            self.max_abs <= self.tol, self.asserted, self.tol,
        )


@dataclass
class VerificationReport:
    suite: str
    config: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.asserted)

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        from .formats import to_jsonable

        return {
            "suite": self.suite,
            "config": to_jsonable(self.config),
            "checks": [
                {
                    "name": c.name,
                    "trials": c.trials,
                    "max_abs": to_jsonable(c.max_abs),
                    "tol": to_jsonable(c.tol),
                    "witness": to_jsonable(c.witness),
                    "pass": bool(c.passed),
                    "asserted": bool(c.asserted),
                }
                for c in self.checks
            ],
            "pass": self.passed,
        }


def _encode(obj, out):
    if obj is None or isinstance(obj, bool):
        out.write(json.dumps(obj))
    elif isinstance(obj, int):
        out.write(str(obj))
    elif isinstance(obj, float):
        if math.isfinite(obj):
            text = format(obj, ".17g")
            if not any(c in text for c in ".en"):
                text += ".0"
            out.write(text)
        else:
            out.write(json.dumps(repr(obj)))
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        out.write("{")
        for n, key in enumerate(sorted(obj)):
            if n:
                out.write(",")
            out.write(json.dumps(str(key)))
            out.write(":")
            _encode(obj[key], out)
        out.write("}")
    elif isinstance(obj, (list, tuple)):
        out.write("[")
        for n, item in enumerate(obj):
            if n:
                out.write(",")
            _encode(item, out)
        out.write("]")
    else:
        raise TypeError(f"cannot encode {type(obj).__name__}")


def canonical_json(obj):
    """Sorted keys, no whitespace, floats with 17 significant digits."""
    buf = io.StringIO()
    _encode(obj, buf)
    return buf.getvalue()


def format_text(rep):
    lines = [f"suite: {rep.suite}"]
    width = max((len(c.name) for c in rep.checks), default=4)
    for c in rep.checks:
        status = "PASS" if c.passed else "FAIL"
        if not c.asserted:
            status += " (info)"
        lines.append(f"  {c.name:<{width}}  {status:<11} max_abs={c.max_abs}  trials={c.trials}")
    lines.append(f"overall: {'PASS' if rep.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def emit_report(rep, fmt="json", out=None):
    """Write the report as canonical JSON or a text table to ``out`` (path or stdout)."""
    text = canonical_json(rep.to_dict()) + "\n" if fmt == "json" else format_text(rep)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
