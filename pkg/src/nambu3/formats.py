"""JSON file formats for cubic matrices, supermatrices, algebras and cochains.

Complex numbers are ``[re, im]`` pairs; basis indices are 1-based.  Loaders
raise :class:`InputError` on anything malformed.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .cubic_core import Matrix3
from .cubic_super import SuperCubic, SuperStructure
from .errors import InputError, Nambu3Error
from .lie_cochain import Cochain, Element, StructureAlgebra
from .scalar import CArray, Scalar, _py


def _num(x):
    x = _py(x)
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    return x


def to_jsonable(obj):
    """Plain JSON data for report fields, witnesses included."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, float, Fraction, np.number)):
        return _num(obj)
    if isinstance(obj, Scalar):
        return [_num(obj.re), _num(obj.im)]
    if isinstance(obj, Matrix3):
        return matrix_to_json(obj)
    if isinstance(obj, SuperCubic):
        return super_to_json(obj)
    if isinstance(obj, Element):
        return {"coeffs": _pairs(obj.coeffs), "parity": obj.parity}
    if isinstance(obj, CArray):
        return _pairs(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _pairs(a):
    """Nested lists of [re, im] pairs mirroring the array shape."""
    re = np.asarray(a.re, dtype=object)
    im = np.asarray(a.im, dtype=object)

    def build(idx, depth):
        if depth == re.ndim:
            return [_num(re[idx]), _num(im[idx])]
        return [build(idx + (t,), depth + 1) for t in range(re.shape[depth])]

    return build((), 0)


# ---------------------------------------------------------------- matrices


def matrix_to_json(a):
    return {"kind": "cubic", "shape": list(a.shape), "entries": _pairs(a)}


def super_to_json(x):
    out = matrix_to_json(x.mat)
    out["super"] = {"r": x.ss.r, "s": x.ss.s}
    return out


def _component(v, exact, where):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"{where}: expected a number, got {v!r}")
    if exact and not isinstance(v, int):
        raise InputError(f"{where}: exact mode requires integer components, got {v!r}")
    return v


def _pair(v, exact, where):
    if not isinstance(v, list) or len(v) != 2:
        raise InputError(f"{where}: expected [re, im], got {v!r}")
    return _component(v[0], exact, where), _component(v[1], exact, where)


def _extent(v, where):
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise InputError(f"{where}: expected a positive integer, got {v!r}")
    return v


def matrix_from_json(data, exact=True):
    if not isinstance(data, dict) or data.get("kind") != "cubic":
        raise InputError('matrix file must be an object with "kind": "cubic"')
    shape = data.get("shape")
    if not isinstance(shape, list) or len(shape) != 3:
        raise InputError('"shape" must be [m, n, p]')
    m, n, p = (_extent(v, "shape") for v in shape)
    entries = data.get("entries")
    re, im = [], []
    for i, plane in enumerate(_nested(entries, m, "entries")):
        for j, line in enumerate(_nested(plane, n, f"entries[{i}]")):
            for k, cell in enumerate(_nested(line, p, f"entries[{i}][{j}]")):
                a, b = _pair(cell, exact, f"entries[{i}][{j}][{k}]")
                re.append(a)
                im.append(b)
    dtype = np.int64 if exact else np.float64
    if exact and max((abs(v) for v in re + im), default=0) >= 1 << 62:
        dtype = object
    return Matrix3(np.array(re, dtype=dtype).reshape(m, n, p), np.array(im, dtype=dtype).reshape(m, n, p))


def _nested(v, length, where):
    if not isinstance(v, list) or len(v) != length:
        raise InputError(f"{where}: expected a list of length {length}")
    return v


def super_from_json(data, exact=True):
    mat = matrix_from_json(data, exact)
    sup = data.get("super")
    if not isinstance(sup, dict):
        raise InputError('supermatrix file needs "super": {"r": R, "s": S}')
    r, s = _extent(sup.get("r"), "super.r"), _extent(sup.get("s"), "super.s")
    if not mat.is_cubic or r + s != mat.n:
        raise InputError(f"super structure ({r},{s}) does not fit shape {list(mat.shape)}")
    return SuperCubic(mat, SuperStructure(r, s))


# ---------------------------------------------------------------- algebras


def _index(v, d, where):
    if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= d:
        raise InputError(f"{where}: basis index must be in 1..{d}, got {v!r}")
    return v - 1


def algebra_to_json(g):
    brackets = []
    for a in range(g.dim):
        for b in range(a, g.dim):
            result = [
                {"idx": e + 1, "c": to_jsonable(g.c.entry((a, b, e)))}
                for e in range(g.dim)
                if not g.c.entry((a, b, e)).is_zero()
            ]
            if result:
                brackets.append({"x": a + 1, "y": b + 1, "result": result})
    return {"kind": "lie_superalgebra", "dim": g.dim, "parity": list(g.parity), "brackets": brackets}


def algebra_from_json(data, exact=True, name=""):
    """Load an algebra, completing the listed brackets by graded skew-symmetry.

    The Lie superalgebra axioms are not enforced here; run
    :func:`validate_algebra` to get them reported with witnesses.
    """
    if not isinstance(data, dict) or data.get("kind") != "lie_superalgebra":
        raise InputError('algebra file must be an object with "kind": "lie_superalgebra"')
    d = _extent(data.get("dim"), "dim")
    parity = data.get("parity", [0] * d)
    if not isinstance(parity, list) or len(parity) != d or any(p not in (0, 1) or isinstance(p, bool) for p in parity):
        raise InputError(f'"parity" must list {d} values in {{0, 1}}')
    brackets = data.get("brackets", [])
    if not isinstance(brackets, list):
        raise InputError('"brackets" must be a list')
    re = np.zeros((d, d, d), dtype=object)
    im = np.zeros((d, d, d), dtype=object)
    seen = set()
    for n, br in enumerate(brackets):
        if not isinstance(br, dict):
            raise InputError(f"brackets[{n}] must be an object")
        a = _index(br.get("x"), d, f"brackets[{n}].x")
        b = _index(br.get("y"), d, f"brackets[{n}].y")
        if frozenset((a, b)) in seen:
            raise InputError(f"bracket of basis elements {a + 1} and {b + 1} given more than once")
        seen.add(frozenset((a, b)))
        result = br.get("result", [])
        if not isinstance(result, list):
            raise InputError(f"brackets[{n}].result must be a list")
        # [e_b, e_a] = -(-1)^{p(a)p(b)} [e_a, e_b]
        mirror = 1 if parity[a] * parity[b] % 2 else -1
        for t, term in enumerate(result):
            if not isinstance(term, dict):
                raise InputError(f"brackets[{n}].result[{t}] must be an object")
            e = _index(term.get("idx"), d, f"brackets[{n}].result[{t}].idx")
            x, y = _pair(term.get("c"), exact, f"brackets[{n}].result[{t}].c")
            re[a, b, e] += x
            im[a, b, e] += y
            if a != b:
                re[b, a, e] += mirror * x
                im[b, a, e] += mirror * y
    try:
        c = CArray(re, im)
        g = StructureAlgebra(tuple(parity), c if exact else c.as_float(), name)
    except (Nambu3Error, ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    return g


def cochain_to_json(w):
    return {
        "degree": w.degree,
        "values": [{"args": list(args), "c": to_jsonable(v)} for args, v in sorted(w.values().items())],
    }


def cochain_from_json(data, g, exact=True):
    if not isinstance(data, dict):
        raise InputError("cochain file must be an object")
    degree = _extent(data.get("degree"), "degree")
    values = data.get("values", [])
    if not isinstance(values, list):
        raise InputError('"values" must be a list')
    table = {}
    for n, item in enumerate(values):
        if not isinstance(item, dict):
            raise InputError(f"values[{n}] must be an object")
        args = item.get("args")
        if not isinstance(args, list) or len(args) != degree:
            raise InputError(f"values[{n}].args must list {degree} indices")
        idx = tuple(_index(a, g.dim, f"values[{n}].args") + 1 for a in args)
        if any(x >= y for x, y in zip(idx, idx[1:])):
            raise InputError(f"values[{n}].args must be strictly increasing")
        if idx in table:
            raise InputError(f"values[{n}]: arguments {list(idx)} given twice")
        table[idx] = Scalar(*_pair(item.get("c"), exact, f"values[{n}].c"))
    try:
        w = Cochain.from_values(g, degree, table)
    except Nambu3Error as exc:
        raise InputError(str(exc)) from exc
    return w if exact else w.as_float()


# ---------------------------------------------------------------- files


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_matrix(path, exact=True):
    data = read_json(path)
    if isinstance(data, dict) and "super" in data:
        return super_from_json(data, exact)
    return matrix_from_json(data, exact)


def load_algebra(path, exact=True):
    return algebra_from_json(read_json(path), exact, name=str(path))


def load_cochain(path, g, exact=True):
    return cochain_from_json(read_json(path), g, exact)
