"""JSON forms of scalars, tables, parameter files, transforms and results."""

from __future__ import annotations

import json
import sys
from fractions import Fraction

from .algebra import AlgebraTable
from .classify import ClassificationResult, OrbitLabel, UnknownLabel
from .families import TLEIB_PARAMS, BadDimension, FLeibParams, SLeibParams
from .scalar import Scalar, format_scalar, parse_scalar
from .transform import AdaptedTransform


class ParseError(ValueError):
    pass


def scalar_to_json(s: Scalar):
    if s.exact:
        return format_scalar(s)
    z = s.to_complex()
    return [z.real, z.imag]


def scalar_from_json(v) -> Scalar:
    if isinstance(v, bool):
        raise ParseError(f"not a scalar: {v!r}")
    if isinstance(v, str):
        try:
            return parse_scalar(v)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if isinstance(v, int):
        return Scalar(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return Scalar.approx(complex(v[0], v[1]))
    raise ParseError(f"not a scalar: {v!r}")


def _check_keys(obj, allowed, what):
    if not isinstance(obj, dict):
        raise ParseError(f"{what} must be a JSON object")
    extra = set(obj) - set(allowed)
    if extra:
        raise ParseError(f"unknown field(s) in {what}: {sorted(extra)}")


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{what} must be an integer")
    return v


# -- tables --------------------------------------------------------------


def table_to_json(table: AlgebraTable) -> dict:
    return {
        "dim": table.dim,
        "entries": [
            {"i": i, "j": j, "k": k, "c": scalar_to_json(c)} for i, j, k, c in table.entries()
        ],
    }


def table_from_json(obj) -> AlgebraTable:
    _check_keys(obj, {"dim", "entries"}, "table")
    try:
        dim = _int(obj["dim"], "dim")
        entries = obj["entries"]
    except KeyError as exc:
        raise ParseError(f"table is missing {exc}") from None
    if dim < 1 or not isinstance(entries, list):
        raise ParseError("table needs a positive dim and a list of entries")
    brackets: dict = {}
    for e in entries:
        _check_keys(e, {"i", "j", "k", "c"}, "table entry")
        try:
            i, j, k = (_int(e[x], x) for x in "ijk")
            c = scalar_from_json(e["c"])
        except KeyError as exc:
            raise ParseError(f"table entry is missing {exc}") from None
        if not all(0 <= x < dim for x in (i, j, k)):
            raise ParseError(f"entry index ({i},{j},{k}) out of range")
        terms = brackets.setdefault((i, j), {})
        if k in terms:
            raise ParseError(f"duplicate entry ({i},{j},{k})")
        terms[k] = c
    return AlgebraTable.from_brackets(dim, brackets)


# -- parameter files -----------------------------------------------------


def _fs_names(prefix, last, n):
    return [f"{prefix}{k}" for k in range(3, n + 1)] + [last]


def params_to_json(p) -> dict:
    if isinstance(p, FLeibParams):
        names = _fs_names("alpha", "theta", p.n)
        values = [*p.alphas, p.theta]
        family = "FLeib"
    elif isinstance(p, SLeibParams):
        names = _fs_names("beta", "gamma", p.n)
        values = [*p.betas, p.gamma]
        family = "SLeib"
    else:
        names, values, family = p.names(), p.as_tuple(), "TLeib"
    return {
        "family": family,
        "dim": p.dim,
        "params": {k: scalar_to_json(v) for k, v in zip(names, values)},
    }


def params_from_json(obj):
    """Parse a parameter file; missing parameters default to 0."""
    _check_keys(obj, {"family", "dim", "params"}, "parameter file")
    try:
        family, dim = obj["family"], _int(obj["dim"], "dim")
    except KeyError as exc:
        raise ParseError(f"parameter file is missing {exc}") from None
    raw = obj.get("params", {})
    if family == "TLeib":
        if dim not in TLEIB_PARAMS:
            raise BadDimension(f"TLeib is only resolved in dims 5 and 6, not {dim}")
        cls = TLEIB_PARAMS[dim]
        names = cls.names()
    elif family in ("FLeib", "SLeib"):
        if dim < 4:
            raise BadDimension(f"{family} needs dim >= 4, got {dim}")
        names = _fs_names(*(("alpha", "theta") if family == "FLeib" else ("beta", "gamma")), dim - 1)
    else:
        raise ParseError(f"unknown family {family!r}")
    _check_keys(raw, names, "params")
    values = [scalar_from_json(raw.get(name, "0")) for name in names]
    if family == "TLeib":
        return cls(*values)
    if family == "FLeib":
        return FLeibParams(dim - 1, tuple(values[:-1]), values[-1])
    return SLeibParams(dim - 1, tuple(values[:-1]), values[-1])


def tleib_params_dict(p) -> dict:
    return {name: scalar_to_json(v) for name, v in zip(p.names(), p.as_tuple())}


def tleib_params_from_dict(obj, dim: int):
    cls = TLEIB_PARAMS[dim]
    _check_keys(obj, cls.names(), "canonical")
    return cls(*(scalar_from_json(obj.get(n, "0")) for n in cls.names()))


# -- transforms and results ----------------------------------------------


def transform_to_json(t: AdaptedTransform) -> dict:
    return {"A": [scalar_to_json(a) for a in t.A], "B": [scalar_to_json(b) for b in t.B]}


def transform_from_json(obj) -> AdaptedTransform:
    _check_keys(obj, {"A", "B"}, "transform")
    try:
        A = [scalar_from_json(a) for a in obj["A"]]
        B = [scalar_from_json(b) for b in obj["B"]]
    except KeyError as exc:
        raise ParseError(f"transform is missing {exc}") from None
    try:
        return AdaptedTransform(tuple(A), tuple(B))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def result_to_json(r: ClassificationResult) -> dict:
    return {
        "label": str(r.label),
        "invariants": {k: None if v is None else scalar_to_json(v) for k, v in r.invariants.items()},
        "canonical": None if r.canonical is None else tleib_params_dict(r.canonical),
        "witness": None if r.witness is None else transform_to_json(r.witness),
        "degenerate": r.degenerate,
        "reason": r.reason,
        "lie": r.lie,
    }


def result_from_json(obj) -> ClassificationResult:
    _check_keys(obj, {"label", "invariants", "canonical", "witness", "degenerate", "reason", "lie"}, "result")
    try:
        label = OrbitLabel.parse(obj["label"])
    except (KeyError, UnknownLabel) as exc:
        raise ParseError(f"bad label: {exc}") from None
    invs = {k: None if v is None else scalar_from_json(v) for k, v in obj.get("invariants", {}).items()}
    canon = obj.get("canonical")
    witness = obj.get("witness")
    return ClassificationResult(
        label,
        invs,
        None if canon is None else tleib_params_from_dict(canon, label.dim),
        None if witness is None else transform_from_json(witness),
        bool(obj.get("degenerate", False)),
        obj.get("reason", ""),
        bool(obj.get("lie", False)),
    )


def defect_to_json(value):
    return str(value) if isinstance(value, Fraction) else value


# -- files ---------------------------------------------------------------


def load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def dumps(obj, pretty: bool = True) -> str:
    return json.dumps(obj, indent=2 if pretty else None, ensure_ascii=False)

