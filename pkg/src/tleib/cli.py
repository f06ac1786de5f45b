"""Command-line front end.

    tleib verify FILE          Leibniz defect, lower central series, filiform check
    tleib classify FILE|-      subset, invariants, canonical tuple, witness
    tleib isomorphic FILE FILE decision plus certificate
    tleib table [FILE]         full multiplication table
    tleib canon FILE           canonical tuple, witness and its residual
    tleib sample LABEL         random member of a subset, as a parameter file

Exit status: 0 on success, 1 on domain errors, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import is_filiform, is_lie, leibniz_defect, lower_central_series
from .classify import (
    DegenerateStratum,
    OrbitLabel,
    UnknownLabel,
    canonical,
    classify,
    delta,
    isomorphic,
    sample_member,
    witness_residual,
)
from .families import BadDimension, FLeibParams, SLeibParams, TLeib5Params, TLeib6Params, build
from .scalar import DEFAULT_TOL, RESIDUAL_TOL, Scalar
from .serialize import (
    ParseError,
    defect_to_json,
    dumps,
    load_json,
    params_from_json,
    params_to_json,
    result_to_json,
    table_from_json,
    table_to_json,
    tleib_params_dict,
    transform_to_json,
)
from .transform import SingularTransform, TemplateMismatch

TLEIB = (TLeib5Params, TLeib6Params)


class DomainError(Exception):
    pass


# -- text rendering ------------------------------------------------------


def fmt(s: Scalar | None) -> str:
    if s is None:
        return "undefined"
    if s.exact:
        return str(s)
    z = s.to_complex()
    if z.imag == 0:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}i"


def fmt_params(p) -> str:
    return "L(" + ", ".join(fmt(v) for v in p.as_tuple()) + ")"


def fmt_transform(t) -> str:
    a = ", ".join(fmt(x) for x in t.A)
    b = ", ".join(fmt(x) for x in t.B)
    return f"A = ({a}), B = ({b})"


def fmt_result(p, r) -> list[str]:
    lines = [f"{fmt_params(p)} in {r.label.notation}", f"Delta = {fmt(delta(p))}"]
    if r.invariants:
        lines += [f"{k} = {fmt(v)}" for k, v in r.invariants.items()]
    else:
        lines.append("invariants: none (single orbit)")
    if r.degenerate:
        lines.append(f"degenerate stratum: {r.reason}")
    else:
        lines.append(f"canonical: {fmt_params(r.canonical)}")
        lines.append(f"witness: {fmt_transform(r.witness)}")
    lines.append(f"Lie: {'yes' if r.lie else 'no'}")
    return lines


# -- input ---------------------------------------------------------------


def _convert(p, mode: str):
    if mode == "exact":
        return p
    if isinstance(p, TLEIB):
        return type(p)(*(v.to_approx() for v in p.as_tuple()))
    if isinstance(p, FLeibParams):
        return FLeibParams(p.n, tuple(v.to_approx() for v in p.alphas), p.theta.to_approx())
    return SLeibParams(p.n, tuple(v.to_approx() for v in p.betas), p.gamma.to_approx())


def _load_params(obj, args):
    return _convert(params_from_json(obj), args.mode)


def _load_tleib(obj, args):
    p = _load_params(obj, args)
    if not isinstance(p, TLEIB):
        raise DomainError("classification covers TLeib in dims 5 and 6 only")
    return p


def _tol(args, default):
    return args.tol if args.tol is not None else default


# -- commands ------------------------------------------------------------


def cmd_verify(args):
    obj = load_json(args.file)
    if isinstance(obj, dict) and "entries" in obj:
        table, p = table_from_json(obj), None
        if args.mode == "float":
            table = type(table)(table.dim, [[[c.to_approx() for c in v] for v in row] for row in table.constants])
    else:
        p = _load_params(obj, args)
        table = build(p)
    tol = _tol(args, 1e-10)
    report = {
        "dim": table.dim,
        "leibniz_defect": defect_to_json(leibniz_defect(table)),
        "lower_central_series": lower_central_series(table, tol),
        "filiform": is_filiform(table, tol),
        "lie": is_lie(table),
    }
    if args.format == "json":
        return dumps(report)
    lines = []
    if isinstance(p, TLEIB):
        lines.append(f"TLeib_{p.dim}: {fmt_params(p)}")
    lines += [
        f"dim: {report['dim']}",
        f"Leibniz defect: {report['leibniz_defect']}",
        f"lower central series: {report['lower_central_series']}",
        f"filiform: {'yes' if report['filiform'] else 'no'}",
        f"Lie: {'yes' if report['lie'] else 'no'}",
    ]
    return "\n".join(lines)


def _classify_one(obj, args):
    p = _load_tleib(obj, args)
    r = classify(p, _tol(args, DEFAULT_TOL))
    if args.format == "json":
        return result_to_json(r), p, r
    return None, p, r


def cmd_classify(args):
    if args.file != "-" or args.single:
        js, p, r = _classify_one(load_json(args.file), args)
        return dumps(js) if js is not None else "\n".join(fmt_result(p, r))
    # batch: one parameter file per line, answers in input order
    out, status = [], 0
    for n, line in enumerate(sys.stdin, 1):
        if not line.strip():
            continue
        try:
            js, p, r = _classify_one(json.loads(line), args)
            out.append(dumps(js, pretty=False) if js is not None else " | ".join(fmt_result(p, r)))
        except (json.JSONDecodeError, ParseError) as exc:
            status = max(status, 2)
            out.append(dumps({"line": n, "error": str(exc)}, pretty=False))
        except (DomainError, BadDimension) as exc:
            status = max(status, 1)
            out.append(dumps({"line": n, "error": str(exc)}, pretty=False))
    print("\n".join(out))
    return status


def cmd_isomorphic(args):
    pa = _load_tleib(load_json(args.first), args)
    pb = _load_tleib(load_json(args.second), args)
    if pa.dim != pb.dim:
        raise DomainError("tuples of different dimension are never isomorphic here")
    answer, cert = isomorphic(pa, pb, _tol(args, RESIDUAL_TOL))
    if args.format == "json":
        return dumps(
            {
                "isomorphic": answer,
                "a": result_to_json(cert.a),
                "b": result_to_json(cert.b),
                "witness": None if cert.witness is None else transform_to_json(cert.witness),
                "note": cert.note,
            }
        )
    word = {True: "yes", False: "no", None: "undecided"}[answer]
    lines = [
        f"isomorphic: {word}" + (f" ({cert.note})" if cert.note else ""),
        f"a: {fmt_params(pa)} in {cert.a.label.notation}",
        f"b: {fmt_params(pb)} in {cert.b.label.notation}",
    ]
    if cert.a.canonical is not None and cert.b.canonical is not None:
        lines.append(f"canonical: {fmt_params(cert.a.canonical)} / {fmt_params(cert.b.canonical)}")
    if cert.witness is not None:
        lines.append(f"witness a -> b: {fmt_transform(cert.witness)}")
    return "\n".join(lines)


def _inline_params(args):
    if args.family is None:
        raise ParseError("give a parameter file or --family/--dim/--param")
    params = {}
    for item in args.param or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(f"--param expects name=value, got {item!r}")
        params[key.strip()] = value.strip()
    return {"family": args.family, "dim": args.dim, "params": params}


def _term(c: Scalar, k: int) -> str:
    if c.exact and c.im == 0:
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        return f"{sign} e{k}" if mag == 1 else f"{sign} {fmt(Scalar(mag))}*e{k}"
    return f"+ ({fmt(c)})*e{k}"


def cmd_table(args):
    obj = load_json(args.file) if args.file else _inline_params(args)
    p = _load_params(obj, args)
    table = build(p)
    if args.format == "json":
        return dumps(table_to_json(table))
    lines = []
    for i in range(table.dim):
        for j in range(table.dim):
            terms = [_term(c, k) for k, c in enumerate(table.bracket(i, j)) if c]
            if terms:
                rhs = " ".join(terms).lstrip("+ ")
                lines.append(f"[e{i}, e{j}] = {rhs}")
    return "\n".join(lines) if lines else "all products are zero"


def cmd_canon(args):
    p = _load_tleib(load_json(args.file), args)
    try:
        canon, witness = canonical(p, _tol(args, DEFAULT_TOL))
    except DegenerateStratum as exc:
        if args.format == "json":
            return dumps({"canonical": None, "witness": None, "degenerate": True, "reason": str(exc)})
        return f"{fmt_params(p)}: degenerate stratum, no canonical tuple\n{exc}"
    r = classify(p, _tol(args, DEFAULT_TOL))
    res = witness_residual(p, r)
    if args.format == "json":
        return dumps(
            {
                "canonical": tleib_params_dict(canon),
                "witness": transform_to_json(witness),
                "residual": res,
                "degenerate": False,
            }
        )
    return "\n".join(
        [
            f"{fmt_params(p)} ~ {fmt_params(canon)}",
            f"witness: {fmt_transform(witness)}",
            f"residual: {res:.3g}" + (" (exact)" if witness.exact and canon.exact else ""),
        ]
    )


def cmd_sample(args):
    label = OrbitLabel.parse(args.label)
    seed = args.seed if args.seed is not None else 0
    p = sample_member(label, seed)
    text = dumps(params_to_json(p))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
        return f"wrote {fmt_params(p)} in {label.notation} to {args.output}"
    return text


# -- entry point ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, default=None, help="zero tolerance in float mode")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(prog="tleib", description="Filiform Leibniz algebras TLeib_5 and TLeib_6")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check Leibniz identity and filiformity")
    p.add_argument("file", help="parameter file or table file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="orbit label, invariants, canonical tuple")
    p.add_argument("file", help="parameter file, or - for one JSON object per stdin line")
    p.add_argument("--single", action="store_true", help="read one JSON document from stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("isomorphic", parents=[common], help="decide isomorphism of two tuples")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("table", parents=[common], help="print a multiplication table")
    p.add_argument("file", nargs="?")
    p.add_argument("--family", choices=("TLeib", "FLeib", "SLeib"))
    p.add_argument("--dim", type=int)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("canon", parents=[common], help="canonical tuple with witness")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("sample", parents=[common], help="random member of a subset, e.g. U6_14")
    p.add_argument("label")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, BadDimension, UnknownLabel, SingularTransform, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TemplateMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if isinstance(out, int):
        return out
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
