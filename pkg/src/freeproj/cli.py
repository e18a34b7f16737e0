"""Command-line front end: parse inputs, run computations, emit JSON reports.

Reports go to stdout and are byte-identical across runs for fixed inputs and
seed; timing diagnostics go to stderr.  Exit codes: 0 success, 1 computation
failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .af_s import AFMatrix
from .errors import FreeProjError, ParseError
from .fields import field_from_spec
from .freealg import FreeAlgebra
from .leavitt import l0_to_s
from .parsing import parse_leavitt, parse_presentation
from .qgr import pi_star
from .verify import SUITE_NAMES, run_suite


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(report: dict, args) -> None:
    if args.text:
        for key, value in report.items():
            print(f"{key}: {json.dumps(_jsonable(value), sort_keys=True)}")
    else:
        print(json.dumps(_jsonable(report), sort_keys=True))


def _load_presentation(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_presentation(text)


def _load_af(path: str, field):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON in {path}: {exc}") from exc
    return AFMatrix.from_json(data, field)


def _algebra(args) -> FreeAlgebra:
    return FreeAlgebra(args.d, field_from_spec(args.field))


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_hilbert(args) -> dict:
    pf = _load_presentation(args.file)
    M = pf.module()
    return {
        "command": "hilbert",
        "inputs": {"file": args.file, "j": args.j, "d": pf.d, "field": pf.field.name},
        "result": {"dim": M.hilbert(args.j)},
    }


def cmd_profile(args) -> dict:
    pf = _load_presentation(args.file)
    M = pf.module()
    p = M.stable_profile()
    if args.degree_cap > p.certified_through:
        p = M.stable_profile(window=4 + args.degree_cap - p.certified_through)
    return {
        "command": "profile",
        "inputs": {"file": args.file, "d": pf.d, "field": pf.field.name},
        "result": {"profile": p.as_dict()},
        "certificates": {"certified_through": p.certified_through},
    }


def cmd_k0(args) -> dict:
    pf = _load_presentation(args.file)
    cls = pf.module().k0_class()
    return {
        "command": "k0",
        "inputs": {"file": args.file, "d": pf.d, "field": pf.field.name},
        "result": {"k0": cls.to_json(), "value": str(cls.value)},
    }


def cmd_torsion(args) -> dict:
    pf = _load_presentation(args.file)
    M = pf.module()
    tors = M.torsion()
    i0 = M.stable_profile().i0
    by_degree = {
        str(j): tors.module.hilbert(j) for j in range(M.min_degree, i0) if tors.dimension
    }
    return {
        "command": "torsion",
        "inputs": {"file": args.file, "d": pf.d, "field": pf.field.name},
        "result": {"dimension": tors.dimension, "by_degree": by_degree},
    }


def cmd_qgr_class(args) -> dict:
    pf = _load_presentation(args.file)
    obj = pi_star(pf.module())
    return {
        "command": "qgr-class",
        "inputs": {"file": args.file, "d": pf.d, "field": pf.field.name},
        "result": {"class": obj.cls.to_json(), "witness": list(obj.witness)},
    }


def cmd_iso(args) -> dict:
    pa = _load_presentation(args.file_a)
    pb = _load_presentation(args.file_b)
    if pa.d != pb.d:
        raise ParseError("presentations have different d")
    a = pi_star(pa.module())
    b = pi_star(pb.module())
    return {
        "command": "iso",
        "inputs": {"file_a": args.file_a, "file_b": args.file_b, "d": pa.d},
        "result": {
            "isomorphic": a.cls == b.cls,
            "class_a": a.cls.to_json(),
            "class_b": b.cls.to_json(),
        },
    }


def cmd_decompose(args) -> dict:
    pf = _load_presentation(args.file)
    obj = pi_star(pf.module())
    r = obj.decompose(args.i)
    return {
        "command": "decompose",
        "inputs": {"file": args.file, "i": args.i, "d": pf.d},
        "result": {"multiplicity": r, "at_twist": args.i},
    }


def cmd_leavitt_eval(args) -> dict:
    A = _algebra(args)
    if args.level is not None and args.level > args.level_cap:
        raise ParseError(
            f"level {args.level} exceeds --level-cap {args.level_cap}"
        )
    elem = parse_leavitt(A, args.expr).canonical()
    result = {
        "text": str(elem),
        "is_zero": elem.is_zero(),
        "degrees": elem.degrees(),
    }
    if args.level is not None and result["degrees"] in ([], [0]):
        result["matrix"] = l0_to_s(elem, level=args.level).to_json()
    return {
        "command": "leavitt-eval",
        "inputs": {"expr": args.expr, "d": A.d, "field": A.field.name, "level": args.level},
        "result": result,
    }


def cmd_s_calc(args) -> dict:
    field = field_from_spec(args.field)
    if args.level is not None and args.level > args.level_cap + 1:
        raise ParseError(f"level {args.level} exceeds --level-cap {args.level_cap}")
    inputs = {"subcommand": args.sub, "field": field.name}
    if args.sub == "canonical":
        a = _load_af(args.inputs[0], field)
        result = {"element": a.canonical().to_json()}
    elif args.sub == "k0":
        a = _load_af(args.inputs[0], field)
        cls = a.k0_class()
        result = {"k0": cls.to_json(), "value": str(cls.value)}
    elif args.sub == "mul":
        a = _load_af(args.inputs[0], field)
        b = _load_af(args.inputs[1], field)
        result = {"element": (a * b).to_json()}
    elif args.sub == "embed":
        a = _load_af(args.inputs[0], field)
        result = {"element": a.embed(args.level if args.level is not None else a.level + 1).to_json()}
    elif args.sub == "regular":
        a = _load_af(args.inputs[0], field)
        x = a.vn_regular_witness()
        result = {"witness": x.to_json(), "verified": a * x * a == a}
    elif args.sub == "simplicity":
        a = _load_af(args.inputs[0], field)
        us, vs = a.simplicity_witness()
        acc = AFMatrix.zero(a.d, 0, field)
        for u, v in zip(us, vs):
            acc = acc + u * a * v
        result = {"terms": len(us), "verified": acc == AFMatrix.scalar(a.d, 1, field)}
    else:
        raise ParseError(f"unknown s-calc subcommand {args.sub!r}")
    inputs["files"] = list(args.inputs)
    return {"command": "s-calc", "inputs": inputs, "result": result}


def cmd_verify(args) -> dict:
    if args.d is not None and args.d < 1:
        raise ParseError("d must be at least 1")
    if args.suite == "all":
        numbers = None
    elif args.suite in SUITE_NAMES:
        numbers = [SUITE_NAMES[args.suite]]
    else:
        try:
            numbers = [int(args.suite)]
        except ValueError:
            raise ParseError(
                f"unknown suite {args.suite!r}; choose from "
                + ", ".join(sorted(SUITE_NAMES)) + ", all, or a number"
            ) from None
        if numbers[0] not in range(1, 13):
            raise ParseError(f"criterion number out of range: {numbers[0]}")
    results = run_suite(numbers, seed=args.seed)
    entries = []
    for r in results:
        entry = {"criterion": r.number, "name": r.name, "passed": r.passed}
        extra = {k: v for k, v in r.details.items() if v}
        if extra:
            entry["details"] = extra
        entries.append(entry)
    return {
        "command": "verify",
        "inputs": {
            "suite": args.suite,
            "seed": args.seed,
            "d": args.d,
            "max_degree": args.max_degree,
        },
        "result": {
            "criteria": entries,
            "all_passed": all(r.passed for r in results),
        },
    }


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # route argparse usage errors to exit code 2 without killing tests
        raise ParseError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="freeproj", description=__doc__)
    parser.add_argument("--d", type=int, default=2, help="number of generators (for expression commands)")
    parser.add_argument("--field", default="QQ", help="QQ or GF:p")
    parser.add_argument("--degree-cap", type=int, default=8, dest="degree_cap")
    parser.add_argument("--level-cap", type=int, default=3, dest="level_cap")
    parser.add_argument("--seed", type=int, default=0)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--text", action="store_true", help="line-oriented output instead of JSON")
    mode.add_argument("--json", action="store_true", help="JSON output (the default)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="graded dimension of a presented module")
    p.add_argument("file")
    p.add_argument("j", type=int)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("profile", help="stable free-tail profile")
    p.add_argument("file")
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("k0", help="class in Z[1/d]")
    p.add_argument("file")
    p.set_defaults(fn=cmd_k0)

    p = sub.add_parser("torsion", help="largest finite-dimensional submodule")
    p.add_argument("file")
    p.set_defaults(fn=cmd_torsion)

    p = sub.add_parser("qgr-class", help="image in the quotient category")
    p.add_argument("file")
    p.set_defaults(fn=cmd_qgr_class)

    p = sub.add_parser("iso", help="are two presentations isomorphic in the quotient?")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("decompose", help="multiplicity against a twisted power")
    p.add_argument("file")
    p.add_argument("i", type=int)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("leavitt-eval", help="evaluate a Leavitt expression")
    p.add_argument("expr")
    p.add_argument("--level", type=int, default=None)
    p.set_defaults(fn=cmd_leavitt_eval)

    p = sub.add_parser("s-calc", help="limit-algebra calculator on JSON elements")
    p.add_argument("sub", choices=["canonical", "k0", "mul", "embed", "regular", "simplicity"])
    p.add_argument("inputs", nargs="+")
    p.add_argument("--level", type=int, default=None)
    p.set_defaults(fn=cmd_s_calc)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        report = args.fn(args)
    except ParseError as exc:
        print(json.dumps({"error": str(exc), "kind": "parse"}))
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except FreeProjError as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}))
        print(f"computation error: {exc}", file=sys.stderr)
        return 1
    _emit(report, args)
    elapsed = time.perf_counter() - start
    print(f"[freeproj] {report['command']} finished in {elapsed:.3f}s", file=sys.stderr)
    if report["command"] == "verify" and not report["result"]["all_passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
