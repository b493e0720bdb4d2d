"""Command-line front end: run scenario suites, compute one-off
expectations, print tables.

Exit codes for ``run``: 0 all checks passed, 1 a check failed (the
report is still written), 2 unknown suite or bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import unit
from .characters import evaluate, parse_character
from .errors import IsrlabError
from .expectation import conditional_expectation, load_spec
from .groups import enumerate_group
from .serialize import encode_algebra, encode_group, encode_rational, decode_group
from .zoo import SUITES, build_mexo, build_mpart, build_mq, report_passed
from . import zoo


def _resolve_cap(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("ISRLAB_CAP")
    return int(env) if env else None


def _suite_kwargs(args) -> dict:
    kw: dict = {}
    if args.n is not None:
        kw["n"] = args.n
    if args.m is not None:
        kw["m"] = args.m
    if args.seed is not None:
        kw["seed"] = args.seed
    cap = _resolve_cap(args)
    if cap is not None:
        kw["cap"] = cap
    return kw


def cmd_run(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            print(f"unknown suite: {name}", file=sys.stderr)
            return 2
    kw = _suite_kwargs(args)
    reports = [SUITES[name](**kw) for name in names]
    doc = {
        "suite": args.suite,
        "seed": args.seed if args.seed is not None else zoo.DEFAULT_SEED,
        "reports": reports,
    }
    blob = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")
    else:
        print(blob)
    return 0 if all(report_passed(r) for r in reports) else 1


_BUILTIN_SPECS = {
    "mexo": lambda n, sign: build_mexo(n),
    "mq": lambda n, sign: build_mq(n, sign),
    "mpart": lambda n, sign: build_mpart(n),
}


def _load_spec_arg(text: str):
    """A spec file path, or a builtin name like mexo:2, mq:3, mq:3:-."""
    if os.path.exists(text):
        return load_spec(text)
    parts = text.split(":")
    name = parts[0]
    if name not in _BUILTIN_SPECS:
        raise IsrlabError(f"no spec file or builtin named {text!r}")
    n = int(parts[1]) if len(parts) > 1 else 2
    sign = -1 if len(parts) > 2 and parts[2] == "-" else 1
    return _BUILTIN_SPECS[name](n, sign)


def _load_element_arg(text: str):
    if os.path.exists(text):
        with open(text) as fh:
            return decode_group(json.load(fh))
    return decode_group(json.loads(text))


def cmd_expect(args) -> int:
    try:
        spec = _load_spec_arg(args.spec)
        g = _load_element_arg(args.element)
        rep = conditional_expectation(unit(g), spec)
    except (IsrlabError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = {
        "element": encode_group(g),
        "expectation": encode_algebra(rep.output),
        "residual_norm_sq": encode_rational(rep.residual_norm_sq),
        "character": {
            "re": encode_rational(rep.character_value.re),
            "im": encode_rational(rep.character_value.im),
        },
    }
    print(json.dumps(out, sort_keys=True, indent=2, ensure_ascii=False))
    return 0


def _print_tsv(rows) -> None:
    for row in rows:
        print("\t".join(str(c) for c in row))


def cmd_tables(args) -> int:
    which = args.table
    if which in ("characters", "all"):
        chi = parse_character(args.character)
        n = args.n if args.n is not None else 2
        family = "cantor" if chi.kind == "cantor" else "affine"
        pool = enumerate_group(family, n)
        if chi.kind in ("gl", "cantor"):
            pool = [
                g
                for g in pool
                if (chi.kind == "gl" and g.v.is_zero()) or (chi.kind == "cantor" and not g.a)
            ]
        print(f"# character {chi.name()} on {family} truncation {n}")
        _print_tsv(
            [("element", "value")]
            + [
                (json.dumps(encode_group(g), sort_keys=True), encode_rational(evaluate(chi, g)))
                for g in pool
            ]
        )
    if which in ("fpc", "all"):
        rep = zoo.fpc_growth_suite()
        print("# fpc orbit growth")
        _print_tsv(
            [("case", "orbit sizes", "pass")]
            + [
                (c["description"], ",".join(str(s) for s in c["actual"]), c["pass"])
                for c in rep["checks"]
            ]
        )
    if which in ("closures", "all"):
        print("# normal-closure sizes")
        cap = _resolve_cap(args) or 10**6
        for family, n in (("affine", 3), ("wreath", 4), ("cantor", 2)):
            for label, size in zoo.closure_table(family, n, cap):
                print(f"{family}:{n}\t{label}\t{size}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isrlab")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a scenario suite and write a JSON report")
    run.add_argument("--suite", default="all")
    run.add_argument("--n", type=int, default=None)
    run.add_argument("--m", type=int, default=None)
    run.add_argument("--seed", type=int, default=None)
    run.add_argument("--out", default=None)
    run.add_argument("--cap", type=int, default=None)
    run.set_defaults(fn=cmd_run)

    exp = sub.add_parser("expect", help="project a group unitary onto a subalgebra spec")
    exp.add_argument("spec", help="spec JSON file, or builtin (mexo:2, mq:3, mq:3:-, mpart:3)")
    exp.add_argument("element", help="group element as JSON (inline or a file path)")
    exp.set_defaults(fn=cmd_expect)

    tab = sub.add_parser("tables", help="print character/fpc/closure tables as TSV")
    tab.add_argument("--table", choices=["characters", "fpc", "closures", "all"], default="all")
    tab.add_argument("--character", default="affine:k=1,d=1")
    tab.add_argument("--n", type=int, default=None)
    tab.add_argument("--cap", type=int, default=None)
    tab.set_defaults(fn=cmd_tables)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except IsrlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
