"""Command line driver: ``siggb run|gen|check``.

Exit status: 0 on success, 1 when verification finds a mismatch, 2 on usage,
parse or configuration errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import engine, oracle
from .problem import (ProblemFile, ProblemParseError, format_problem, gen_benchmark,
                      parse_polynomial, parse_problem)
from .sigmodule import ConfigurationError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="siggb",
                                 description="Signature-based Groebner bases over GF(p).")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="compute a Groebner basis of a problem file")
    r.add_argument("file", type=Path)
    r.add_argument("--algorithm", default="gvwhs",
                   choices=engine.VARIANTS + ("buchberger",))
    r.add_argument("--module-order", default="pot", choices=("pot", "gw"))
    r.add_argument("--insert", default="block-end", choices=engine.INSERT_POLICIES,
                   help="F5GEN insertion policy")
    r.add_argument("--mode", default="fast", choices=engine.MODES)
    r.add_argument("--criteria", default="on", choices=("on", "off"))
    r.add_argument("--trace", action="store_true")
    r.add_argument("--stats", action="store_true")
    r.add_argument("--reduce", action="store_true", help="print the reduced basis")
    r.add_argument("--verify", action="store_true",
                   help="check the result is a Groebner basis equal to Buchberger's")

    g = sub.add_parser("gen", help="print a benchmark problem")
    g.add_argument("family", choices=("cyclic", "katsura"))
    g.add_argument("n", type=int)

    c = sub.add_parser("check", help="verify a basis file against a problem")
    c.add_argument("file", type=Path)
    c.add_argument("basis", type=Path)
    return ap


def _read_problem(path: Path) -> ProblemFile:
    return parse_problem(path.read_text(encoding="utf-8"))


def _read_basis(path: Path, pf: ProblemFile) -> list:
    text = path.read_text(encoding="utf-8")
    if any(line.strip() == "polys" for line in text.splitlines()):
        return parse_problem(text).polys
    ring = pf.ring
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if line.strip():
            out.append(parse_polynomial(line, ring, lineno))
    return out


def _verify(basis, inputs, out) -> int:
    report = oracle.verify_gb(basis)
    if not report.is_gb:
        i, j, r = report.failing_spair
        print(f"verify: FAILED S-pair ({i}, {j}) leaves {r}", file=out)
        return EXIT_MISMATCH
    expected = oracle.buchberger(inputs)
    if not oracle.same_ideal_basis(report.reduced_basis, expected):
        print("verify: FAILED reduced basis differs from Buchberger", file=out)
        return EXIT_MISMATCH
    print("verify: ok", file=out)
    return EXIT_OK


def _cmd_run(args, out) -> int:
    pf = _read_problem(args.file)
    if args.algorithm == "buchberger":
        basis = oracle.buchberger(pf.polys)
        for f in basis:
            print(f, file=out)
        return _verify(basis, pf.polys, out) if args.verify else EXIT_OK
    res = engine.run(args.algorithm, pf.polys, module_order=args.module_order,
                     mode=args.mode, criteria=args.criteria == "on",
                     insert=args.insert, trace=args.trace)
    for line in res.trace:
        print(line, file=out)
    shown = oracle.reduce_basis(res.basis) if args.reduce else res.sorted_basis()
    for f in shown:
        print(f, file=out)
    if args.stats:
        print(res.stats.format(verify=res.mode == "verify"), file=out)
    if args.verify:
        return _verify(res.basis, pf.polys, out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    pf = _read_problem(args.file)
    basis = _read_basis(args.basis, pf)
    return _verify(basis, pf.polys, out)


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            out.write(format_problem(gen_benchmark(args.family, args.n)))
            return EXIT_OK
        if args.command == "check":
            return _cmd_check(args, out)
        return _cmd_run(args, out)
    except ProblemParseError as exc:
        print(f"siggb: parse error: {exc}", file=sys.stderr)
    except (ConfigurationError, ValueError, OSError) as exc:
        print(f"siggb: {exc}", file=sys.stderr)
    return EXIT_USAGE
