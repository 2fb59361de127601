"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .bs import BsPresentation, ResourceLimitError, equal, pinch_reduce
from .classify import classify
from .homs import PreconditionError, eval_word_perm, format_cycles, format_perm, separate
from .quandles import (
    bounded_closure_bs,
    check_axioms,
    conj_quandle,
    cyclic_group,
    dehn_quandle_finite,
    read_quandle,
    symmetric_group,
    trivial_quandle,
    write_quandle,
)
from .witnesses import conj_z_demo, verify_case1_witness, verify_case2_witness
from .words import parse_word, render_word

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _presentation(args) -> BsPresentation:
    if args.m is None or args.n is None:
        raise UsageError("-m and -n are required")
    if args.m == 0 or args.n == 0:
        raise UsageError("m and n must be nonzero")
    return BsPresentation(args.m, args.n)


def _add_mn(sub: argparse.ArgumentParser, required: bool = True) -> None:
    sub.add_argument("-m", type=int, required=required)
    sub.add_argument("-n", type=int, required=required)


def cmd_reduce(args, out) -> int:
    p = _presentation(args)
    if args.file:
        with open(args.file) as fh:
            texts = [ln for ln in fh.read().splitlines() if ln.strip()]
    elif args.word is not None:
        texts = [args.word]
    else:
        raise UsageError("give a word or --file")
    for text in texts:
        print(render_word(pinch_reduce(parse_word(text), p, limit=args.limit)), file=out)
    return EXIT_OK


def cmd_eq(args, out) -> int:
    p = _presentation(args)
    same = equal(parse_word(args.word1), parse_word(args.word2), p, limit=args.limit)
    print("equal" if same else "not-equal", file=out)
    return EXIT_OK if same else EXIT_NEGATIVE


def cmd_classify(args, out) -> int:
    if args.m == 0 or args.n == 0:
        raise UsageError("m and n must be nonzero")
    print(classify(args.m, args.n).render(), file=out)
    return EXIT_OK


def cmd_separate(args, out) -> int:
    p = _presentation(args)
    u, v = parse_word(args.word1), parse_word(args.word2)
    pair = separate(u, v, p, args.dmax)
    if pair is None:
        print(f"none found up to degree {args.dmax}", file=out)
        return EXIT_NEGATIVE
    print(pair.render(), file=out)
    print(f"alpha_cycles={format_cycles(pair.alpha)}", file=out)
    print(f"beta_cycles={format_cycles(pair.beta)}", file=out)
    print(f"image_1={format_perm(eval_word_perm(u, pair.alpha, pair.beta))}", file=out)
    print(f"image_2={format_perm(eval_word_perm(v, pair.alpha, pair.beta))}", file=out)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    if args.case == "conjz":
        if args.N is None:
            raise UsageError("conjz needs -N")
        report = conj_z_demo(args.N)
        print(report.render(), file=out)
        return EXIT_OK if report.verified else EXIT_NEGATIVE
    p = _presentation(args)
    verify = verify_case1_witness if args.case == "case1" else verify_case2_witness
    report = verify(p, consistency_depth=args.depth)
    print(report.render(), file=out)
    ok = report.verified and (not args.strict or not report.consistency_failures)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _open_input(path: str):
    return sys.stdin if path == "-" else open(path)


def cmd_axioms(args, out) -> int:
    stream = _open_input(args.file)
    try:
        q = read_quandle(stream)
    finally:
        if stream is not sys.stdin:
            stream.close()
    report = check_axioms(q)
    print(report.render(), file=out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_genquandle(args, out) -> int:
    kind, params = args.kind, args.params
    if kind == "trivial":
        if len(params) != 1:
            raise UsageError("genquandle trivial K")
        q = trivial_quandle(params[0])
    elif kind == "conj-cyclic":
        if len(params) != 1 or params[0] < 1:
            raise UsageError("genquandle conj-cyclic K")
        q = conj_quandle(cyclic_group(params[0]))
    elif kind == "conj-sym":
        if len(params) != 1 or params[0] < 1:
            raise UsageError("genquandle conj-sym D")
        q = conj_quandle(symmetric_group(params[0]))
    elif kind == "dehn-sym":
        if len(params) < 2 or params[0] < 1:
            raise UsageError("genquandle dehn-sym D INDEX [INDEX ...]")
        g = symmetric_group(params[0])
        if any(not 0 <= i < g.size for i in params[1:]):
            raise UsageError("element index out of range")
        q, _ = dehn_quandle_finite(g, params[1:])
    else:
        raise UsageError(f"unknown quandle kind {kind!r}")
    out.write(write_quandle(q))
    return EXIT_OK


def cmd_closure(args, out) -> int:
    p = _presentation(args)
    gens = [parse_word(text) for text in args.generators]
    if not gens:
        raise UsageError("give at least one generator word")
    for w in bounded_closure_bs(p, gens, args.depth, max_elements=args.limit):
        print(render_word(w), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bsq", description="Conjugation quandles of Baumslag-Solitar groups.")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("reduce", help="pinch-reduce a word in BS(m,n)")
    _add_mn(sp)
    sp.add_argument("word", nargs="?")
    sp.add_argument("--file", help="read one word per line")
    sp.add_argument("--limit", type=int, default=2**62, help="exponent magnitude bound")
    sp.set_defaults(func=cmd_reduce)

    sp = subs.add_parser("eq", help="decide equality of two words in BS(m,n)")
    _add_mn(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.add_argument("--limit", type=int, default=2**62)
    sp.set_defaults(func=cmd_eq)

    sp = subs.add_parser("classify", help="residual finiteness / Hopf classification")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_classify)

    sp = subs.add_parser("separate", help="find a finite permutation quotient separating two words")
    _add_mn(sp)
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.add_argument("--dmax", type=int, default=5)
    sp.set_defaults(func=cmd_separate)

    sp = subs.add_parser("witness", help="verify an explicit endomorphism witness")
    sp.add_argument("case", choices=["case1", "case2", "conjz"])
    _add_mn(sp, required=False)
    sp.add_argument("-N", type=int)
    sp.add_argument("--depth", type=int, default=2, help="term depth of the consistency sample")
    sp.add_argument("--strict", action="store_true", help="also fail on consistency failures")
    sp.set_defaults(func=cmd_witness)

    sp = subs.add_parser("axioms", help="check the quandle axioms of a table file")
    sp.add_argument("file", help="quandle file, '-' for stdin")
    sp.set_defaults(func=cmd_axioms)

    sp = subs.add_parser("genquandle", help="write a quandle table")
    sp.add_argument("kind", choices=["trivial", "conj-cyclic", "conj-sym", "dehn-sym"])
    sp.add_argument("params", type=int, nargs="+")
    sp.set_defaults(func=cmd_genquandle)

    sp = subs.add_parser("closure", help="bounded quandle closure inside Conj(BS(m,n))")
    _add_mn(sp)
    sp.add_argument("generators", nargs="+")
    sp.add_argument("--depth", type=int, default=1)
    sp.add_argument("--limit", type=int, default=200_000, help="maximum number of elements")
    sp.set_defaults(func=cmd_closure)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, PreconditionError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
