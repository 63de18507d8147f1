"""``css``: validate, classify, combine and compare cubic soft set documents.

Exit codes: 0 ok, 1 malformed input, 2 invariant violation or infeasible
request, 3 relation does not hold, 4 counterexamples found.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra
from .algebra import CombineKind, OrderKind, ProductKind
from .classify import Interpretation, TheoremId, classify
from .document import dump_json, dumps, load_cubic_soft_set
from .errors import CubicSoftSetError, MalformedDocument
from .verify import GridSpec, RandomSpec, interpretation_summary, run_all_interpretations, run_campaign

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_INVALID = 2
EXIT_FALSE = 3
EXIT_COUNTEREXAMPLE = 4

BINARY_OPS = {k.value: k for k in CombineKind} | {k.value: k for k in ProductKind}
OP_NAMES = list(BINARY_OPS) + ["complement", "star-swap"]


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # usage errors count as invalid requests, keeping exit codes in {0..4}
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _Failure(EXIT_INVALID, f"{path}: {e.strerror}") from None
    try:
        return load_cubic_soft_set(text)
    except json.JSONDecodeError as e:
        raise _Failure(EXIT_MALFORMED, f"{path}: malformed JSON: {e}") from None
    except MalformedDocument as e:
        raise _Failure(EXIT_MALFORMED, f"{path}: {e}") from None
    except CubicSoftSetError as e:
        raise _Failure(EXIT_INVALID, f"{path}: {type(e).__name__}: {e}") from None


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")


def cmd_validate(args) -> int:
    s = _load(args.file)
    print(f"ok: {len(s.universe)} elements, {len(s.params)} parameters")
    return EXIT_OK


def cmd_classify(args) -> int:
    s = _load(args.file)
    sys.stdout.write(dump_json(classify(s).to_json()))
    return EXIT_OK


def cmd_op(args) -> int:
    unary = args.name == "complement"
    if unary and args.b is not None:
        raise _Failure(EXIT_INVALID, "complement takes one operand")
    if not unary and args.b is None:
        raise _Failure(EXIT_INVALID, f"{args.name} takes two operands")
    a = _load(args.a)
    out = Path(args.output)
    if unary:
        _write(out, dumps(algebra.soft_complement(a)))
        return EXIT_OK
    b = _load(args.b)
    try:
        if args.name == "star-swap":
            fs, gs = algebra.star_swap(a, b)
            stem, suffix = out.with_suffix(""), out.suffix
            _write(Path(f"{stem}.star-a{suffix}"), dumps(fs))
            _write(Path(f"{stem}.star-b{suffix}"), dumps(gs))
            return EXIT_OK
        kind = BINARY_OPS[args.name]
        if isinstance(kind, CombineKind):
            result = algebra.soft_combine(kind, a, b)
        else:
            result = algebra.soft_product(kind, a, b)
    except CubicSoftSetError as e:
        raise _Failure(EXIT_INVALID, f"{type(e).__name__}: {e}") from None
    _write(out, dumps(result))
    return EXIT_OK


def cmd_cmp(args) -> int:
    a, b = _load(args.a), _load(args.b)
    try:
        if args.rel == "eq":
            holds = algebra.soft_equal(a, b)
        else:
            kind = OrderKind.P if args.rel == "p-sub" else OrderKind.R
            holds = algebra.soft_suborder(kind, a, b)
    except CubicSoftSetError as e:
        raise _Failure(EXIT_INVALID, f"{type(e).__name__}: {e}") from None
    print("true" if holds else "false")
    return EXIT_OK if holds else EXIT_FALSE


def cmd_verify(args) -> int:
    shape = dict(
        universe_size=args.universe,
        shared_params=args.params,
        left_only=args.left_only,
        right_only=args.right_only,
    )
    if args.grid is not None:
        mode = GridSpec(args.grid, **shape)
    else:
        if args.seed is None:
            raise _Failure(EXIT_INVALID, "--samples needs --seed")
        mode = RandomSpec(args.samples, args.seed, constrained=args.constrained, **shape)
    try:
        if args.interp == "all":
            reports = run_all_interpretations(args.theorem, mode, workers=args.workers)
            doc = interpretation_summary(reports)
            found = any(r.counterexample_count for r in reports.values())
        else:
            report = run_campaign(args.theorem, mode, args.interp, workers=args.workers)
            doc = report.to_json()
            found = report.counterexample_count > 0
    except CubicSoftSetError as e:
        raise _Failure(EXIT_INVALID, f"{type(e).__name__}: {e}") from None
    text = dump_json(doc)
    if args.output:
        _write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return EXIT_COUNTEREXAMPLE if found else EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _natural(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="css", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a document and report the first failing invariant")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="internal/external classification with witnesses")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("op", help="apply an operation and write the result")
    p.add_argument("name", choices=OP_NAMES)
    p.add_argument("a")
    p.add_argument("b", nargs="?")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("cmp", help="test equality or an order relation")
    p.add_argument("rel", choices=["eq", "p-sub", "r-sub"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_cmp)

    p = sub.add_parser("verify", help="run a theorem campaign")
    p.add_argument("theorem", choices=[t.value for t in TheoremId])
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--grid", type=_positive, metavar="K", help="exhaustive over the grid {0,1/K,...,1}")
    mode.add_argument("--samples", type=_positive, metavar="S", help="random instances on the 1/100 grid")
    p.add_argument("--seed", type=int, metavar="R")
    p.add_argument("--universe", type=_positive, default=1, metavar="N")
    p.add_argument("--params", type=_natural, default=1, metavar="M", help="shared parameters")
    p.add_argument("--left-only", type=_natural, default=0, help="parameters only the first operand has")
    p.add_argument("--right-only", type=_natural, default=0, help="parameters only the second operand has")
    p.add_argument("--constrained", action="store_true", help="reject samples failing the hypothesis")
    p.add_argument(
        "--interp",
        choices=[i.value for i in Interpretation] + ["all"],
        default=Interpretation.AS_WRITTEN.value,
    )
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Failure as e:
        print(f"css: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    raise SystemExit(main())
