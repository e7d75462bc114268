"""Command line interface.

Exit codes: 0 success, 2 invalid input or arguments, 3 resolution hit the
depth cap with singular leaves remaining, 4 a trivial (no-progress) blowup
step was encountered, which can only happen with --no-normalize.
"""

import argparse
import json
import sys

from .blowup import (
    blowup_charts,
    is_trivial_step,
    log_jacobian_ideal,
    newton_polyhedron,
)
from .errors import MalformedInputError, ToricError
from .io import (
    FORMATS,
    charts_payload,
    comparison_payload,
    ideal_payload,
    newton_payload,
    parse_input,
    problem_payload,
    semigroup_payload,
    serialize,
    suite_payload,
    tree_payload,
)
from .linalg import validate_characteristic
from .resolve import (
    DEPTH_CAPPED,
    TRIVIAL_STALL,
    compare_characteristics,
    resolve,
    surface_termination_suite,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DEPTH_CAPPED = 3
EXIT_TRIVIAL_STALL = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nashtoric",
        description="Nash blowups of affine toric varieties, computed combinatorially.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def with_input(p):
        p.add_argument(
            "input",
            nargs="?",
            default="-",
            help="path to a JSON problem document, or - for stdin (default)",
        )

    def with_format(p):
        p.add_argument(
            "--format",
            choices=FORMATS,
            default=None,
            help="output format (default: the document's format field)",
        )

    def with_char(p):
        p.add_argument(
            "--char",
            type=int,
            default=None,
            metavar="P",
            help="characteristic override, 0 or a prime",
        )

    def with_normalize(p):
        p.add_argument(
            "--no-normalize",
            action="store_true",
            help="skip saturation of the blowup charts",
        )

    p = sub.add_parser("check", help="validate a problem document and echo it")
    with_input(p)
    with_format(p)

    p = sub.add_parser("mingen", help="minimal generators of the semigroup")
    with_input(p)
    with_format(p)

    p = sub.add_parser("saturate", help="minimal generators of the saturation")
    with_input(p)
    with_format(p)

    p = sub.add_parser("logjac", help="logarithmic Jacobian ideal exponents mod p")
    with_input(p)
    with_format(p)
    with_char(p)

    p = sub.add_parser("newton", help="Newton polyhedron of the ideal")
    with_input(p)
    with_format(p)
    with_char(p)

    p = sub.add_parser("blowup", help="one Nash blowup step: the vertex charts")
    with_input(p)
    with_format(p)
    with_char(p)
    with_normalize(p)

    p = sub.add_parser("resolve", help="iterate Nash blowups into a resolution tree")
    with_input(p)
    with_format(p)
    with_char(p)
    with_normalize(p)
    p.add_argument("--max-depth", type=int, default=None, metavar="N")
    p.add_argument(
        "--parallel",
        action="store_true",
        help="expand sibling charts concurrently (same tree, byte-identical output)",
    )

    p = sub.add_parser("compare", help="Newton polyhedra across characteristics")
    with_input(p)
    with_format(p)
    p.add_argument(
        "--char",
        type=int,
        action="append",
        default=None,
        metavar="P",
        help="characteristic to include; repeat for several "
        "(default: 0 and the document's characteristic)",
    )

    p = sub.add_parser("suite", help="random normal-surface termination suite")
    with_format(p)
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--count", type=int, default=20, metavar="N")
    p.add_argument("--entry-bound", type=int, default=50, metavar="N")
    p.add_argument(
        "--char",
        type=int,
        action="append",
        default=None,
        metavar="P",
        help="characteristic to test; repeat for several (default: 0 2 3 5)",
    )
    p.add_argument("--max-depth", type=int, default=64, metavar="N")

    return parser


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from None


def _dispatch(args) -> int:
    if args.command == "suite":
        if args.entry_bound < 1:
            raise ValueError("entry bound must be at least 1")
        chars = tuple(args.char) if args.char else (0, 2, 3, 5)
        summary = surface_termination_suite(
            args.seed,
            args.count,
            entry_bound=args.entry_bound,
            characteristics=chars,
            max_depth=args.max_depth,
        )
        print(serialize(suite_payload(summary), args.format or "json"))
        return EXIT_OK

    spec = parse_input(_read_document(args.input))
    fmt = args.format or spec.format

    if args.command == "check":
        print(serialize(problem_payload(spec), fmt))
        return EXIT_OK

    S = spec.semigroup()
    if args.command == "mingen":
        print(serialize(semigroup_payload(S), fmt))
        return EXIT_OK
    if args.command == "saturate":
        print(serialize(semigroup_payload(S.saturate()), fmt))
        return EXIT_OK
    if args.command == "compare":
        if args.char:
            chars = tuple(args.char)
        elif spec.characteristic:
            chars = (0, spec.characteristic)
        else:
            chars = (0, 2, 3, 5)
        print(serialize(comparison_payload(compare_characteristics(S, chars)), fmt))
        return EXIT_OK

    ch = spec.characteristic if args.char is None else validate_characteristic(args.char)
    if args.command == "logjac":
        print(serialize(ideal_payload(log_jacobian_ideal(S, ch)), fmt))
        return EXIT_OK
    if args.command == "newton":
        N = newton_polyhedron(log_jacobian_ideal(S, ch))
        print(serialize(newton_payload(N), fmt))
        return EXIT_OK

    normalize = spec.normalize and not args.no_normalize
    if args.command == "blowup":
        N = newton_polyhedron(log_jacobian_ideal(S, ch))
        charts = blowup_charts(N, normalize)
        print(serialize(charts_payload(charts, characteristic=ch), fmt))
        if not normalize and is_trivial_step(N, charts):
            return EXIT_TRIVIAL_STALL
        return EXIT_OK

    assert args.command == "resolve"
    max_depth = spec.max_depth if args.max_depth is None else args.max_depth
    tree = resolve(S, ch, normalize=normalize, max_depth=max_depth, parallel=args.parallel)
    print(serialize(tree_payload(tree), fmt))
    statuses = tree.statuses()
    if TRIVIAL_STALL in statuses:
        return EXIT_TRIVIAL_STALL
    if DEPTH_CAPPED in statuses:
        return EXIT_DEPTH_CAPPED
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except ToricError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": exc.message}) + "\n")
        return EXIT_INVALID
    except ValueError as exc:
        sys.stderr.write(json.dumps({"error": "invalid-argument", "message": str(exc)}) + "\n")
        return EXIT_INVALID


def main_entry():
    raise SystemExit(main(sys.argv[1:]))
