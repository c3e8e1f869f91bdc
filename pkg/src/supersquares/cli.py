"""Command-line interface.

Exit codes: 0 success / property holds, 1 property fails, 2 usage error,
3 data error (malformed input, non-basis, determinant not 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import enumeration as en
from .constructions import basis_fan, complete_set_to_squares, example_set_d4, type_I, type_II
from .errors import InvalidArgument, UnsupportedOrder
from .finite_field import Field, field_of_order, make_field
from .io import DocumentError, dumps, load_squares, to_document
from .squares import Square, classify, first_collision, render
from .vector_space import parse_point

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3

CONSTRUCTIONS = {
    "fan": basis_fan,
    "example": example_set_d4,
    "typeI": type_I,
    "typeII": type_II,
}


class UsageError(Exception):
    pass


def _field_from_d(d: int) -> Field:
    try:
        return field_of_order(d)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from None


def _table(F: Field, op) -> list[str]:
    names = [F.format(a) for a in F.order]
    w = max(len(s) for s in names)
    head = " " * w + " | " + " ".join(s.rjust(w) for s in names)
    rows = [head, "-" * len(head)]
    for a in F.order:
        rows.append(F.format(a).rjust(w) + " | " + " ".join(F.format(op(a, b)).rjust(w) for b in F.order))
    return rows


def cmd_field(args) -> int:
    try:
        F = make_field(args.p, args.n)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from None
    out = [
        f"GF({F.d}) = Z_{F.p}[x] / ({F.modulus_str()})",
        f"primitive element m: index {F.primitive}, coefficients {F.coeffs(F.primitive)}",
        "elements: " + ", ".join(F.format(a) for a in F.order),
        "",
        "addition:",
        *_table(F, F.add),
        "",
        "multiplication:",
        *_table(F, F.mul),
        "",
        "trace:",
        *(f"  tr({F.format(a)}) = {F.format(F.trace(a))}" for a in F.order),
        "",
        "K = {" + ", ".join(F.format(a) for a in F.order if a in F.trace_zero) + "}",
        f"|K| = {len(F.trace_zero)}",
    ]
    print("\n".join(out))
    return EXIT_OK


def _square_header(letter: str, S: Square) -> str:
    tax = classify(S)
    gen = tax.generating_subgroup
    text = f"{letter}) {tax.describe()}"
    if gen is not None and hasattr(gen, "format"):
        text += f"; generating subgroup {gen.format()}"
    return text


def cmd_construct(args) -> int:
    F = _field_from_d(args.d)
    try:
        v1 = parse_point(F, args.v1)
        v2 = parse_point(F, args.v2)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from None
    try:
        cs = CONSTRUCTIONS[args.type](F, v1, v2)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    squares = complete_set_to_squares(cs)
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, S in enumerate(squares):
            (out / f"square_{i + 1}.json").write_text(dumps(to_document(S)))
    if args.format == "json":
        sys.stdout.write(dumps([to_document(S) for S in squares]))
    else:
        letters = "abcdefghijklmnopqrstuvwxyz"
        chunks = [
            _square_header(letters[i % 26], S) + "\n" + render(S, args.origin, args.transpose)
            for i, S in enumerate(squares)
        ]
        print("\n\n".join(chunks))
    return EXIT_OK


def _load_all(paths) -> list[Square]:
    squares = []
    for p in paths:
        squares.extend(load_squares(p))
    return squares


def cmd_check(args) -> int:
    squares = _load_all(args.files)
    if len(squares) < 2:
        raise UsageError("check needs at least two squares")
    for i in range(len(squares)):
        for j in range(i + 1, len(squares)):
            try:
                hit = first_collision(squares[i], squares[j])
            except InvalidArgument as exc:
                raise DocumentError(str(exc)) from None
            if hit is not None:
                a, b, pair = hit
                g = squares[i].group
                cells = [f"({g.format(c[0])},{g.format(c[1])})" for c in (a, b)]
                print(f"not orthogonal: squares {i + 1} and {j + 1}; "
                      f"cells {cells[0]} and {cells[1]} both carry label pair {pair}")
                return EXIT_FALSE
    print(f"mutually orthogonal: {len(squares)} squares")
    return EXIT_OK


def cmd_classify(args) -> int:
    for S in load_squares(args.file):
        tax = classify(S)
        print(tax.describe())
        gen = tax.generating_subgroup
        if gen is not None:
            text = gen.format() if hasattr(gen, "format") else str(sorted(gen))
            print(f"  generating subgroup: {text}")
    return EXIT_OK


def cmd_render(args) -> int:
    squares = load_squares(args.file)
    print("\n\n".join(render(S, args.origin, args.transpose) for S in squares))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    F = _field_from_d(args.d)
    try:
        report = en.enumerate_report(
            F, args.target,
            extraordinary_only=args.extraordinary,
            jobs=args.jobs,
            include_items=args.list and not args.count_only,
        )
    except UnsupportedOrder as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(report.to_dict(timing=not args.no_timing), sort_keys=True))
    return EXIT_OK


def cmd_verify(args) -> int:
    F = _field_from_d(args.d)
    try:
        if args.theorem == "4.3":
            if F.n != 1:
                raise UnsupportedOrder("this check needs a prime order d")
            report = en.verify_prop_4_3(F.p)
        elif args.theorem == "3.3":
            report = en.verify_prop_3_3(F)
        elif args.theorem == "3.5b":
            report = en.verify_prop_3_5b(F)
        elif args.theorem == "4.7":
            report = en.verify_prop_4_7(F)
        elif args.theorem == "4.8":
            report = en.verify_lemma_4_8(F)
        else:
            report = en.verify_theorem_4_13(F)
    except UnsupportedOrder as exc:
        raise UsageError(str(exc)) from None
    print(report.summary())
    if args.theorem == "3.5b":
        print(f"max = {report.details['max']} = d+1" if report.passed else f"max = {report.details['max']}")
    for k, v in report.details.items():
        if isinstance(v, dict):
            print(f"{k}: {json.dumps(v, sort_keys=True)}")
    for ce in report.counterexamples:
        print(f"counterexample: {ce}")
    return EXIT_OK if report.passed else EXIT_FALSE


def _jobs_default() -> int:
    try:
        return max(1, int(os.environ.get("SSQ_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supersquares", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print tables for GF(p^n)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("construct", help="build a complete set of supersquares")
    p.add_argument("--type", choices=sorted(CONSTRUCTIONS), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--v1", default="1,0", help="point as x,y in element syntax, e.g. 1,m^2")
    p.add_argument("--v2", default="0,1")
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.add_argument("--origin", choices=["bottom", "top"], default="bottom")
    p.add_argument("--transpose", action="store_true", help="draw x along columns")
    p.add_argument("--output-dir", help="also write one SquareDocument per square here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test mutual orthogonality of squares")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="report Latin / supersquare / extraordinary flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("render", help="print squares as label grids")
    p.add_argument("file")
    p.add_argument("--origin", choices=["bottom", "top"], default="bottom")
    p.add_argument("--transpose", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("enumerate", help="exhaustive enumeration report (JSON)")
    p.add_argument("target", choices=["subgroups", "extraordinary", "complete-sets"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--extraordinary", action="store_true", help="restrict complete sets to extraordinary subgroups")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--list", action="store_true", help="include the full listing")
    p.add_argument("--jobs", type=int, default=_jobs_default())
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="machine-check a theorem exhaustively")
    p.add_argument("--theorem", choices=["3.3", "3.5b", "4.3", "4.7", "4.8", "4.13"], required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
