"""Command-line front end.

One command per invocation; every command takes ``--json`` for a
machine-readable document with the same values as the text output.
Exit codes: 0 success, 1 failed check (e.g. inconsistent logos
declarations), 2 usage or parse error.  All numbers are exact integers.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .approximants import convergents
from .dialectic import dialectic_number_seq
from .division import check_logos, parse_tree, render_tree
from .expansion import DEFAULT_MAX_STEPS, euclid_anth, proportion_eq, surd_anth
from .surds import parse_surd

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _document(command: str, inputs: dict, result: dict) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": __version__,
    }


def _emit(args: argparse.Namespace, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _cmd_gcd(args: argparse.Namespace) -> int:
    quotients, gcd = euclid_anth(args.a, args.b)
    doc = _document(
        "gcd",
        {"a": args.a, "b": args.b},
        {"quotients": quotients, "gcd": gcd},
    )
    _emit(args, doc, [
        "quotients: " + " ".join(map(str, quotients)),
        f"gcd: {gcd}",
    ])
    return EXIT_OK


def _expansion_payload(expansion, trace) -> dict:
    return {
        "kind": expansion.kind,
        "preperiod": list(expansion.preperiod),
        "period": list(expansion.period),
        "repeat_at": list(trace.repeat_at) if trace.repeat_at else None,
        "commensurable": expansion.is_finite,
    }


def _expansion_lines(expansion, trace) -> list[str]:
    lines = []
    if expansion.is_finite:
        lines.append("quotients: " + " ".join(map(str, expansion.preperiod)))
    else:
        lines.append("preperiod: " + " ".join(map(str, expansion.preperiod)))
        lines.append("period: " + " ".join(map(str, expansion.period)))
        m, n = trace.repeat_at
        lines.append(f"repeat: states {m} and {n} coincide")
    lines.append(
        "commensurable: " + ("yes" if expansion.is_finite else "no")
    )
    return lines


def _cmd_expand(args: argparse.Namespace) -> int:
    value = parse_surd(args.value)
    expansion, trace = surd_anth(value, max_steps=args.max_steps)
    doc = _document("expand", {"value": args.value}, _expansion_payload(expansion, trace))
    _emit(args, doc, [f"value: {value}"] + _expansion_lines(expansion, trace))
    return EXIT_OK


def _cmd_prop(args: argparse.Namespace) -> int:
    a, b = parse_surd(args.a), parse_surd(args.b)
    c, d = parse_surd(args.c), parse_surd(args.d)
    equal = proportion_eq(a, b, c, d)
    doc = _document(
        "prop",
        {"a": args.a, "b": args.b, "c": args.c, "d": args.d},
        {"equal": equal},
    )
    _emit(args, doc, ["equal: " + ("yes" if equal else "no")])
    return EXIT_OK


def _cmd_convergents(args: argparse.Namespace) -> int:
    value = parse_surd(args.value)
    expansion, _ = surd_anth(value, max_steps=args.max_steps)
    convs = convergents(expansion, args.count)
    doc = _document(
        "convergents",
        {"value": args.value, "count": args.count},
        {"convergents": [{"p": c.p, "q": c.q, "index": c.index} for c in convs]},
    )
    _emit(args, doc, [f"{c.p}/{c.q}" for c in convs])
    return EXIT_OK


def _cmd_dialectic(args: argparse.Namespace) -> int:
    cycle = args.cycle or []
    number = dialectic_number_seq(args.terms, cycle, args.scale)
    doc = _document(
        "dialectic",
        {"terms": args.terms, "cycle": cycle, "scale": args.scale},
        {"dialectic_number": number},
    )
    _emit(args, doc, [f"dialectic_number: {number}"])
    return EXIT_OK


def _cmd_tree(args: argparse.Namespace) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    tree = parse_tree(text)
    if args.tree_command == "fmt":
        doc = _document("tree fmt", {"file": args.file}, {"text": render_tree(tree)})
        _emit(args, doc, [render_tree(tree).rstrip("\n")])
        return EXIT_OK

    report = check_logos(tree)
    doc = _document("tree check", {"file": args.file}, report.to_dict())
    lines = [
        f"tree: {tree.name}",
        f"steps: {tree.step_count}",
        "valid: " + ("yes" if report.valid else "no"),
        f"period: {report.period if report.period is not None else '-'}",
        f"declarations: {len(report.declarations)}",
        f"dialectic_number: {report.dialectic_number}",
    ]
    lines += [f"error: {e}" for e in report.errors]
    _emit(args, doc, lines)
    return EXIT_OK if report.valid else EXIT_CHECK_FAILED


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anthy",
        description="Exact anthyphairesis (continued fractions) over naturals and quadratic surds.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument(
        "--max-steps",
        type=_positive_int,
        default=DEFAULT_MAX_STEPS,
        help="safety bound on expansion iterations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gcd", parents=[common], help="quotient sequence and gcd of two naturals")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_gcd)

    p = sub.add_parser("expand", parents=[common], help="expand a surd literal")
    p.add_argument("value", help="e.g. 'sqrt(2)', '7/3', '(1+1*sqrt(5))/2'")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("prop", parents=[common], help="decide whether a/b = c/d")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("d")
    p.set_defaults(handler=_cmd_prop)

    p = sub.add_parser("convergents", parents=[common], help="convergents of a surd's expansion")
    p.add_argument("value")
    p.add_argument("count", type=_positive_int)
    p.set_defaults(handler=_cmd_convergents)

    p = sub.add_parser("dialectic", parents=[common], help="dialectic number of an integer sequence")
    p.add_argument("terms", type=_positive_int, nargs="*")
    p.add_argument("--cycle", type=_positive_int, nargs="+", help="cycle continuing the sequence")
    p.add_argument("--scale", type=_positive_int, default=1,
                   help="geometric factor applied to each cycle repetition")
    p.set_defaults(handler=_cmd_dialectic)

    p = sub.add_parser("tree", parents=[common], help="division-scheme files")
    tree_sub = p.add_subparsers(dest="tree_command", required=True)
    for name, help_text in (("check", "validate logos declarations"), ("fmt", "canonical formatting")):
        q = tree_sub.add_parser(name, parents=[common], help=help_text)
        q.add_argument("file")
        q.set_defaults(handler=_cmd_tree, tree_command=name)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize the rest
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


def entrypoint() -> None:
    raise SystemExit(main())
