"""skewlab command line: analyze, construct and sweep.

Exit codes: 0 success, 1 parse error, 2 precondition violated,
3 theorem/oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, apoly
from .central import YES
from .context import from_spec
from .errors import ParseError, PreconditionError
from .skew import parse_poly

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3


def _render(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))
            if v and nested:
                lines.append(f"{pad}{k}:")
                lines.append(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}")
    elif isinstance(obj, list):
        for item in obj:
            lines.append(f"{pad}- " + _render(item, indent + 1).lstrip())
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def _emit(obj, pretty: bool):
    print(_render(obj) if pretty else json.dumps(obj, indent=2))


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def cmd_analyze(args) -> int:
    ctx = from_spec(args.ring)
    f = parse_poly(ctx, args.poly)
    _emit(analysis.analyze(ctx, f), args.pretty)
    return EXIT_OK


def cmd_construct(args) -> int:
    ctx = from_spec(args.ring)
    b = ctx.parse_element(args.b)
    cs = [ctx.parse_element(c) for c in _split_top(args.cs)]
    f = apoly.construct_apoly(ctx, b, cs)
    report = analysis.analyze(ctx, f)
    out = {"poly": f.to_text(), "pretty": f.pretty(), "analysis": report}
    _emit(out, args.pretty)
    if report["apoly"]["is_apoly"] != YES:
        print("error: hypothesis 'hhat irreducible' fails for the constructed polynomial", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_sweep(args) -> int:
    ctx = from_spec(args.ring)
    if args.corpus:
        with open(args.corpus) as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        polys = [parse_poly(ctx, ln) for ln in lines]
        summary, _ = analysis.sweep_corpus(ctx, polys)
    else:
        if ctx.kind != "twisted":
            raise PreconditionError("finite K", "exhaustive sweep needs a twisted context; pass --corpus")
        summary, _ = analysis.sweep_twisted(ctx, args.max_degree, jobs=args.jobs)
    _emit(summary, args.pretty)
    if summary["mismatches"] or summary["invariant_failures"]:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, help="ring spec: inline JSON or path to a JSON file")
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")

    p = sub.add_parser("analyze", parents=[common], help="analyse one polynomial")
    p.add_argument("--poly", required=True, help='coefficients lowest first, e.g. "[1, 0, 1]"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="build prod (t - Omega_{c_i}(b)) and analyse it")
    p.add_argument("--b", required=True)
    p.add_argument("--cs", required=True, help="comma-separated c_1,...,c_m with c_m = 1")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive theorem-vs-oracle sweep")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--corpus", help="file with one polynomial per line (required for differential rings)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(json.dumps({"error": "parse", "message": exc.message, "position": exc.position,
                          "text": exc.text}), file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(json.dumps({"error": "precondition", "hypothesis": exc.hypothesis, "message": str(exc)}),
              file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": "parse", "message": str(exc)}), file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
