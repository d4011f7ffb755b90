"""Command line entry point: classify, verify, exact, check, gen.

Exit codes: 0 success, 1 verification failed, 2 bad input, 3 disconnected
graph, 4 search budget exhausted, 5 cross-check mismatches.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import TextIO

from .characterize import class_label, rc_characterize
from .engine import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    EdgeColoring,
    Exact,
    is_rainbow_connected,
    rc_band,
    rc_exact,
)
from .genlab import (
    InfeasibleParams,
    TooLarge,
    check_theorems,
    gen_m_class,
    gen_random_unicyclic,
    gen_theta,
)
from .graph import Disconnected, Graph, GraphError, build_graph, cycle_graph, is_connected

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "class", "rc"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 0},
        "class": {
            "type": "string",
            "pattern": (
                r"^(Tree|CompleteGraph|CycleExact\([0-9]+\)|G1|G2|H1|H2|H3|J1|J2|L1|L2|"
                r"Girth7Cycle|Girth7Other|GirthGe8Unicyclic|MClass|Theta5|ThetaLarge|"
                r"K4Block|K4eNonM|MultiBlock|OtherBlock)$"
            ),
        },
        "rc": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["exact"],
                    "additionalProperties": False,
                    "properties": {"exact": {"type": "integer"}, "reason": {"type": "string"}},
                },
                {
                    "type": "object",
                    "required": ["lower", "upper"],
                    "additionalProperties": False,
                    "properties": {
                        "lower": {"type": "integer"},
                        "upper": {"type": "integer"},
                        "lower_reason": {"type": "string"},
                        "upper_reason": {"type": "string"},
                    },
                },
            ]
        },
        "certificate": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
}


class FormatError(ValueError):
    pass


# -- file formats ---------------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}, expected 'n m'") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}")
    pairs = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad edge line {ln!r}") from None
    try:
        return build_graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def write_graph(g: Graph, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str, m: int | None = None) -> EdgeColoring:
    """Read one color id per line; ids are relabelled onto ``1..k``."""
    lines = _content_lines(text)
    try:
        ids = [int(x) for x in lines]
    except ValueError:
        raise FormatError("coloring lines must be integers") from None
    if any(c < 1 for c in ids):
        raise FormatError("color ids must be positive")
    if m is not None and len(ids) != m:
        raise FormatError(f"coloring has {len(ids)} lines, graph has {m} edges")
    return EdgeColoring.normalized(ids)


def write_coloring(c: EdgeColoring) -> str:
    return "".join(f"{x}\n" for x in c.colors)


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(str(exc)) from exc
    return parse_graph(text)


# -- commands --------------------------------------------------------------------

def classify_report(g: Graph, with_certificate: bool = False) -> dict:
    label = class_label(g)
    result = rc_characterize(g)
    report = {"n": g.n, "m": g.m, "class": str(label)}
    if isinstance(result, Exact):
        report["rc"] = {"exact": result.value, "reason": result.reason}
        if with_certificate:
            report["certificate"] = list(result.certificate.colors)
    else:
        report["rc"] = {
            "lower": result.lower,
            "upper": result.upper,
            "lower_reason": result.lower_reason,
            "upper_reason": result.upper_reason,
        }
    return report


def cmd_classify(args, out: TextIO) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g) or g.n < 2:
        print("error: graph must be connected with at least two vertices", file=sys.stderr)
        return EXIT_DISCONNECTED
    report = classify_report(g, args.certificate)
    if args.json:
        json.dump(report, out, indent=2)
        out.write("\n")
        return EXIT_OK
    out.write(f"n {report['n']} m {report['m']}\n")
    out.write(f"class {report['class']}\n")
    rc = report["rc"]
    if "exact" in rc:
        out.write(f"rc {rc['exact']}  ({rc['reason']})\n")
    else:
        out.write(f"rc in [{rc['lower']}, {rc['upper']}]\n")
        out.write(f"  lower: {rc['lower_reason']}\n  upper: {rc['upper_reason']}\n")
    if "certificate" in report:
        out.write(write_coloring(EdgeColoring(tuple(report["certificate"]))))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    g = _load_graph(args.graph)
    try:
        text = Path(args.coloring).read_text()
    except OSError as exc:
        raise FormatError(str(exc)) from exc
    c = parse_coloring(text, g.m)
    if not is_connected(g):
        return EXIT_DISCONNECTED
    verdict = is_rainbow_connected(g, c)
    if verdict:
        out.write("RAINBOW-CONNECTED\n")
        return EXIT_OK
    u, v = verdict.witness
    out.write(f"FAIL {u} {v}\n")
    return EXIT_FAIL


def cmd_exact(args, out: TextIO) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g) or g.n < 2:
        return EXIT_DISCONNECTED
    if args.band:
        ks = [k for k in (g.m - 2, g.m - 3, g.m - 4) if k >= 1]
        feas = rc_band(g, ks, args.budget)
        for k in sorted(feas, reverse=True):
            out.write(f"k {k} {'feasible' if feas[k] is not None else 'infeasible'}\n")
        return EXIT_OK
    result = rc_exact(g, args.budget)
    out.write(f"rc {result.value}\n")
    out.write(write_coloring(result.certificate))
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    report = check_theorems(args.max_n, args.budget)
    payload = json.dumps(report.to_json(), indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(payload)
    else:
        out.write(payload)
    return EXIT_OK if report.success else EXIT_MISMATCH


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise InfeasibleParams(f"--type {args.type} needs {', '.join(missing)}")


def cmd_gen(args, out: TextIO) -> int:
    if args.type == "m-class":
        g = gen_m_class(args.p2 or 0, args.p4 or 0)
        comment = f"K4-e with paths {args.p2 or 0}, {args.p4 or 0}"
    elif args.type == "unicyclic":
        _require(args, "n", "girth")
        g = gen_random_unicyclic(args.seed, args.n, args.girth)
        comment = f"random unicyclic seed={args.seed} n={args.n} girth={args.girth}"
    elif args.type == "cycle":
        _require(args, "n")
        if args.n < 3:
            raise InfeasibleParams("a cycle needs n >= 3")
        g = cycle_graph(args.n)
        comment = f"C{args.n}"
    else:
        _require(args, "a", "b", "c")
        g = gen_theta(args.a, args.b, args.c)
        comment = f"theta {args.a},{args.b},{args.c}"
    text = write_graph(g, comment)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowrc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class label and rc value or bounds")
    p.add_argument("graph")
    p.add_argument("--certificate", action="store_true", help="also print the certificate coloring")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check that a coloring is rainbow connected")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="rc by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--band", action="store_true", help="only test k in {m-2, m-3, m-4}")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("check", help="cross-check the classifier against exhaustive search")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a generated graph file")
    p.add_argument("--type", choices=("m-class", "unicyclic", "cycle", "theta"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--girth", type=int)
    p.add_argument("--p2", type=int)
    p.add_argument("--p4", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (FormatError, InfeasibleParams, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Disconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
