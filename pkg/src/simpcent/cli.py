"""Command-line interface.

Every subcommand reads a complex file, computes, and writes one deterministic
text blob to stdout or ``--out``.  Failures print a single JSON line on
stderr and exit with 2 (bad arguments or values), 3 (unreadable or malformed
input file), or 4 (an oracle guard refusal).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import adjacency, centrality, io_formats, oracle, spectral, walks
from .adjacency import DegreeQuery
from .errors import (
    ArgumentError,
    EmptyComplexError,
    GuardError,
    MembershipError,
    ParseError,
    UndefinedValueError,
)
from .generate import GeneratorConfig, generate_complex

KIND_TO_FAMILY = {
    "lower": "lower",
    "strict-lower": "strict_lower",
    "upper": "upper",
    "strict-upper": "strict_upper",
    "adjacency": "adjacency",
    "maximal-adjacency": "maximal_adjacency",
    "two-param": "two_param",
    "maximal": "maximal",
}


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=io_formats.FORMATS, default="json", help="output format"
    )
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="simpcent",
        description="Adjacency, Laplacian, walk, and centrality computations "
        "on finite simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="summarize a complex file")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("degrees", parents=[common], help="degree family report")
    p.add_argument("file")
    p.add_argument("--q", type=int, required=True, help="simplex dimension")
    p.add_argument("--p", type=int, help="face/adjacency level")
    p.add_argument("--h", type=int, help="dimension gap")
    p.add_argument("--kind", choices=sorted(KIND_TO_FAMILY), required=True)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("laplacian", parents=[common], help="multi-parameter laplacian")
    p.add_argument("file")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--hp", type=int, required=True)
    p.add_argument("--part", choices=("up", "down", "total"), default="total")
    p.set_defaults(func=cmd_laplacian)

    p = sub.add_parser("centrality", parents=[common], help="centrality report")
    p.add_argument("file")
    p.add_argument(
        "--measure",
        choices=(
            "degree",
            "eigenvector",
            "closeness",
            "betweenness",
            "clustering",
            "average",
        ),
        required=True,
    )
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--variant")
    p.set_defaults(func=cmd_centrality)

    p = sub.add_parser("components", parents=[common], help="p-connected components")
    p.add_argument("file")
    p.add_argument("--p", type=int, required=True)
    p.add_argument(
        "--semantics", choices=("at-least", "exact"), default="at-least"
    )
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-check")
    p.add_argument("file")
    p.add_argument(
        "--max-simplices",
        type=int,
        help="cap per-simplex sweeps at this many sampled simplices",
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="draw a random complex")
    p.add_argument("--model", required=True, help='"pure:D" or "flag"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prob", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="FILE", help="complex file to write")
    p.set_defaults(func=cmd_gen)

    return parser


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_info(args) -> str:
    c = io_formats.load_complex(args.file)
    return io_formats.emit_info(c, args.format)


def _degree_query(args) -> DegreeQuery:
    family = KIND_TO_FAMILY[args.kind]
    if family in ("lower", "strict_lower"):
        if args.p is None:
            raise ArgumentError(f"--kind {args.kind} needs --p")
        return DegreeQuery(family, p=args.p, h=args.h)
    if family in ("upper", "strict_upper"):
        # --p picks the shared-coface dimension, --h the incidence gap
        if (args.p is None) == (args.h is None):
            raise ArgumentError(f"--kind {args.kind} needs exactly one of --p, --h")
        if args.p is not None:
            return DegreeQuery(family, p=args.p)
        incident = "upper_incident" if family == "upper" else "strict_upper_incident"
        return DegreeQuery(incident, h=args.h)
    if family in ("adjacency", "maximal_adjacency"):
        if args.p is None or args.h is not None:
            raise ArgumentError(f"--kind {args.kind} needs --p and no --h")
        return DegreeQuery(family, p=args.p)
    if family == "two_param":
        # p1 = q + h names the upper part, p2 = --p the adjacency part
        if args.p is None or args.h is None:
            raise ArgumentError("--kind two-param needs both --p and --h")
        return DegreeQuery(family, p=args.q + args.h, p2=args.p)
    if args.p is not None or args.h is not None:
        raise ArgumentError("--kind maximal takes neither --p nor --h")
    return DegreeQuery("maximal")


def cmd_degrees(args) -> str:
    c = io_formats.load_complex(args.file)
    query = _degree_query(args)
    report = adjacency.degree_report(c, args.q, query)
    params = {"q": args.q, "kind": args.kind}
    if args.p is not None:
        params["p"] = args.p
    if args.h is not None:
        params["h"] = args.h
    shaped = centrality.CentralityReport(
        measure="degrees", params=params, values=report.values
    )
    return io_formats.emit_report(shaped, c, args.format)


def cmd_laplacian(args) -> str:
    c = io_formats.load_complex(args.file)
    bundle = spectral.laplacian(c, args.q, args.h, args.hp)
    mat = {"up": bundle.up, "down": bundle.down, "total": bundle.total}[args.part]
    labels = [c.label(s) for s in c.by_dim[args.q]]
    params = {"q": args.q, "h": args.h, "hp": args.hp, "part": args.part}
    return io_formats.emit_matrix("laplacian", params, mat, labels, c, args.format)


def cmd_centrality(args) -> str:
    c = io_formats.load_complex(args.file)
    variant = args.variant.replace("-", "_") if args.variant else None
    report = centrality.centrality_report(
        c,
        args.measure,
        q=args.q,
        p=args.p,
        h=args.h,
        variant=variant,
    )
    return io_formats.emit_report(report, c, args.format)


def cmd_components(args) -> str:
    c = io_formats.load_complex(args.file)
    semantics = args.semantics.replace("-", "_")
    g = walks.build_nearness_graph(c)
    part = walks.components(g, args.p, semantics)
    return io_formats.emit_components(part, c, args.format)


def cmd_oracle(args) -> str:
    c = io_formats.load_complex(args.file)
    diff = oracle.diff_all(c, max_simplices=args.max_simplices)
    return io_formats.emit_oracle(diff, c, args.format)


def cmd_gen(args) -> str:
    cfg = GeneratorConfig(model=args.model, n=args.n, prob=args.prob, seed=args.seed)
    c = generate_complex(cfg)
    text = io_formats.emit_complex(c, metadata=cfg.metadata())
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return io_formats.emit_info(c, args.format)
    return text


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _fail(exc: Exception, code: int) -> int:
    line = json.dumps(
        {"error": type(exc).__name__, "message": str(exc)}, ensure_ascii=True
    )
    print(line, file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (ParseError, EmptyComplexError) as exc:
        return _fail(exc, 3)
    except GuardError as exc:
        return _fail(exc, 4)
    except (ArgumentError, UndefinedValueError, MembershipError) as exc:
        return _fail(exc, 2)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
