"""Command-line interface: ``weylgrpd <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io
from .cartan import check_regular, symmetrize
from .errors import WeylGroupoidError
from .families import (
    FAMILIES,
    all_shuffles,
    labelled_engine_graph,
    shuffle_to_partition,
)
from .graph import DEFAULT_MAX_VERTICES, build_cartan_graph, verify_axioms
from .groupoid import DEFAULT_STATE_CAP, aut_order, coxeter_matrix, real_roots
from .oracle import verify_appendix

ENV_MAX_VERTICES = "WEYLGRPD_MAX_VERTICES"


class UsageError(Exception):
    pass


def _add_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--datum", metavar="PATH", help="JSON file with fields B and tau")
    _add_mn(p, required=False)
    p.add_argument("--max-vertices", type=int, default=None,
                   help=f"vertex cap (default ${ENV_MAX_VERTICES} or {DEFAULT_MAX_VERTICES})")


def _add_mn(p, required=True):
    p.add_argument("--m", type=int, required=required)
    p.add_argument("--n", type=int, required=required)


def _add_output(p, formats=("dot", "json"), default="dot"):
    p.add_argument("--format", choices=formats, default=default)
    p.add_argument("--output", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgrpd",
        description="Cartan graphs and Weyl groupoids of Lie superalgebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a Cartan graph and export it")
    _add_source(p)
    _add_output(p)

    p = sub.add_parser("verify", help="check the Cartan graph axioms CG1-CG4")
    _add_source(p)

    p = sub.add_parser("coxeter", help="print Coxeter matrices at every vertex")
    _add_source(p)
    _add_output(p, ("text", "json"), "text")

    p = sub.add_parser("aut", help="print |Aut(x)| for every vertex")
    _add_source(p)
    p.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    _add_output(p, ("text", "json"), "text")

    p = sub.add_parser("oracle", help="re-derive Cartan data from explicit matrices")
    p.add_argument("--family", choices=FAMILIES, required=True)
    _add_mn(p)
    _add_output(p, ("text", "json"), "text")

    p = sub.add_parser("bijection", help="print the shuffle/partition table")
    _add_mn(p)
    _add_output(p, ("text", "json"), "text")
    return parser


def _max_vertices(args) -> int:
    if args.max_vertices is not None:
        return args.max_vertices
    env = os.environ.get(ENV_MAX_VERTICES)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_MAX_VERTICES}={env!r} is not an integer") from None
    return DEFAULT_MAX_VERTICES


def _check_mn(family, m, n):
    if m is None or n is None:
        raise UsageError("--family requires --m and --n")
    if m < 1 or n < 1:
        raise UsageError("--m and --n must be positive")
    if family == "gl" and m != n:
        raise UsageError("gl is only supported for m == n")


def _graph(args):
    cap = _max_vertices(args)
    if args.family:
        _check_mn(args.family, args.m, args.n)
        return labelled_engine_graph(args.family, args.m, args.n, cap)
    datum = io.load_datum(args.datum)
    report = check_regular(datum)
    for cond, (i, j), msg in report.violations:
        print(f"warning: datum is not regular ({cond} at {i},{j}): {msg}", file=sys.stderr)
    return build_cartan_graph(symmetrize(datum), cap)


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_matrix(a) -> str:
    return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in a) + "]"


def cmd_build(args) -> int:
    g = _graph(args)
    _emit(args, io.graph_to_dot(g) if args.format == "dot" else io.graph_to_json(g))
    return 0


def cmd_verify(args) -> int:
    g = _graph(args)
    rep = verify_axioms(g, real_roots(g))
    print(f"{len(g)} vertices, {g.color_count} colors")
    print(rep.summary())
    for ce in rep.counterexamples[:10]:
        print("  counterexample:", ce)
    return 0 if rep.ok else 1


def cmd_coxeter(args) -> int:
    g = _graph(args)
    cox = coxeter_matrix(g, real_roots(g))
    if args.format == "json":
        _emit(args, io.dumps({g.label(x): [list(r) for r in cox[x]] for x in range(len(g))}))
    else:
        _emit(args, "".join(f"{g.label(x)}: {_fmt_matrix(cox[x])}\n" for x in range(len(g))))
    return 0


def cmd_aut(args) -> int:
    g = _graph(args)
    orders = {x: aut_order(g, x, args.state_cap) for x in range(len(g))}
    if args.format == "json":
        _emit(args, io.dumps({g.label(x): k for x, k in orders.items()}))
    else:
        _emit(args, "".join(f"{g.label(x)}: {k}\n" for x, k in orders.items()))
    return 0


def cmd_oracle(args) -> int:
    _check_mn(args.family, args.m, args.n)
    rep = verify_appendix(args.family, args.m, args.n)
    _emit(args, rep.to_json() if args.format == "json" else rep.to_text() + "\n")
    return 0 if rep.ok else 1


def cmd_bijection(args) -> int:
    _check_mn(None, args.m, args.n)
    rows = []
    for s in all_shuffles(args.m, args.n):
        rows.append((s.values, s.path(), str(shuffle_to_partition(s))))
    if args.format == "json":
        _emit(args, io.dumps([{"shuffle": list(v), "path": p, "partition": lam}
                              for v, p, lam in rows]))
    else:
        _emit(args, "".join(f"{' '.join(map(str, v))}  {p}  {lam}\n" for v, p, lam in rows))
    return 0


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "coxeter": cmd_coxeter,
    "aut": cmd_aut,
    "oracle": cmd_oracle,
    "bijection": cmd_bijection,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, WeylGroupoidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
