"""Command-line front end.

Subcommands: ``gen`` (graph files), ``solve`` (witness or NO), ``count``
(exact partition counts by any of the three counters), ``analyze``
(growth-rate numerics as CSV or key=value lines), ``bench`` (state-count
identity sweep on complete graphs).

Exit codes are part of the contract: 0 success (and YES), 1 NO from
``solve``, 2 usage error, 3 parse or I/O error, 4 capacity exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, oracles
from .graphs import FAMILIES, CapacityError, Graph, GraphFormatError, generate, parse_graph, serialize_graph
from .lexdp import count_lex, solve_lex


def _load(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.family, args.n, p=args.p, seed=args.seed)
    text = serialize_graph(g)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="ascii")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if args.algo == "lex":
        witness, _ = solve_lex(g)
    else:
        found = oracles.enumerate_partitions(g, limit=1)
        witness = found[0] if found else None
    if witness is None:
        print("NO")
        return 1
    print("YES")
    for a, b, c in witness:
        print(a, b, c)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    g = _load(args.file)
    if args.algo == "lex":
        count, _ = count_lex(g)
    elif args.algo == "ie":
        count = oracles.count_ie(g, mode=args.ie_mode, threads=args.threads)
    else:
        count = oracles.count_brute(g)
    print(count)
    return 0


def _cmd_analyze_sum(args: argparse.Namespace) -> int:
    print(f"sum={analysis.state_space_sum(args.n)}")
    return 0


def _cmd_analyze_growth(args: argparse.Namespace) -> int:
    sys.stdout.write(analysis.growth_csv(args.n_max))
    return 0


def _cmd_analyze_gamma(args: argparse.Namespace) -> int:
    result = analysis.maximize_g(args.tol)
    print(f"gamma_star={result.gamma_star:.12g}")
    print(f"base={result.base:.12g}")
    return 0


def _cmd_analyze_chain(args: argparse.Namespace) -> int:
    sys.stdout.write(analysis.chain_csv(args.n))
    return 0


def _cmd_analyze_audit(args: argparse.Namespace) -> int:
    sys.stdout.write(analysis.audit_csv(args.n))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    print("n,states_visited,sum_plus_one,count")
    for n in range(args.n_from, args.n_to + 1):
        if n % 3:
            continue
        g = generate(args.family, n)
        count, stats = count_lex(g)
        expect = 1 + analysis.state_space_sum(n)
        if stats.states_visited != expect:
            raise RuntimeError(
                f"state identity broken at n={n}: "
                f"{stats.states_visited} != {expect}")
        print(f"{n},{stats.states_visited},{expect},{count}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripart",
        description="exact triangle-partition solving, counting, analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="find a triangle partition")
    p.add_argument("--algo", choices=("lex", "brute"), default="lex")
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("count", help="count triangle partitions")
    p.add_argument("--algo", choices=("lex", "ie", "brute"), default="lex")
    p.add_argument("--ie-mode", choices=oracles.IE_MODES, default="tabulated")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("analyze", help="growth-rate numerics")
    asub = p.add_subparsers(dest="analysis", required=True)

    a = asub.add_parser("sum", help="exact state-space sum")
    a.add_argument("--n", required=True, type=int)
    a.set_defaults(func=_cmd_analyze_sum)

    a = asub.add_parser("growth", help="growth table up to --n-max")
    a.add_argument("--n-max", required=True, type=int)
    a.set_defaults(func=_cmd_analyze_growth)

    a = asub.add_parser("gamma", help="maximize the growth exponent")
    a.add_argument("--tol", type=float, default=1e-10)
    a.set_defaults(func=_cmd_analyze_gamma)

    a = asub.add_parser("chain", help="substitution table for one n")
    a.add_argument("--n", required=True, type=int)
    a.set_defaults(func=_cmd_analyze_chain)

    a = asub.add_parser("audit", help="per-region term maxima")
    a.add_argument("--n", required=True, type=int)
    a.set_defaults(func=_cmd_analyze_audit)

    p = sub.add_parser("bench", help="state-count identity sweep")
    p.add_argument("--family", choices=("complete",), default="complete")
    p.add_argument("--n-from", required=True, type=int)
    p.add_argument("--n-to", required=True, type=int)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits on usage errors and --help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"tripart: capacity exceeded: {exc}", file=sys.stderr)
        return 4
    except GraphFormatError as exc:
        print(f"tripart: bad graph file: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"tripart: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"tripart: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
