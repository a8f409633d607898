"""Command-line front end: predicate checks, solving, factors, generators,
oracles, and DOT export."""
from __future__ import annotations

import argparse
import sys

from . import generate, oracles
from .cycles import AltCycle, CycleFactor
from .factor import find_alternating_cycle_factor
from .graph import BLUE, RED, ColoredMultigraph, ParseError, parse_text, serialize_text
from .merge import (
    HamiltonianCycle,
    NoFactor,
    NotColorConnected,
    NotTwoMClosed,
    solve_hamiltonian,
)
from .predicates import (
    closed_alternating_witness,
    color_connectivity_witness,
    two_m_violations,
    two_nm_violations,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_NO_FACTOR = 2
EXIT_NOT_COLOR_CONNECTED = 3
EXIT_NOT_2M_CLOSED = 4
EXIT_USAGE = 64
EXIT_PARSE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph(path: str) -> ColoredMultigraph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_text(text)


def _cycle_line(cycle: AltCycle) -> str:
    verts = " ".join(str(v) for v in cycle.vertices)
    cols = " ".join(c.value for c in cycle.colors)
    return f"cycle {verts} : {cols}"


def export_dot(g: ColoredMultigraph) -> str:
    """Undirected DOT; blue edges solid, red edges dashed."""
    lines = ["graph g {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v, color in g.edges():
        style = "solid" if color is BLUE else "dashed"
        name = "blue" if color is BLUE else "red"
        lines.append(f"  {u} -- {v} [color={name}, style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_check(args) -> int:
    g = _read_graph(args.file)
    if args.predicate == "2m-closed":
        violations = two_m_violations(g)
        if not violations:
            print("true")
            return EXIT_OK
        w = violations[0]
        print("false")
        print(f"witness 2path {w.x1} {w.x2} {w.x3}")
        return EXIT_FALSE
    if args.predicate == "2nm-closed":
        violations = two_nm_violations(g)
        if not violations:
            print("true")
            return EXIT_OK
        w = violations[0]
        print("false")
        print(f"witness 2path {w.x1} {w.x2} {w.x3}")
        return EXIT_FALSE
    if args.predicate == "closed-alternating":
        w = closed_alternating_witness(g)
        if w is None:
            print("true")
            return EXIT_OK
        print("false")
        print(f"witness 3path {w[0]} {w[1]} {w[2]} {w[3]}")
        return EXIT_FALSE
    w = color_connectivity_witness(g)
    if w is None:
        print("true")
        return EXIT_OK
    print("false")
    print(f"witness pair {w.x} {w.y}")
    return EXIT_FALSE


def _cmd_solve(args) -> int:
    g = _read_graph(args.file)
    trace: list[str] | None = [] if args.trace else None
    result = solve_hamiltonian(g, trace)
    if trace:
        for line in trace:
            print(line)
    if isinstance(result, HamiltonianCycle):
        print("hamiltonian")
        print(_cycle_line(result.cycle))
        return EXIT_OK
    if isinstance(result, NoFactor):
        print("no-factor")
        return EXIT_NO_FACTOR
    if isinstance(result, NotColorConnected):
        cert = result.certificate
        print("not-color-connected")
        print(
            f"certificate {cert.vertex} {cert.start_color.value} {cert.target}"
        )
        return EXIT_NOT_COLOR_CONNECTED
    assert isinstance(result, NotTwoMClosed)
    w = result.witness
    print("not-2m-closed")
    print(f"witness 2path {w.x1} {w.x2} {w.x3}")
    return EXIT_NOT_2M_CLOSED


def _print_factor(factor: CycleFactor | None) -> int:
    if factor is None:
        print("none")
        return EXIT_FALSE
    for cycle in sorted(factor, key=lambda c: min(c.vertices)):
        print(_cycle_line(cycle))
    return EXIT_OK


def _cmd_factor(args) -> int:
    g = _read_graph(args.file)
    if args.min_cycle_len > 2:
        factor = oracles.oracle_factor(g, allow_two_cycles=False)
    else:
        factor = find_alternating_cycle_factor(g)
    return _print_factor(factor)


def _cmd_generate(args) -> int:
    if args.family == "complete-random":
        g = generate.gen_complete(args.n, args.seed)
    elif args.family == "closure-2m":
        base = generate.gen_random(args.n, args.seed, args.density)
        g = generate.closure_2m(base, args.seed, args.color)
    else:
        g = generate.gen_counterexample(args.k1, args.k2)
    sys.stdout.write(serialize_text(g))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    if args.kind == "hamiltonian":
        cycle = oracles.oracle_hamiltonian(g)
        if cycle is None:
            print("none")
            return EXIT_FALSE
        print(_cycle_line(cycle))
        return EXIT_OK
    return _print_factor(oracles.oracle_factor(g))


def _cmd_export_dot(args) -> int:
    g = _read_graph(args.file)
    sys.stdout.write(export_dot(g))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="altcycles")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a structural predicate")
    p.add_argument(
        "--predicate",
        required=True,
        choices=["2m-closed", "2nm-closed", "closed-alternating", "color-connected"],
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="alternating Hamiltonian cycle or refutation")
    p.add_argument("file")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("factor", help="alternating cycle factor")
    p.add_argument("file")
    p.add_argument("--min-cycle-len", type=int, default=2)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("generate", help="emit a generated instance")
    p.add_argument(
        "--family",
        required=True,
        choices=["complete-random", "closure-2m", "counterexample"],
    )
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--color", default="random", choices=["B", "R", "random"])
    p.add_argument("--k1", type=int, default=2)
    p.add_argument("--k2", type=int, default=2)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("oracle", help="exhaustive ground-truth solvers")
    p.add_argument("kind", choices=["hamiltonian", "factor"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("export-dot", help="DOT output, blue solid / red dashed")
    p.add_argument("file")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except generate.ConstructionFailed as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    raise SystemExit(main())
