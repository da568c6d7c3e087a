"""Command-line front end.

Every command reads a graph from a DIMACS path, ``-`` for standard input, or
a generator spec ``kind:args`` (complete:n, cycle:n, bipartite:a,b,
split:r,p,dmin,dmax,total, gnp:n,p). Exit codes: 0 ok, 1 usage error,
2 input error, 3 oracle guard violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Callable

from . import bounds, ceilings, graph
from .graph import DimacsError, Graph

EXIT_USAGE, EXIT_INPUT, EXIT_GUARD = 1, 2, 3

GENERATORS: dict[str, tuple[Callable[..., Graph], tuple[type, ...], bool]] = {
    # kind: (function, argument types, takes seed)
    "complete": (graph.gen_complete, (int,), False),
    "cycle": (graph.gen_cycle, (int,), False),
    "bipartite": (graph.gen_complete_bipartite, (int, int), False),
    "split": (graph.gen_split, (int, int, int, int, int), True),
    "gnp": (graph.gen_gnp, (int, float), True),
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def is_generator_spec(text: str) -> bool:
    kind, sep, _ = text.partition(":")
    return bool(sep) and kind in GENERATORS and not os.path.exists(text)


def generate(spec: str, seed: int) -> Graph:
    kind, _, rest = spec.partition(":")
    if kind not in GENERATORS:
        raise InputError(f"unknown generator {kind!r}; choose from {', '.join(GENERATORS)}")
    fn, types, seeded = GENERATORS[kind]
    raw = [a for a in rest.split(",") if a.strip()]
    if len(raw) != len(types):
        raise InputError(f"generator {kind!r} takes {len(types)} argument(s), got {len(raw)}")
    try:
        args = [t(a) for t, a in zip(types, raw)]
    except ValueError as exc:
        raise InputError(f"bad generator argument in {spec!r}: {exc}") from None
    if seeded:
        args.append(seed)
    try:
        return fn(*args)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def load(source: str, seed: int) -> Graph:
    if is_generator_spec(source):
        return generate(source, seed)
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return graph.parse_dimacs(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def cmd_bound(g: Graph, args) -> str:
    if args.trace_inplace_variant:
        ceilings.accn(g, check_inplace=True)
    rep = bounds.bound_report(g, with_oracle=args.oracle)
    if args.format == "machine":
        return _dump(rep.to_dict() | {"bound_primary": rep.bound_primary})
    lines = [
        f"c*(G∨u)={rep.accn_bound}  ω(G)≤{rep.bound_primary}",
        f"join n={rep.n} m={rep.m}",
        f"ub1={_fmt(rep.ub1)}  ub2={_fmt(rep.ub2)}  ub3={_fmt(rep.ub3)}  (bounds on ω(G∨u))",
    ]
    if rep.exact_omega_join is not None:
        lines.append(f"exact ω(G∨u)={rep.exact_omega_join}")
    return "\n".join(lines) + "\n"


def cmd_trace(g: Graph, args) -> str:
    if args.trace_inplace_variant:
        ceilings.accn(g, check_inplace=True)
    tr = ceilings.accn_trace(g)
    return _dump(tr.to_dict()) if args.format == "machine" else tr.to_text()


def cmd_compare(g: Graph, args) -> str:
    if args.oracle and g.n + 1 > bounds.ORACLE_MAX_VERTICES:
        raise bounds.GuardError(
            f"oracle requested for a join of {g.n + 1} vertices; "
            f"limit is {bounds.ORACLE_MAX_VERTICES}"
        )
    rep = bounds.bound_report(g, with_oracle=args.oracle)
    if args.format == "machine":
        return _dump(rep.to_dict())
    exact = "—" if rep.exact_omega_join is None else str(rep.exact_omega_join)
    cells = [str(rep.accn_bound), _fmt(rep.ub1), _fmt(rep.ub2), _fmt(rep.ub3), exact]
    return "accn | ub1 | ub2 | ub3 | exact\n" + " | ".join(cells) + "\n"


def cmd_gen(g: Graph, args) -> str:
    return graph.write_dimacs(g)


def cmd_check_split(g: Graph, args) -> str:
    if g.n == 0:
        raise InputError("graph has no vertices")
    sc = bounds.hammer_simeone(g)
    if args.format == "machine":
        return _dump({"is_split": sc.is_split, "r": sc.r, "lhs": sc.lhs, "rhs": sc.rhs})
    verdict = "split" if sc.is_split else "not split"
    return f"{verdict} r={sc.r} lhs={sc.lhs} rhs={sc.rhs}\n"


def cmd_oracle(g: Graph, args) -> str:
    if g.n == 0:
        raise InputError("graph has no vertices")
    omega = bounds.brute_force_omega(g)
    return _dump({"omega": omega}) if args.format == "machine" else f"omega {omega}\n"


COMMANDS = {
    "bound": (cmd_bound, "ACCN bound for G∨u and G, with UB1-UB3"),
    "trace": (cmd_trace, "per-vertex ceiling table"),
    "compare": (cmd_compare, "ACCN against UB1-UB3 and optionally the exact oracle"),
    "gen": (cmd_gen, "write a generated graph as DIMACS"),
    "check-split": (cmd_check_split, "Hammer-Simeone split test"),
    "oracle": (cmd_oracle, "exact clique number (small graphs)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliqueceiling", description="Clique-number upper bounds via clique ceilings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name == "gen":
            p.add_argument("input", metavar="SPEC", help="generator spec kind:args")
        else:
            p.add_argument("input", metavar="INPUT", help="DIMACS path, '-' for stdin, or kind:args")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--oracle", action="store_true", help="also compute exact ω of the join")
        p.add_argument(
            "--trace-inplace-variant", action="store_true",
            help="also run the literal in-place phase 3 and warn on disagreement",
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.seed < 0 or args.seed >= 2**64:
        print("error: --seed must be an unsigned 64-bit integer", file=sys.stderr)
        return EXIT_USAGE
    handler = COMMANDS[args.command][0]
    try:
        if args.command == "gen":
            g = generate(args.input, args.seed)
        else:
            g = load(args.input, args.seed)
        out = handler(g, args)
    except (InputError, DimacsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except bounds.GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
