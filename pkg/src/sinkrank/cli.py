"""Command-line front end.

Subcommands: analyze (metrics and structure of a game file), selfplay
(batch frequency simulation), verify (structural claim report), generate
(random game files), metagame (flatten a stochastic game). Exit codes:
0 success, 1 input or usage error, 2 when verify finds a violated claim.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import SinkrankError
from .digraph import to_dot, sink_equilibria
from .fileio import (
    dumps_game,
    frequencies_to_csv,
    load_game,
    load_stochastic_game,
)
from .game import mutual_best_response_pairs, self_best_response_strategies
from .metagame import build_meta_game
from .metrics import evaluate_bd, evaluate_nd
from .oracle import GameFilter, check_theorems, random_game
from .response import best_response_digraph, non_dominated_digraph
from .selfplay import SelfPlayConfig, batch_frequencies, derive_run_seed

_FILTER_TOKENS = {
    "no-self-br": "no_self_best_response",
    "no-mutual-br": "no_mutual_best_response_pairs",
    "generic-br": "generic_best_responses",
}


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with status 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _fmt_strategies(labels, strategies) -> str:
    if not strategies:
        return "none"
    return " ".join(labels[s] for s in sorted(strategies))


def _fmt_component(labels, component) -> str:
    return "{" + ",".join(labels[s] for s in sorted(component)) + "}"


def _metric_section(name, labels, report, lines):
    comps = " ".join(_fmt_component(labels, c) for c in report.sink_equilibria.components)
    lines.append(f"{name} sink equilibria: {comps}")
    lines.append(f"{name} preferred: {_fmt_strategies(labels, report.preferred)}")


def cmd_analyze(args) -> int:
    game = load_game(args.game)
    labels = game.labels
    reports = {}
    graphs = {}
    if args.metric in ("bd", "both"):
        reports["bd"] = evaluate_bd(game)
        graphs["bd"] = best_response_digraph(game)
    if args.metric in ("nd", "both"):
        reports["nd"] = evaluate_nd(game)
        graphs["nd"] = non_dominated_digraph(game)
    self_br = self_best_response_strategies(game)
    mutual = mutual_best_response_pairs(game)

    if args.json:
        doc = {
            "n": game.n,
            "labels": list(labels),
            "epsilon": game.epsilon,
            "self_best_response_strategies": sorted(self_br),
            "mutual_best_response_pairs": sorted(sorted(p) for p in mutual),
        }
        for name, report in reports.items():
            doc[name] = {
                "sink_equilibria": [sorted(c) for c in report.sink_equilibria.components],
                "preferred": sorted(report.preferred),
                "metric_values": {labels[s]: v for s, v in report.metric_values.items()},
            }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        lines = [f"game: {game.n} strategies, epsilon={game.epsilon}"]
        lines.append(
            f"self best-response strategies: {_fmt_strategies(labels, self_br)}"
        )
        if mutual:
            pairs = " ".join(_fmt_component(labels, p) for p in sorted(mutual, key=sorted))
        else:
            pairs = "none"
        lines.append(f"mutual best-response pairs: {pairs}")
        for name, report in reports.items():
            _metric_section(name, labels, report, lines)
        print("\n".join(lines))

    if args.dot:
        for name, graph in graphs.items():
            path = f"{args.dot}_{name}.dot"
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(to_dot(graph, highlight=sink_equilibria(graph)))
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_selfplay(args) -> int:
    game = load_game(args.game)
    config = SelfPlayConfig(tau_max=args.tau_max, memory_length=args.memory, seed=args.seed)
    freq = batch_frequencies(game, args.variant, config, args.runs)
    for s, label in enumerate(game.labels):
        print(f"{label} {freq[s]:.4f}")
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(frequencies_to_csv(game.labels, freq))
    return 0


def cmd_verify(args) -> int:
    game = load_game(args.game)
    report = check_theorems(game)
    doc = report.to_dict()
    doc["labels"] = list(game.labels)
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 2 if report.violations else 0


def cmd_generate(args) -> int:
    flags = {}
    if args.filter:
        for token in args.filter.split(","):
            token = token.strip()
            if token not in _FILTER_TOKENS:
                raise SinkrankError(
                    f"unknown filter {token!r}; choose from {sorted(_FILTER_TOKENS)}"
                )
            flags[_FILTER_TOKENS[token]] = True
    game_filter = GameFilter(**flags)
    if args.count < 1:
        raise SinkrankError(f"--count must be positive, got {args.count}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for i in range(args.count):
        seed = args.seed if args.count == 1 else derive_run_seed(args.seed, i)
        game = random_game(
            args.n,
            args.low,
            args.high,
            game_filter=game_filter,
            seed=seed,
            max_attempts=args.max_attempts,
        )
        text = dumps_game(game)
        if args.out:
            path = os.path.join(args.out, f"game_{i:03d}.json")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            print(f"wrote {path}", file=sys.stderr)
        else:
            sys.stdout.write(text)
    return 0


def cmd_metagame(args) -> int:
    sg = load_stochastic_game(args.stochastic_game)
    game = build_meta_game(sg, cap=args.cap)
    text = dumps_game(game)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sinkrank", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="sink equilibria and preferred strategies")
    p.add_argument("game", help="game file (JSON or CSV), '-' for stdin")
    p.add_argument("--metric", choices=("bd", "nd", "both"), default="both")
    p.add_argument("--dot", metavar="PREFIX", help="write PREFIX_bd.dot / PREFIX_nd.dot")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("selfplay", help="batch self-play frequency simulation")
    p.add_argument("game", help="game file (JSON or CSV), '-' for stdin")
    p.add_argument("--variant", choices=("strict", "weak"), default="strict")
    p.add_argument("--tau-max", type=int, default=300, dest="tau_max")
    p.add_argument("--memory", type=int, default=10)
    p.add_argument("--runs", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="PATH", help="also write a strategy,frequency CSV")
    p.set_defaults(func=cmd_selfplay)

    p = sub.add_parser("verify", help="check structural claims on a game")
    p.add_argument("game", help="game file (JSON or CSV), '-' for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="random integer-payoff games")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--low", type=int, default=0)
    p.add_argument("--high", type=int, default=9)
    p.add_argument(
        "--filter",
        help="comma-separated: " + ",".join(sorted(_FILTER_TOKENS)),
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--max-attempts", type=int, default=10000, dest="max_attempts")
    p.add_argument("--out", metavar="DIR", help="write game_NNN.json files here")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("metagame", help="flatten a stochastic game to a game file")
    p.add_argument("stochastic_game", help="stochastic game JSON, '-' for stdin")
    p.add_argument("--out", metavar="PATH", help="output game file (default stdout)")
    p.add_argument("--cap", type=int, default=4096, help="strategy-count cap")
    p.set_defaults(func=cmd_metagame)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SinkrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
