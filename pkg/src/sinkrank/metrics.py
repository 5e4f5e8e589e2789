"""Preferred-strategy sets and indicator metrics over the response digraphs."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import SinkEquilibriumSet, sink_equilibria
from .game import SymmetricGame
from .response import joint_strict_br_digraph, joint_weak_br_digraph
from .response import best_response_digraph, non_dominated_digraph


@dataclass(frozen=True)
class EvaluationReport:
    """Outcome of evaluating a game under one strategy metric.

    ``preferred`` is the union of the sink-equilibrium components and
    ``metric_values`` is the canonical 0/1 indicator: 1 for preferred
    strategies, 0 otherwise, which satisfies the defining inequality
    (every preferred strategy scores strictly above every non-preferred
    one, vacuously when either side is empty).
    """

    kind: str
    sink_equilibria: SinkEquilibriumSet
    preferred: frozenset[int]
    metric_values: dict[int, float]


def _report(kind: str, game: SymmetricGame, ses: SinkEquilibriumSet) -> EvaluationReport:
    preferred = ses.nodes()
    values = {s: (1.0 if s in preferred else 0.0) for s in range(game.n)}
    return EvaluationReport(kind=kind, sink_equilibria=ses, preferred=preferred, metric_values=values)


def evaluate_bd(game: SymmetricGame) -> EvaluationReport:
    """Strategies inside sink equilibria of the best-response digraph."""
    return _report("bd", game, sink_equilibria(best_response_digraph(game)))


def evaluate_nd(game: SymmetricGame) -> EvaluationReport:
    """Strategies inside the unique sink equilibrium of the non-dominated digraph."""
    return _report("nd", game, sink_equilibria(non_dominated_digraph(game)))


def joint_preferred_strategies(game: SymmetricGame, variant: str) -> frozenset[int]:
    """Strategies occurring in any sink equilibrium of a joint digraph.

    ``variant`` selects the strict best-response ("strict") or weak
    better-response ("weak") joint digraph. A strategy qualifies when it
    appears in either coordinate of any member joint strategy.
    """
    if variant == "strict":
        graph = joint_strict_br_digraph(game)
    elif variant == "weak":
        graph = joint_weak_br_digraph(game)
    else:
        raise ValueError(f"variant must be 'strict' or 'weak', got {variant!r}")
    n = game.n
    strategies: set[int] = set()
    for component in sink_equilibria(graph).components:
        for node in component:
            strategies.add(node // n)
            strategies.add(node % n)
    return frozenset(strategies)
