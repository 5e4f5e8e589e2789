"""Brute-force references, random game generation, and structural claim checks.

The claim checker evaluates, on a concrete game, every set relation the
package's digraph machinery is supposed to satisfy. Claims whose
hypothesis the game does not meet are reported as not applicable rather
than skipped silently, so sweeps over random games double as evidence
that the hypotheses matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import joint_strict_adjacency_from_formula
from .digraph import Digraph, adjacency_matrix
from .errors import FilterExhaustedError, TooLargeError
from .game import (
    SymmetricGame,
    best_responses,
    mutual_best_response_pairs,
    new_symmetric_game,
    self_best_response_strategies,
)
from .metrics import evaluate_bd, evaluate_nd, joint_preferred_strategies
from .response import best_response_digraph, joint_strict_br_digraph

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class GameFilter:
    """Structural constraints for rejection-sampled random games."""

    no_self_best_response: bool = False
    no_mutual_best_response_pairs: bool = False
    generic_best_responses: bool = False

    def accepts(self, game: SymmetricGame) -> bool:
        if self.no_self_best_response and self_best_response_strategies(game):
            return False
        if self.no_mutual_best_response_pairs and mutual_best_response_pairs(game):
            return False
        if self.generic_best_responses:
            if any(len(best_responses(game, s)) != 1 for s in range(game.n)):
                return False
        return True


@dataclass(frozen=True)
class ClaimCheck:
    """Result of checking one structural claim on one game."""

    claim: str
    applicable: bool
    verdict: str
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    claims: tuple[ClaimCheck, ...]

    @property
    def violations(self) -> tuple[ClaimCheck, ...]:
        return tuple(c for c in self.claims if c.verdict == VIOLATED)

    def to_dict(self) -> dict:
        return {
            "claims": [
                {
                    "claim": c.claim,
                    "applicable": c.applicable,
                    "verdict": c.verdict,
                    "witness": c.witness,
                }
                for c in self.claims
            ],
            "violations": len(self.violations),
        }


def brute_force_scc(g: Digraph) -> list[frozenset[int]]:
    """SCC partition via boolean reachability closure; nodes <= 64 only.

    u and v share a block iff u reaches v and v reaches u (every node
    reaches itself through the empty path). Block order is unspecified.
    """
    n = g.node_count
    if n > 64:
        raise TooLargeError(f"brute-force SCC limited to 64 nodes, got {n}")
    reach = np.eye(n, dtype=bool)
    for u, v in g.edges:
        reach[u, v] = True
    while True:
        grown = reach | (reach @ reach)
        if np.array_equal(grown, reach):
            break
        reach = grown
    mutual = reach & reach.T
    blocks = []
    seen = [False] * n
    for u in range(n):
        if seen[u]:
            continue
        block = frozenset(int(v) for v in np.flatnonzero(mutual[u]))
        for v in block:
            seen[v] = True
        blocks.append(block)
    return blocks


def random_game(
    n: int,
    payoff_low: int,
    payoff_high: int,
    game_filter: GameFilter | None = None,
    seed: int = 0,
    max_attempts: int = 10000,
) -> SymmetricGame:
    """Uniform integer-payoff game satisfying the filter; deterministic per seed.

    Rejection-samples fresh matrices until the filter accepts one. Integer
    payoffs keep every comparison exact regardless of epsilon.
    """
    if payoff_low > payoff_high:
        raise ValueError(f"payoff_low {payoff_low} exceeds payoff_high {payoff_high}")
    flt = game_filter or GameFilter()
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        matrix = rng.integers(payoff_low, payoff_high + 1, size=(n, n))
        game = new_symmetric_game(n, matrix)
        if flt.accepts(game):
            return game
    raise FilterExhaustedError(
        f"no game of size {n} satisfied the filter in {max_attempts} attempts",
        attempts=max_attempts,
    )


def _subset_claim(claim, hypothesis_ok, left, right, left_name, right_name, equality=False):
    witness = {left_name: sorted(left), right_name: sorted(right)}
    if not hypothesis_ok:
        return ClaimCheck(claim, False, NOT_APPLICABLE, witness)
    ok = (left == right) if equality else (left <= right)
    return ClaimCheck(claim, True, HOLDS if ok else VIOLATED, witness)


def check_theorems(game: SymmetricGame) -> TheoremReport:
    """Evaluates every structural claim on the given game.

    Unconditional claims: the strict joint adjacency identity, uniqueness
    of the non-dominated sink equilibrium, bd-preferred within
    nd-preferred, and weak-self-play strategies within nd-preferred.
    Hypothesis-gated claims: with no self best responses and no mutual
    best-response pairs, bd-preferred equals the strict-self-play set,
    that set lies within nd-preferred, and every best-response sink
    equilibrium spans at least three strategies. When the non-dominated
    sink equilibrium is a singleton, nd-preferred equals the
    weak-self-play set.
    """
    bd = evaluate_bd(game)
    nd = evaluate_nd(game)
    strict_set = joint_preferred_strategies(game, "strict")
    weak_set = joint_preferred_strategies(game, "weak")
    self_br = self_best_response_strategies(game)
    mutual = mutual_best_response_pairs(game)
    unconstrained = not self_br and not mutual
    nd_components = nd.sink_equilibria.components

    claims = [
        _subset_claim(
            "bd-preferred-subset-of-nd-preferred",
            True,
            bd.preferred,
            nd.preferred,
            "bd_preferred",
            "nd_preferred",
        ),
        _subset_claim(
            "weak-selfplay-subset-of-nd-preferred",
            True,
            weak_set,
            nd.preferred,
            "weak_selfplay",
            "nd_preferred",
        ),
        _subset_claim(
            "nd-singleton-equals-weak-selfplay",
            len(nd_components) == 1 and len(nd_components[0]) == 1,
            nd.preferred,
            weak_set,
            "nd_preferred",
            "weak_selfplay",
            equality=True,
        ),
        _subset_claim(
            "strict-selfplay-equals-bd-preferred",
            unconstrained,
            bd.preferred,
            strict_set,
            "bd_preferred",
            "strict_selfplay",
            equality=True,
        ),
        _subset_claim(
            "strict-selfplay-subset-of-nd-preferred",
            unconstrained,
            strict_set,
            nd.preferred,
            "strict_selfplay",
            "nd_preferred",
        ),
    ]

    nd_unique = len(nd_components) == 1
    claims.append(
        ClaimCheck(
            "nd-sink-equilibrium-unique",
            True,
            HOLDS if nd_unique else VIOLATED,
            {"component_count": len(nd_components)},
        )
    )

    bd_sizes = [len(c) for c in bd.sink_equilibria.components]
    claims.append(
        ClaimCheck(
            "bd-sink-equilibria-span-three",
            unconstrained,
            (HOLDS if min(bd_sizes) >= 3 else VIOLATED) if unconstrained else NOT_APPLICABLE,
            {"component_sizes": sorted(bd_sizes)},
        )
    )

    a_b = adjacency_matrix(best_response_digraph(game))
    direct = adjacency_matrix(joint_strict_br_digraph(game))
    identity_ok = np.array_equal(joint_strict_adjacency_from_formula(a_b), direct)
    claims.append(
        ClaimCheck(
            "joint-strict-adjacency-identity",
            True,
            HOLDS if identity_ok else VIOLATED,
            {} if identity_ok else {"payoff_row": game.payoff_row.tolist()},
        )
    )

    return TheoremReport(claims=tuple(claims))
