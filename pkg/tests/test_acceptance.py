"""Acceptance suite: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
print; each criterion also enforces its runtime budget.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

import numpy as np

from sinkrank import (
    GameFilter,
    SelfPlayConfig,
    adjacency_matrix,
    batch_frequencies,
    best_response_digraph,
    brute_force_scc,
    cartesian_product_adjacency,
    check_theorems,
    evaluate_bd,
    evaluate_nd,
    joint_preferred_strategies,
    joint_strict_adjacency_from_formula,
    joint_strict_br_digraph,
    joint_weak_br_digraph,
    non_dominated_digraph,
    random_game,
    run_self_play,
    scc_decompose,
    sink_equilibria,
)
from sinkrank.cli import main as cli_main
from sinkrank.errors import AsymmetryDetectedError
from sinkrank.fileio import dumps_game

from conftest import (
    make_cycle_game,
    make_dominated_game,
    make_mutual_pair_game,
    make_nine_game,
    random_digraph,
)
from test_metagame import stateless_game, truncated_payoff, two_state_chain
from sinkrank.metagame import enumerate_strategies, evaluate_joint, new_stochastic_game


@contextmanager
def criterion(number: int, description: str, budget_seconds: float):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed >= budget_seconds:
            raise AssertionError(
                f"criterion {number} exceeded {budget_seconds}s ({elapsed:.2f}s)"
            )
    except BaseException:
        print(f"criterion {number} ({description}): FAIL")
        raise
    print(f"criterion {number} ({description}): PASS [{elapsed:.2f}s, budget {budget_seconds:g}s]")


def components_as_sets(ses):
    return {frozenset(c) for c in ses.components}


def test_criterion_1_fixture_exactness():
    with criterion(1, "fixture exactness", 4.0):
        t0 = time.perf_counter()
        game = make_mutual_pair_game()
        assert components_as_sets(sink_equilibria(best_response_digraph(game))) == {
            frozenset({0, 1})
        }
        assert components_as_sets(sink_equilibria(joint_strict_br_digraph(game))) == {
            frozenset({0}), frozenset({1}), frozenset({3}), frozenset({4}), frozenset({8}),
        }
        assert evaluate_bd(game).preferred < joint_preferred_strategies(game, "strict")
        assert time.perf_counter() - t0 < 1.0

        t0 = time.perf_counter()
        game = make_cycle_game()
        assert components_as_sets(sink_equilibria(best_response_digraph(game))) == {
            frozenset({0, 1, 2})
        }
        assert components_as_sets(sink_equilibria(joint_strict_br_digraph(game))) == {
            frozenset({0})
        }
        assert time.perf_counter() - t0 < 1.0

        t0 = time.perf_counter()
        game = make_dominated_game()
        assert components_as_sets(sink_equilibria(non_dominated_digraph(game))) == {
            frozenset({0, 1})
        }
        assert components_as_sets(sink_equilibria(joint_weak_br_digraph(game))) == {
            frozenset({0})
        }
        assert time.perf_counter() - t0 < 1.0

        t0 = time.perf_counter()
        game = make_nine_game()
        assert best_response_digraph(game).edges == frozenset(
            {(0, 1), (1, 2), (2, 0), (3, 2), (4, 3), (5, 7), (6, 5), (7, 6), (8, 7)}
        )
        bd = evaluate_bd(game).preferred
        nd = evaluate_nd(game).preferred
        assert bd == frozenset({0, 1, 2, 5, 6, 7})
        assert nd == bd | {3}
        assert joint_preferred_strategies(game, "strict") == bd
        assert joint_preferred_strategies(game, "weak") == nd
        assert time.perf_counter() - t0 < 1.0


# Reference frequencies for the nine-strategy game from an independent run
# with a different candidate-selection rule. Bar heights depend on that
# rule, so they are logged for comparison only and never asserted.
REFERENCE_STRICT = [0.5490, 0.5487, 0.5489, 0.0, 0.0, 0.4504, 0.4504, 0.4504, 0.0]
REFERENCE_WEAK = [0.7041, 0.6827, 0.8287, 0.5774, 0.0, 0.6368, 0.6421, 0.8040, 0.0]


def test_criterion_2_selfplay_at_scale():
    with criterion(2, "self-play frequencies at scale", 30.0):
        game = make_nine_game()
        config = SelfPlayConfig(tau_max=300, memory_length=10, seed=1)

        strict = batch_frequencies(game, "strict", config, 10000)
        for s in (3, 4, 8):
            assert strict[s] == 0.0
        for s in (0, 1, 2, 5, 6, 7):
            assert strict[s] >= 0.2

        weak = batch_frequencies(game, "weak", config, 10000)
        for s in (4, 8):
            assert weak[s] == 0.0
        for s in (0, 1, 2, 3, 5, 6, 7):
            assert weak[s] >= 0.2

        print("  strict observed:", [round(strict[s], 4) for s in range(9)])
        print("  strict reference:", REFERENCE_STRICT)
        print("  weak observed:  ", [round(weak[s], 4) for s in range(9)])
        print("  weak reference: ", REFERENCE_WEAK)


def test_criterion_3_adjacency_identity():
    with criterion(3, "joint adjacency identity", 10.0):
        fixtures = [
            make_mutual_pair_game(),
            make_cycle_game(),
            make_dominated_game(),
            make_nine_game(),
        ]
        for game in fixtures:
            a_b = adjacency_matrix(best_response_digraph(game))
            direct = adjacency_matrix(joint_strict_br_digraph(game))
            assert np.array_equal(joint_strict_adjacency_from_formula(a_b), direct)

        for seed in range(1000):
            game = random_game(2 + seed % 7, -9, 9, seed=seed)
            a_b = adjacency_matrix(best_response_digraph(game))
            direct = adjacency_matrix(joint_strict_br_digraph(game))
            assert np.array_equal(joint_strict_adjacency_from_formula(a_b), direct)

        mutual = make_mutual_pair_game()
        a_b = adjacency_matrix(best_response_digraph(mutual))
        product = cartesian_product_adjacency(a_b, a_b)
        strict = adjacency_matrix(joint_strict_br_digraph(mutual))
        assert np.abs(product - strict).sum() > 0


def _verdict(report, name):
    for claim in report.claims:
        if claim.claim == name:
            return claim.verdict
    raise AssertionError(f"claim {name} missing")


def test_criterion_4_theorem_property_suite():
    with criterion(4, "theorem property suite", 60.0):
        unconditional = (
            "bd-preferred-subset-of-nd-preferred",
            "weak-selfplay-subset-of-nd-preferred",
            "nd-sink-equilibrium-unique",
            "nd-singleton-equals-weak-selfplay",
        )
        for seed in range(1000):
            game = random_game(2 + seed % 6, 0, 9, seed=seed)
            report = check_theorems(game)
            for name in unconditional:
                assert _verdict(report, name) != "violated", (name, game.payoff_row)

        flt = GameFilter(no_self_best_response=True, no_mutual_best_response_pairs=True)
        gated = (
            "strict-selfplay-equals-bd-preferred",
            "strict-selfplay-subset-of-nd-preferred",
            "bd-sink-equilibria-span-three",
        )
        for seed in range(500):
            game = random_game(3 + seed % 5, 0, 9, game_filter=flt, seed=10_000 + seed)
            report = check_theorems(game)
            for name in gated:
                assert _verdict(report, name) == "holds", (name, game.payoff_row)


def test_criterion_5_scc_oracle_equivalence():
    with criterion(5, "scc oracle equivalence", 30.0):
        for seed in range(1000):
            g = random_digraph(2 + seed % 11, seed)
            fast = {frozenset(b) for b in scc_decompose(g)}
            slow = {frozenset(b) for b in brute_force_scc(g)}
            assert fast == slow


def _trace_respects_graph(game, variant, graph, seed):
    n = game.n
    trace = run_self_play(
        game, variant, SelfPlayConfig(tau_max=300, memory_length=10, seed=seed)
    )
    member = {}
    for comp in sink_equilibria(graph).components:
        for node in comp:
            member[node] = comp
    current = None
    for episode in trace.episodes:
        if episode.pre != episode.post:
            u = episode.pre.row * n + episode.pre.col
            v = episode.post.row * n + episode.post.col
            assert (u, v) in graph.edges
        node = episode.post.row * n + episode.post.col
        comp = member.get(node)
        if current is not None:
            assert comp is current, "walk left a sink equilibrium"
        if comp is not None:
            current = comp


def test_criterion_6_trace_invariants():
    with criterion(6, "self-play trace invariants", 60.0):
        games = [
            make_mutual_pair_game(),
            make_cycle_game(),
            make_dominated_game(),
            make_nine_game(),
        ] + [random_game(2 + s % 6, 0, 9, seed=500 + s) for s in range(100)]
        for i, game in enumerate(games):
            strict_graph = joint_strict_br_digraph(game)
            weak_graph = joint_weak_br_digraph(game)
            _trace_respects_graph(game, "strict", strict_graph, seed=i)
            _trace_respects_graph(game, "weak", weak_graph, seed=i)


def test_criterion_7_metagame_correctness():
    with criterion(7, "meta-game correctness", 10.0):
        from sinkrank import build_meta_game

        matrix = np.array([[2.0, 1.0, 1.0], [2.0, 1.0, 2.0], [1.0, 0.0, 2.0]])
        for beta in (0.25, 0.5, 0.9):
            meta = build_meta_game(stateless_game(matrix, beta=beta))
            assert np.abs(meta.payoff_row - matrix / (1.0 - beta)).max() <= 1e-9

        chain = two_state_chain()
        for s1 in enumerate_strategies(chain):
            for s2 in enumerate_strategies(chain):
                j1, j2 = evaluate_joint(chain, s1, s2)
                assert abs(j1 - truncated_payoff(chain, s1, s2, 1)) <= 1e-8
                assert abs(j2 - truncated_payoff(chain, s1, s2, 2)) <= 1e-8

        r2 = chain.reward2.copy()
        r2[0, 1, 0] += 1e-3
        bad = new_stochastic_game(
            chain.states, chain.actions, chain.initial_dist, chain.transition,
            chain.reward1, r2, chain.beta1, chain.beta2,
        )
        try:
            build_meta_game(bad)
        except AsymmetryDetectedError:
            pass
        else:
            raise AssertionError("asymmetric stochastic game was accepted")


def test_criterion_8_cli_csv_determinism(tmp_path, capsys):
    with criterion(8, "selfplay CSV determinism", 30.0):
        game_path = tmp_path / "nine.json"
        game_path.write_text(dumps_game(make_nine_game()))
        args = ["selfplay", str(game_path), "--variant", "strict", "--seed", "42"]
        first = tmp_path / "one.csv"
        second = tmp_path / "two.csv"
        assert cli_main(args + ["--csv", str(first)]) == 0
        assert cli_main(args + ["--csv", str(second)]) == 0
        capsys.readouterr()
        assert first.read_bytes() == second.read_bytes()
