"""Shared fixture games and generators.

The four hand-picked games exercise distinct structures: a mutual
best-response pair, a best-response cycle with a pure Nash equilibrium,
a strictly dominated strategy, and a nine-strategy game whose
best-response digraph splits into two three-cycles plus transient
strategies.
"""

from __future__ import annotations

import numpy as np
import pytest

from sinkrank import new_digraph, new_symmetric_game

MUTUAL_PAIR_PAYOFF = [
    [2, 1, 1],
    [2, 1, 2],
    [1, 0, 2],
]

CYCLE_PAYOFF = [
    [2, 1, 2],
    [2, 1, 1],
    [1, 2, 1],
]

DOMINATED_PAYOFF = [
    [2, 2, 1],
    [1, 1, 2],
    [0, 0, 0],
]

NINE_PAYOFF = [
    [1, -1, 3, 0, 2, 0, 1, 2, -1],
    [5, 0, 2, 1, 0, -1, 0, 3, 0],
    [3, 2, 0, 4, 0, 3, 1, 2, 1],
    [1, 0, 0, 3, 4, 0, 0, 4, 0],
    [-2, -3, -1, -2, -1, -2, -1, 1, -4],
    [0, 1, 0, 2, 0, -1, 3, 4, 0],
    [-1, 1, 0, 1, 2, 0, 0, 5, 0],
    [3, 0, 2, 0, 0, 4, 0, 2, 4],
    [-2, -2, -1, -1, -1, -4, -1, 1, -2],
]


def make_mutual_pair_game():
    return new_symmetric_game(3, MUTUAL_PAIR_PAYOFF)


def make_cycle_game():
    return new_symmetric_game(3, CYCLE_PAYOFF)


def make_dominated_game():
    return new_symmetric_game(3, DOMINATED_PAYOFF)


def make_nine_game():
    return new_symmetric_game(9, NINE_PAYOFF)


def random_digraph(node_count: int, seed: int):
    """Seeded random digraph with a seed-dependent edge density."""
    rng = np.random.default_rng(seed)
    density = rng.uniform(0.05, 0.4)
    mask = rng.random((node_count, node_count)) < density
    edges = ((int(u), int(v)) for u, v in np.argwhere(mask))
    return new_digraph(node_count, edges)


@pytest.fixture
def mutual_pair_game():
    return make_mutual_pair_game()


@pytest.fixture
def cycle_game():
    return make_cycle_game()


@pytest.fixture
def dominated_game():
    return make_dominated_game()


@pytest.fixture
def nine_game():
    return make_nine_game()


@pytest.fixture
def all_fixture_games():
    return [
        make_mutual_pair_game(),
        make_cycle_game(),
        make_dominated_game(),
        make_nine_game(),
    ]
