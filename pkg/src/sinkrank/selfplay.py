"""Seeded self-play over the joint response digraphs.

Both variants walk the joint-strategy space one deviation at a time. Each
episode picks a player uniformly at random; the chosen player switches to
a candidate strategy drawn uniformly from its candidate set while the
other player keeps its strategy:

* strict: candidates are best responses to the opponent's current
  strategy that improve the mover's payoff by more than epsilon. When no
  candidate exists the mover stays put.
* weak: candidates are all strategies whose payoff against the opponent's
  current strategy is within epsilon of the mover's current payoff or
  better. The current strategy always qualifies, so the set is never
  empty.

Determinism contract: a trace is a pure function of (game, variant,
config). The generator is ``numpy.random.default_rng(seed)`` and draws,
in order: the initial joint strategy as two integers in [0, n) (row then
column, skipped when ``initial`` is given), then ``tau_max`` player
choices in {0, 1} (0 moves the row player), then ``tau_max`` uniform
floats in [0, 1). The float for episode t selects candidate
``floor(u * len(C))`` from the candidate set in ascending strategy order;
it is drawn even when the strict candidate set is empty. Cross-library
trace equality is not promised, only within-package reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import IndexOutOfRangeError, InvalidConfigError
from .game import JointStrategy, SymmetricGame
from .response import _joint_deviation_masks

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SelfPlayConfig:
    """Run parameters: episode budget, memory window, seed, optional start."""

    tau_max: int = 300
    memory_length: int = 10
    seed: int = 0
    initial: JointStrategy | None = None


class Episode(NamedTuple):
    player: int  # 1 moves the row coordinate, 2 the column coordinate
    pre: JointStrategy
    post: JointStrategy


@dataclass(frozen=True)
class SelfPlayTrace:
    """Full episode-by-episode record of one self-play run.

    ``final_memory`` holds the last ``memory_length`` joint strategies
    produced by episodes, and ``learnt_strategies`` the strategies
    occurring in either coordinate of that window.
    """

    variant: str
    episodes: tuple[Episode, ...]
    final_memory: tuple[JointStrategy, ...]
    learnt_strategies: frozenset[int]


def derive_run_seed(base_seed: int, run_index: int) -> int:
    """Per-run seed for batch runs: splitmix64 of (base_seed, run_index).

    The mix is the standard splitmix64 finalizer applied to
    ``base_seed + (run_index + 1) * 0x9E3779B97F4A7C15`` in 64-bit
    arithmetic, so batches are reproducible and runs independent.
    """
    z = (base_seed + (run_index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _validate_variant(variant: str) -> None:
    if variant not in ("strict", "weak"):
        raise InvalidConfigError(f"variant must be 'strict' or 'weak', got {variant!r}")


def _validate_config(game: SymmetricGame, config: SelfPlayConfig) -> None:
    if config.tau_max < 1:
        raise InvalidConfigError(f"tau_max must be positive, got {config.tau_max}")
    if not 1 <= config.memory_length <= config.tau_max:
        raise InvalidConfigError(
            f"memory_length must be in [1, tau_max={config.tau_max}], "
            f"got {config.memory_length}"
        )
    if config.seed < 0:
        raise InvalidConfigError(f"seed must be non-negative, got {config.seed}")
    if config.initial is not None:
        row, col = config.initial
        if not (0 <= row < game.n and 0 <= col < game.n):
            raise IndexOutOfRangeError(
                f"initial joint strategy {config.initial} outside [0, {game.n})^2"
            )


def _candidate_tables(game: SymmetricGame, variant: str) -> tuple[np.ndarray, np.ndarray]:
    """Per-state candidate moves, precomputed for the walk kernel.

    Returns (counts, nexts): counts[r, p] is the candidate-set size at
    joint state r for player p (0 = row mover), and nexts[r, p, :counts]
    lists the successor joint states in ascending strategy order.
    """
    n = game.n
    row_dev, col_dev = _joint_deviation_masks(game, strict=(variant == "strict"))
    if variant == "weak":
        # Staying put is always a weak candidate.
        stay = np.eye(n, dtype=bool)
        row_dev = row_dev | stay[:, None, :]
        col_dev = col_dev | stay[None, :, :]

    # Stable argsort of the negated mask packs candidate indices first,
    # in ascending order.
    row_order = np.argsort(~row_dev, axis=2, kind="stable")
    col_order = np.argsort(~col_dev, axis=2, kind="stable")

    n2 = n * n
    rows = np.repeat(np.arange(n), n)
    cols = np.tile(np.arange(n), n)
    counts = np.empty((n2, 2), dtype=np.int32)
    counts[:, 0] = row_dev.sum(axis=2).reshape(n2)
    counts[:, 1] = col_dev.sum(axis=2).reshape(n2)
    nexts = np.empty((n2, 2, n), dtype=np.int32)
    nexts[:, 0, :] = row_order.reshape(n2, n) * n + cols[:, None]
    nexts[:, 1, :] = rows[:, None] * n + col_order.reshape(n2, n)
    return counts, nexts


def _walk(
    start: np.ndarray,
    players: np.ndarray,
    picks: np.ndarray,
    counts: np.ndarray,
    nexts: np.ndarray,
) -> np.ndarray:
    """Advances all runs in lockstep; returns states of shape (runs, tau_max + 1)."""
    runs, tau = players.shape
    states = np.empty((runs, tau + 1), dtype=np.int64)
    state = start.astype(np.int64)
    states[:, 0] = state
    for t in range(tau):
        mover = players[:, t]
        cnt = counts[state, mover]
        choice = (picks[:, t] * cnt).astype(np.int64)
        nxt = nexts[state, mover, choice]
        state = np.where(cnt > 0, nxt, state)
        states[:, t + 1] = state
    return states


def run_self_play(game: SymmetricGame, variant: str, config: SelfPlayConfig) -> SelfPlayTrace:
    """Executes one seeded self-play run and returns its full trace."""
    _validate_variant(variant)
    _validate_config(game, config)
    n = game.n
    rng = np.random.default_rng(config.seed)
    if config.initial is None:
        row, col = rng.integers(0, n, size=2)
        start = int(row) * n + int(col)
    else:
        start = config.initial.row * n + config.initial.col
    players = rng.integers(0, 2, size=config.tau_max)
    picks = rng.random(config.tau_max)

    counts, nexts = _candidate_tables(game, variant)
    states = _walk(np.array([start]), players[None, :], picks[None, :], counts, nexts)[0]

    episodes = tuple(
        Episode(
            player=int(players[t]) + 1,
            pre=JointStrategy(int(states[t]) // n, int(states[t]) % n),
            post=JointStrategy(int(states[t + 1]) // n, int(states[t + 1]) % n),
        )
        for t in range(config.tau_max)
    )
    window = states[config.tau_max - config.memory_length + 1 :]
    final_memory = tuple(JointStrategy(int(s) // n, int(s) % n) for s in window)
    learnt = frozenset(int(s) // n for s in window) | frozenset(int(s) % n for s in window)
    return SelfPlayTrace(
        variant=variant,
        episodes=episodes,
        final_memory=final_memory,
        learnt_strategies=learnt,
    )


def batch_frequencies(
    game: SymmetricGame,
    variant: str,
    base_config: SelfPlayConfig,
    runs: int,
) -> dict[int, float]:
    """Fraction of runs in which each strategy appears in the final memory.

    Run r uses seed ``derive_run_seed(base_config.seed, r)`` and an
    initial joint strategy sampled uniformly per run; any ``initial`` on
    the base config is ignored. The result equals running
    :func:`run_self_play` once per derived seed and counting learnt
    strategies, but the runs advance in lockstep for speed.
    """
    _validate_variant(variant)
    _validate_config(game, base_config)
    if runs < 1:
        raise InvalidConfigError(f"runs must be positive, got {runs}")

    n = game.n
    tau = base_config.tau_max
    start = np.empty(runs, dtype=np.int64)
    players = np.empty((runs, tau), dtype=np.int64)
    picks = np.empty((runs, tau), dtype=np.float64)
    for r in range(runs):
        rng = np.random.default_rng(derive_run_seed(base_config.seed, r))
        row, col = rng.integers(0, n, size=2)
        start[r] = int(row) * n + int(col)
        players[r] = rng.integers(0, 2, size=tau)
        picks[r] = rng.random(tau)

    counts, nexts = _candidate_tables(game, variant)
    states = _walk(start, players, picks, counts, nexts)
    window = states[:, tau - base_config.memory_length + 1 :]

    present = np.zeros((runs, n), dtype=bool)
    run_idx = np.arange(runs)[:, None]
    present[run_idx, window // n] = True
    present[run_idx, window % n] = True
    hits = present.sum(axis=0)
    return {s: float(hits[s]) / runs for s in range(n)}
