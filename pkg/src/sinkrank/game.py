"""Two-player symmetric normal-form games and best-response queries.

A symmetric game stores only the row player's payoff matrix. The column
player's payoff for a joint strategy (a, b) is the row player's payoff for
(b, a), so one n-by-n matrix fully describes the game. All payoff
comparisons go through a non-negative tolerance ``epsilon`` so that games
built from floating-point meta-payoffs behave deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    InvalidConfigError,
    NonFiniteEntryError,
)


class JointStrategy(NamedTuple):
    """A pure joint strategy: row player's index and column player's index."""

    row: int
    col: int


@dataclass(frozen=True, eq=False)
class SymmetricGame:
    """Immutable two-player symmetric game.

    Attributes:
        n: number of strategies available to each player.
        payoff_row: n-by-n float matrix; entry (i, j) is the row player's
            payoff when it plays strategy i against opponent strategy j.
        labels: display names, one per strategy.
        epsilon: tolerance used for every payoff equality/ordering test.
    """

    n: int
    payoff_row: np.ndarray
    labels: tuple[str, ...]
    epsilon: float

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricGame):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and self.epsilon == other.epsilon
            and np.array_equal(self.payoff_row, other.payoff_row)
        )


def new_symmetric_game(
    n: int,
    payoff_row: Sequence[Sequence[float]] | np.ndarray,
    labels: Sequence[str] | None = None,
    epsilon: float = 1e-9,
) -> SymmetricGame:
    """Validates inputs and builds a :class:`SymmetricGame`.

    Args:
        n: declared number of strategies; must match the matrix shape.
        payoff_row: n-by-n row-player payoff matrix with finite entries.
        labels: optional distinct display names; defaults to ``s1 .. sn``.
        epsilon: non-negative comparison tolerance (default ``1e-9``).

    Raises:
        DimensionMismatchError: matrix is not exactly n-by-n.
        NonFiniteEntryError: some entry is NaN or infinite.
        DuplicateLabelError: labels are not pairwise distinct.
        InvalidConfigError: epsilon is negative or n < 1.
    """
    if n < 1:
        raise InvalidConfigError(f"n must be a positive integer, got {n}")
    if epsilon < 0:
        raise InvalidConfigError(f"epsilon must be non-negative, got {epsilon}")
    try:
        matrix = np.asarray(payoff_row, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DimensionMismatchError(f"payoff_row is not a rectangular {n}x{n} matrix") from exc
    if matrix.shape != (n, n):
        raise DimensionMismatchError(
            f"payoff_row has shape {matrix.shape}, expected ({n}, {n})"
        )
    if not np.isfinite(matrix).all():
        raise NonFiniteEntryError("payoff_row contains NaN or infinite entries")
    if labels is None:
        names = tuple(f"s{i + 1}" for i in range(n))
    else:
        names = tuple(str(x) for x in labels)
        if len(names) != n:
            raise DimensionMismatchError(f"expected {n} labels, got {len(names)}")
        if len(set(names)) != n:
            raise DuplicateLabelError("strategy labels must be pairwise distinct")
    matrix = matrix.copy()
    matrix.setflags(write=False)
    return SymmetricGame(n=n, payoff_row=matrix, labels=names, epsilon=float(epsilon))


def _check_strategy(game: SymmetricGame, s: int) -> None:
    if not 0 <= s < game.n:
        raise IndexOutOfRangeError(f"strategy index {s} outside [0, {game.n})")


def payoff(game: SymmetricGame, player: int, joint: JointStrategy) -> float:
    """Payoff of ``player`` (1 or 2) under the joint strategy.

    Player 2's payoff is read off the same matrix with the roles swapped:
    the game is symmetric, so player 2 playing b against a earns what the
    row player earns playing b against a.
    """
    row, col = joint
    _check_strategy(game, row)
    _check_strategy(game, col)
    if player == 1:
        return float(game.payoff_row[row, col])
    if player == 2:
        return float(game.payoff_row[col, row])
    raise ValueError(f"player must be 1 or 2, got {player}")


def best_response_mask(game: SymmetricGame) -> np.ndarray:
    """Boolean matrix with entry (s, t) true iff t is a best response to s.

    t is a best response to s when the row player's payoff for t against s
    is within ``epsilon`` of the column maximum.
    """
    col_max = game.payoff_row.max(axis=0)
    # mask[s, t] compares payoff_row[t, s] against the max of column s.
    return game.payoff_row.T >= (col_max - game.epsilon)[:, None]


def best_responses(game: SymmetricGame, s: int) -> set[int]:
    """The set of best responses to strategy ``s``; never empty."""
    _check_strategy(game, s)
    column = game.payoff_row[:, s]
    return {int(t) for t in np.flatnonzero(column >= column.max() - game.epsilon)}


def self_best_response_strategies(game: SymmetricGame) -> set[int]:
    """Strategies s with s a best response to itself, i.e. (s, s) is a pure Nash equilibrium."""
    mask = best_response_mask(game)
    return {int(s) for s in np.flatnonzero(mask.diagonal())}


def mutual_best_response_pairs(game: SymmetricGame) -> set[frozenset[int]]:
    """Unordered pairs of distinct strategies that are best responses to each other."""
    mask = best_response_mask(game)
    mutual = mask & mask.T
    pairs = set()
    for s1, s2 in np.argwhere(mutual):
        if s1 < s2:
            pairs.add(frozenset((int(s1), int(s2))))
    return pairs
