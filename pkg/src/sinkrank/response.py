"""Response digraphs of a symmetric game.

Two digraphs live on the strategy set itself (best-response and
non-dominated) and two on the joint-strategy set (strict best-response
deviations and weak better-response deviations). Joint strategies are
indexed ``r = row * n + col`` throughout the package; the algebra module
relies on exactly this layout.
"""

from __future__ import annotations

import numpy as np

from .digraph import Digraph, new_digraph
from .game import SymmetricGame, best_response_mask


def joint_index(n: int, row: int, col: int) -> int:
    """Node index of the joint strategy (row, col) in an n-strategy game."""
    return row * n + col


def joint_node_names(labels: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(f"({a},{b})" for a in labels for b in labels)


def best_response_digraph(game: SymmetricGame) -> Digraph:
    """Edge s1 -> s2 iff s2 is a best response to s1."""
    mask = best_response_mask(game)
    edges = ((int(u), int(v)) for u, v in np.argwhere(mask))
    return new_digraph(game.n, edges, game.labels)


def non_dominated_digraph(game: SymmetricGame) -> Digraph:
    """Edge s1 -> s2 iff s2 is not strictly dominated by s1.

    Concretely: some opponent strategy makes s2 at least as good (within
    epsilon) as s1. Every node carries a self-loop.
    """
    p = game.payoff_row
    # mask[s1, s2]: exists s with p[s2, s] >= p[s1, s] - epsilon.
    mask = (p[None, :, :] >= p[:, None, :] - game.epsilon).any(axis=2)
    edges = ((int(u), int(v)) for u, v in np.argwhere(mask))
    return new_digraph(game.n, edges, game.labels)


def _joint_deviation_masks(game: SymmetricGame, strict: bool) -> tuple[np.ndarray, np.ndarray]:
    """Boolean tensors for single-player deviations.

    Returns (row_dev, col_dev) where row_dev[a, b, a2] marks a legal move
    (a, b) -> (a2, b) of the row player and col_dev[a, b, b2] marks
    (a, b) -> (a, b2) of the column player.
    """
    n, p, eps = game.n, game.payoff_row, game.epsilon
    not_same = ~np.eye(n, dtype=bool)
    if strict:
        br = best_response_mask(game)
        # Row player's new payoff p[a2, b] must beat p[a, b] by more than eps,
        # and a2 must be a best response to the opponent's strategy b.
        row_dev = (p.T[None, :, :] > p[:, :, None] + eps) & br[None, :, :]
        col_dev = (p.T[:, None, :] > p.T[:, :, None] + eps) & br[:, None, :]
    else:
        row_dev = p.T[None, :, :] >= p[:, :, None] - eps
        col_dev = p.T[:, None, :] >= p.T[:, :, None] - eps
    row_dev = row_dev & not_same[:, None, :]
    col_dev = col_dev & not_same[None, :, :]
    return row_dev, col_dev


def _joint_digraph(game: SymmetricGame, strict: bool) -> Digraph:
    n = game.n
    row_dev, col_dev = _joint_deviation_masks(game, strict)
    edges = []
    for a, b, a2 in np.argwhere(row_dev):
        edges.append((int(a) * n + int(b), int(a2) * n + int(b)))
    for a, b, b2 in np.argwhere(col_dev):
        edges.append((int(a) * n + int(b), int(a) * n + int(b2)))
    return new_digraph(n * n, edges, joint_node_names(game.labels))


def joint_strict_br_digraph(game: SymmetricGame) -> Digraph:
    """Joint-strategy digraph of strict best-response deviations.

    Edge between joint strategies differing in exactly one coordinate,
    where the deviating player's new strategy is a best response to the
    opponent's unchanged strategy and strictly improves the deviator's
    payoff by more than epsilon. Has no self-loops.
    """
    return _joint_digraph(game, strict=True)


def joint_weak_br_digraph(game: SymmetricGame) -> Digraph:
    """Joint-strategy digraph of weak better-response deviations.

    Edge between joint strategies differing in exactly one coordinate,
    where the deviating player's payoff does not drop by more than
    epsilon. Self-loops are not emitted.
    """
    return _joint_digraph(game, strict=False)
