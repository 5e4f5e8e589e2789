"""Flattening small stochastic games into symmetric normal-form meta-games.

Both players share one action set. A stationary deterministic strategy
assigns an action to every state; enumerating all of them and computing
expected discounted payoffs for every strategy pair yields the meta-game
payoff matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetryDetectedError,
    DimensionMismatchError,
    DuplicateLabelError,
    ExplosionCapError,
    IndexOutOfRangeError,
    InvalidConfigError,
    SingularSystemError,
)
from .game import SymmetricGame, new_symmetric_game

DEFAULT_STRATEGY_CAP = 4096
_SYMMETRY_TOL = 1e-8
_RESIDUAL_TOL = 1e-10
_STOCHASTIC_TOL = 1e-12

DeterministicStrategy = tuple[int, ...]
"""Action index per state, in state order."""


@dataclass(frozen=True, eq=False)
class StochasticGame:
    """Two-player stochastic game with a shared action set.

    Attributes:
        states: state names.
        actions: action names, one set for both players.
        initial_dist: probability vector over states, shape (X,).
        transition: array (X, A, A, X); transition[x, a1, a2] is the
            distribution over next states.
        reward1, reward2: arrays (X, A, A) of immediate rewards.
        beta1, beta2: per-player discount factors in (0, 1).
    """

    states: tuple[str, ...]
    actions: tuple[str, ...]
    initial_dist: np.ndarray
    transition: np.ndarray
    reward1: np.ndarray
    reward2: np.ndarray
    beta1: float
    beta2: float


def new_stochastic_game(
    states,
    actions,
    initial_dist,
    transition,
    reward1,
    reward2,
    beta1: float,
    beta2: float,
) -> StochasticGame:
    """Validates shapes, probability normalization, and discounts."""
    state_names = tuple(str(x) for x in states)
    action_names = tuple(str(a) for a in actions)
    nx, na = len(state_names), len(action_names)
    if nx < 1 or na < 1:
        raise InvalidConfigError("need at least one state and one action")
    if len(set(state_names)) != nx:
        raise DuplicateLabelError("state names must be pairwise distinct")
    if len(set(action_names)) != na:
        raise DuplicateLabelError("action names must be pairwise distinct")

    d = np.asarray(initial_dist, dtype=float)
    p = np.asarray(transition, dtype=float)
    r1 = np.asarray(reward1, dtype=float)
    r2 = np.asarray(reward2, dtype=float)
    if d.shape != (nx,):
        raise DimensionMismatchError(f"initial_dist has shape {d.shape}, expected ({nx},)")
    if p.shape != (nx, na, na, nx):
        raise DimensionMismatchError(
            f"transition has shape {p.shape}, expected ({nx}, {na}, {na}, {nx})"
        )
    for r, name in ((r1, "reward1"), (r2, "reward2")):
        if r.shape != (nx, na, na):
            raise DimensionMismatchError(
                f"{name} has shape {r.shape}, expected ({nx}, {na}, {na})"
            )
        if not np.isfinite(r).all():
            raise InvalidConfigError(f"{name} contains non-finite entries")
    if (d < 0).any() or abs(d.sum() - 1.0) > _STOCHASTIC_TOL:
        raise InvalidConfigError("initial_dist must be a probability vector")
    if (p < 0).any() or (np.abs(p.sum(axis=3) - 1.0) > _STOCHASTIC_TOL).any():
        raise InvalidConfigError("every transition row must be a probability vector")
    for beta in (beta1, beta2):
        if not 0.0 < beta < 1.0:
            raise InvalidConfigError(f"discount factors must lie in (0, 1), got {beta}")

    for arr in (d, p, r1, r2):
        arr.setflags(write=False)
    return StochasticGame(
        states=state_names,
        actions=action_names,
        initial_dist=d,
        transition=p,
        reward1=r1,
        reward2=r2,
        beta1=float(beta1),
        beta2=float(beta2),
    )


def enumerate_strategies(
    sg: StochasticGame, cap: int = DEFAULT_STRATEGY_CAP
) -> list[DeterministicStrategy]:
    """All stationary deterministic strategies in lexicographic order.

    State-major: the action for the last state varies fastest. The order
    is part of the contract, so meta-game strategy indices are stable.
    """
    nx, na = len(sg.states), len(sg.actions)
    count = na**nx
    if count > cap:
        raise ExplosionCapError(f"{na}^{nx} = {count} strategies exceed cap {cap}")
    return [tuple(combo) for combo in itertools.product(range(na), repeat=nx)]


def evaluate_joint(
    sg: StochasticGame, s1: DeterministicStrategy, s2: DeterministicStrategy
) -> tuple[float, float]:
    """Expected discounted payoffs (player 1, player 2) for a fixed strategy pair.

    Solves v = r + beta * P v exactly for each player, then weights by the
    initial distribution. Raises SingularSystemError if the solve fails or
    leaves a residual above 1e-10, which indicates invalid transition data.
    """
    nx, na = len(sg.states), len(sg.actions)
    x_idx = np.arange(nx)
    a1 = np.asarray(s1, dtype=int)
    a2 = np.asarray(s2, dtype=int)
    for strat in (a1, a2):
        if strat.shape != (nx,):
            raise DimensionMismatchError(
                f"strategy must assign one action per state, got shape {strat.shape}"
            )
        if (strat < 0).any() or (strat >= na).any():
            raise IndexOutOfRangeError(f"action index outside [0, {na})")
    p_s = sg.transition[x_idx, a1, a2, :]
    totals = []
    for rewards, beta in ((sg.reward1, sg.beta1), (sg.reward2, sg.beta2)):
        r = rewards[x_idx, a1, a2]
        try:
            v = np.linalg.solve(np.eye(nx) - beta * p_s, r)
        except np.linalg.LinAlgError as exc:
            raise SingularSystemError(
                "discounted evaluation system is singular; transition data invalid"
            ) from exc
        residual = np.abs(v - (r + beta * (p_s @ v))).max()
        if residual > _RESIDUAL_TOL:
            raise SingularSystemError(f"evaluation residual {residual} exceeds {_RESIDUAL_TOL}")
        totals.append(float(sg.initial_dist @ v))
    return totals[0], totals[1]


def build_meta_game(
    sg: StochasticGame,
    cap: int = DEFAULT_STRATEGY_CAP,
    epsilon: float = 1e-9,
) -> SymmetricGame:
    """Meta-game over all deterministic strategies of a symmetric stochastic game.

    Computes player 1's payoff for every ordered strategy pair and
    independently player 2's payoff; if the two disagree anywhere beyond
    1e-8 the input is not symmetric under strategy-role swap and
    AsymmetryDetectedError is raised. Only player 1's matrix is kept.
    """
    strategies = enumerate_strategies(sg, cap=cap)
    n = len(strategies)
    j1 = np.empty((n, n))
    j2 = np.empty((n, n))
    for i, si in enumerate(strategies):
        for j, sj in enumerate(strategies):
            j1[i, j], j2[i, j] = evaluate_joint(sg, si, sj)
    gap = np.abs(j1 - j2.T).max()
    if gap > _SYMMETRY_TOL:
        raise AsymmetryDetectedError(
            f"meta-game payoffs asymmetric: max |J1(i,j) - J2(j,i)| = {gap}"
        )
    labels = ["-".join(sg.actions[a] for a in strat) for strat in strategies]
    return new_symmetric_game(n, j1, labels=labels, epsilon=epsilon)
