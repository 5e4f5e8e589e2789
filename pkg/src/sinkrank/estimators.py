"""Scikit-learn style estimators wrapping the evaluation and self-play cores.

Both estimators take the row-player payoff matrix as ``X`` in ``fit`` and
expose their results as fitted attributes, so they compose with
``sklearn.base.clone``, ``get_params`` / ``set_params``, and pipelines
that pass square payoff matrices around.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .game import new_symmetric_game
from .metrics import evaluate_bd, evaluate_nd
from .response import best_response_digraph, non_dominated_digraph
from .selfplay import SelfPlayConfig, batch_frequencies


def _validated_payoff(X) -> np.ndarray:
    X = check_array(X, dtype=float)
    if X.shape[0] != X.shape[1]:
        raise ValueError(f"payoff matrix must be square, got shape {X.shape}")
    return X


class SinkEquilibriumRanker(BaseEstimator):
    """Ranks strategies of a symmetric game by sink-equilibrium membership.

    Parameters
    ----------
    metric : {"bd", "nd"}, default="bd"
        "bd" prefers strategies inside sink equilibria of the
        best-response digraph; "nd" those of the non-dominated digraph.
    epsilon : float, default=1e-9
        Payoff comparison tolerance.

    Attributes
    ----------
    n_strategies_ : int
    game_ : SymmetricGame
    digraph_ : Digraph
        The strategy-level digraph the metric is computed on.
    sink_equilibria_ : SinkEquilibriumSet
    preferred_ : ndarray of int
        Sorted indices of preferred strategies.
    metric_values_ : ndarray of float, shape (n_strategies,)
        1.0 for preferred strategies, 0.0 otherwise.
    """

    def __init__(self, metric: str = "bd", epsilon: float = 1e-9):
        self.metric = metric
        self.epsilon = epsilon

    def fit(self, X, y=None):
        X = _validated_payoff(X)
        if self.metric not in ("bd", "nd"):
            raise ValueError(f"metric must be 'bd' or 'nd', got {self.metric!r}")
        game = new_symmetric_game(X.shape[0], X, epsilon=self.epsilon)
        if self.metric == "bd":
            report = evaluate_bd(game)
            self.digraph_ = best_response_digraph(game)
        else:
            report = evaluate_nd(game)
            self.digraph_ = non_dominated_digraph(game)
        self.game_ = game
        self.n_strategies_ = game.n
        self.sink_equilibria_ = report.sink_equilibria
        self.preferred_ = np.array(sorted(report.preferred), dtype=int)
        self.metric_values_ = np.array(
            [report.metric_values[s] for s in range(game.n)], dtype=float
        )
        return self

    def predict(self, indices=None):
        """Boolean mask: is each strategy preferred? Defaults to all strategies."""
        check_is_fitted(self)
        if indices is None:
            indices = np.arange(self.n_strategies_)
        indices = np.asarray(indices, dtype=int)
        return self.metric_values_[indices] > 0.5

    def fit_predict(self, X, y=None):
        return self.fit(X).predict()


class SelfPlayFrequencyEstimator(BaseEstimator):
    """Estimates how often each strategy survives seeded self-play.

    Parameters
    ----------
    variant : {"strict", "weak"}, default="strict"
    tau_max : int, default=300
        Episodes per run.
    memory_length : int, default=10
        Final-memory window whose strategies count as learnt.
    runs : int, default=10000
    seed : int, default=0
    epsilon : float, default=1e-9

    Attributes
    ----------
    frequencies_ : ndarray of float, shape (n_strategies,)
        Fraction of runs in which each strategy was learnt.
    support_ : ndarray of int
        Strategies with positive frequency.
    n_strategies_ : int
    """

    def __init__(
        self,
        variant: str = "strict",
        tau_max: int = 300,
        memory_length: int = 10,
        runs: int = 10000,
        seed: int = 0,
        epsilon: float = 1e-9,
    ):
        self.variant = variant
        self.tau_max = tau_max
        self.memory_length = memory_length
        self.runs = runs
        self.seed = seed
        self.epsilon = epsilon

    def fit(self, X, y=None):
        X = _validated_payoff(X)
        game = new_symmetric_game(X.shape[0], X, epsilon=self.epsilon)
        config = SelfPlayConfig(
            tau_max=self.tau_max, memory_length=self.memory_length, seed=self.seed
        )
        freq = batch_frequencies(game, self.variant, config, self.runs)
        self.game_ = game
        self.n_strategies_ = game.n
        self.frequencies_ = np.array([freq[s] for s in range(game.n)], dtype=float)
        self.support_ = np.flatnonzero(self.frequencies_ > 0.0)
        return self

    def predict(self, indices=None):
        """Learnt frequency per strategy. Defaults to all strategies."""
        check_is_fitted(self)
        if indices is None:
            indices = np.arange(self.n_strategies_)
        indices = np.asarray(indices, dtype=int)
        return self.frequencies_[indices]
