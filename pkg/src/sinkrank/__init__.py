"""Strategy evaluation and self-play learning for two-player symmetric games.

Strategies are ranked through sink equilibria (sink strongly connected
components) of response digraphs built from the payoff matrix, and two
seeded self-play variants walk the corresponding joint-strategy digraphs.
"""

from .algebra import (
    abar_k,
    cartesian_product_adjacency,
    joint_strict_adjacency_from_formula,
    kronecker,
)
from .digraph import (
    Digraph,
    SinkEquilibriumSet,
    adjacency_matrix,
    digraph_from_adjacency,
    new_digraph,
    scc_decompose,
    sink_equilibria,
    to_dot,
)
from .estimators import SelfPlayFrequencyEstimator, SinkEquilibriumRanker
from .game import (
    JointStrategy,
    SymmetricGame,
    best_responses,
    mutual_best_response_pairs,
    new_symmetric_game,
    payoff,
    self_best_response_strategies,
)
from .metagame import (
    StochasticGame,
    build_meta_game,
    enumerate_strategies,
    evaluate_joint,
    new_stochastic_game,
)
from .metrics import (
    EvaluationReport,
    evaluate_bd,
    evaluate_nd,
    joint_preferred_strategies,
)
from .oracle import (
    GameFilter,
    TheoremReport,
    brute_force_scc,
    check_theorems,
    random_game,
)
from .response import (
    best_response_digraph,
    joint_strict_br_digraph,
    joint_weak_br_digraph,
    non_dominated_digraph,
)
from .selfplay import (
    SelfPlayConfig,
    SelfPlayTrace,
    batch_frequencies,
    derive_run_seed,
    run_self_play,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "EvaluationReport",
    "GameFilter",
    "JointStrategy",
    "SelfPlayConfig",
    "SelfPlayFrequencyEstimator",
    "SelfPlayTrace",
    "SinkEquilibriumRanker",
    "SinkEquilibriumSet",
    "StochasticGame",
    "SymmetricGame",
    "TheoremReport",
    "abar_k",
    "adjacency_matrix",
    "batch_frequencies",
    "best_response_digraph",
    "best_responses",
    "brute_force_scc",
    "build_meta_game",
    "cartesian_product_adjacency",
    "check_theorems",
    "derive_run_seed",
    "digraph_from_adjacency",
    "enumerate_strategies",
    "evaluate_bd",
    "evaluate_joint",
    "evaluate_nd",
    "joint_preferred_strategies",
    "joint_strict_adjacency_from_formula",
    "joint_strict_br_digraph",
    "joint_weak_br_digraph",
    "kronecker",
    "mutual_best_response_pairs",
    "new_digraph",
    "new_stochastic_game",
    "new_symmetric_game",
    "non_dominated_digraph",
    "payoff",
    "random_game",
    "run_self_play",
    "scc_decompose",
    "self_best_response_strategies",
    "sink_equilibria",
    "to_dot",
]
