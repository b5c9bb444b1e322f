from .base import Population, distinct_indices
from .bees import ABCConfig, ArtificialBeeColony, neighbor_move, selection_weights
from .cuckoo import (
    CSConfig,
    CuckooSearch,
    levy_from_normals,
    levy_matrix,
    levy_step,
    mantegna_sigma,
)
from .de import CR_POOL, DEAConfig, F_POOL, AdaptiveDE, build_mutants, crossover_mask
from .ga import GAConfig, GeneticAlgorithm, blend, tournament_pick
from .pso import PSOWConfig, InertiaWeightPSO, inertia_weight, velocity_update
from .runner import (
    ALGORITHMS,
    GENERATION_COST_FACTOR,
    RunResult,
    algorithm_ids,
    make_algorithm,
    run,
)

__all__ = [
    "ABCConfig",
    "ALGORITHMS",
    "AdaptiveDE",
    "ArtificialBeeColony",
    "CR_POOL",
    "CSConfig",
    "CuckooSearch",
    "DEAConfig",
    "F_POOL",
    "GAConfig",
    "GENERATION_COST_FACTOR",
    "GeneticAlgorithm",
    "InertiaWeightPSO",
    "PSOWConfig",
    "Population",
    "RunResult",
    "algorithm_ids",
    "blend",
    "build_mutants",
    "crossover_mask",
    "distinct_indices",
    "inertia_weight",
    "levy_from_normals",
    "levy_matrix",
    "levy_step",
    "make_algorithm",
    "mantegna_sigma",
    "neighbor_move",
    "run",
    "selection_weights",
    "tournament_pick",
    "velocity_update",
]
