"""Two-archive, multi-indicator many-objective optimization toolkit.

Public surface: the optimizer (:func:`run`, :class:`Sra3Config`,
:class:`NormalizationVariant`), the DTLZ/WFG problem registry, hypervolume
and IGD metrics, the rank-sum comparison and bias-study analysis helpers,
and the batch experiment driver behind the ``sra3`` command.
"""

from .algorithm import (
    NormalizationVariant,
    RunResult,
    Sra3Config,
    generate_offspring,
    run,
    update_ca,
    update_ca_normalized,
    update_da,
)
from .analysis import ComparisonVerdict, mean_eps_profile, sample_similar_front, wilcoxon_rank_sum
from .core import Archive, Individual, ObjectiveVector, RandomSource, dominates, nondominated_subset
from .indicators import (
    EpsParams,
    eps_indicator,
    fitness_i1,
    fitness_i2,
    max_abs_eps,
    normalize_objectives,
    sde_distance,
)
from .metrics import MetricConfig, hypervolume, hypervolume_exact, hypervolume_mc, igd, normalized_hv
from .problems import ProblemSpec, available_problems, get_problem, sample_reference_front

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Archive",
    "ComparisonVerdict",
    "EpsParams",
    "Individual",
    "MetricConfig",
    "NormalizationVariant",
    "ObjectiveVector",
    "ProblemSpec",
    "RandomSource",
    "RunResult",
    "Sra3Config",
    "available_problems",
    "dominates",
    "eps_indicator",
    "fitness_i1",
    "fitness_i2",
    "generate_offspring",
    "get_problem",
    "hypervolume",
    "hypervolume_exact",
    "hypervolume_mc",
    "igd",
    "max_abs_eps",
    "mean_eps_profile",
    "nondominated_subset",
    "normalize_objectives",
    "normalized_hv",
    "run",
    "sample_reference_front",
    "sample_similar_front",
    "sde_distance",
    "update_ca",
    "update_ca_normalized",
    "update_da",
    "wilcoxon_rank_sum",
]
