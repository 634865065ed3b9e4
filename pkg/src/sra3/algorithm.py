"""Two-archive indicator-based many-objective optimizer.

The engine maintains a convergence archive (CA, epsilon-indicator fitness)
and a diversity archive (DA, shift-based density fitness), both capped at N.
Each generation mates parents drawn adaptively from the two archives,
evaluates N offspring, and lets each archive select the best N from its own
union with the offspring. Normalization variants optionally min-max scale
the candidate pool before fitness assignment:

* ``none``       raw objectives in both archives
* ``eps``        scaled epsilon fitness in the CA (iterative removal with a
                 pool-dependent exponent scale)
* ``sde``        scaled shift-based density in the DA
* ``both``       both of the above

The final result is the non-dominated subset of the CA.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .core import Archive, Individual, ObjectiveVector, RandomSource, objectives_matrix
from .indicators import (
    EpsParams,
    _i1_from_eps_matrix,
    fitness_i2,
    max_abs_eps,
    normalize_objectives,
)
from .problems import ProblemSpec
from .variation import VariationParams, polynomial_mutation, sbx_pair

__all__ = [
    "NormalizationVariant",
    "Sra3Config",
    "RunResult",
    "ParentalStats",
    "parental_stats",
    "generate_offspring",
    "update_ca",
    "update_ca_normalized",
    "update_da",
    "run",
]

logger = logging.getLogger(__name__)

_MC_SEED_KEY = 0xA11CE  # spawn key separating metric sampling from the run stream


class NormalizationVariant(enum.Enum):
    NONE = "none"
    EPS_ONLY = "eps"
    SDE_ONLY = "sde"
    BOTH = "both"

    @classmethod
    def parse(cls, value) -> "NormalizationVariant":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            options = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown variant {value!r}; choose from: {options}") from None

    @property
    def normalizes_ca(self) -> bool:
        return self in (NormalizationVariant.EPS_ONLY, NormalizationVariant.BOTH)

    @property
    def normalizes_da(self) -> bool:
        return self in (NormalizationVariant.SDE_ONLY, NormalizationVariant.BOTH)


@dataclass(frozen=True)
class Sra3Config:
    """Run settings; defaults follow the standard benchmark protocol."""

    archive_capacity: int
    seed: int
    variant: NormalizationVariant = NormalizationVariant.NONE
    max_evaluations: int = 90_000
    eps: EpsParams = field(default_factory=EpsParams)
    variation: VariationParams = field(default_factory=VariationParams)

    def __post_init__(self):
        object.__setattr__(self, "variant", NormalizationVariant.parse(self.variant))
        if self.archive_capacity < 2:
            raise ValueError(f"archive capacity must be at least 2, got {self.archive_capacity}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.max_evaluations < 2 * self.archive_capacity:
            raise ValueError(
                f"budget of {self.max_evaluations} evaluations cannot cover "
                f"initialization of two archives of {self.archive_capacity}"
            )


# ---------------------------------------------------------------------------
# parental selection


@dataclass(frozen=True)
class ParentalStats:
    """Non-domination summaries steering parent choice for one generation.

    p_c/p_d: fraction of each archive not dominated within that archive.
    rho_c/rho_d: shares of the combined pool's non-dominated members that
    come from the CA and DA respectively (the pool is a multiset, so a
    solution present in both archives counts once per occurrence).
    """

    p_c: float
    p_d: float
    rho_c: float
    rho_d: float


def parental_stats(ca_objectives: np.ndarray, da_objectives: np.ndarray) -> ParentalStats:
    Fc = np.asarray(ca_objectives, dtype=np.float64)
    Fd = np.asarray(da_objectives, dtype=np.float64)
    p_c = float(kernels.nondominated_mask(Fc).mean())
    p_d = float(kernels.nondominated_mask(Fd).mean())
    pool_mask = kernels.nondominated_mask(np.vstack([Fc, Fd]))
    total = int(pool_mask.sum())
    if total == 0:  # cannot happen for finite pools; defensive split
        rho_c = rho_d = 0.5
    else:
        rho_c = float(pool_mask[: len(Fc)].sum()) / total
        rho_d = float(pool_mask[len(Fc) :].sum()) / total
    return ParentalStats(p_c=p_c, p_d=p_d, rho_c=rho_c, rho_d=rho_d)


def select_parents(
    ca: Archive, da: Archive, stats: ParentalStats, rng: RandomSource
) -> tuple[Individual, Individual, bool]:
    """One mating pair per the adaptive rule; returns (p1, p2, p2_from_ca).

    The first parent comes from whichever archive has the higher internal
    non-dominated fraction (ties go to the DA); the second comes from the
    CA with probability rho_c / (rho_c + rho_d).
    """
    pool1 = ca.members if stats.p_c > stats.p_d else da.members
    p1 = pool1[int(rng.integers(0, len(pool1)))]
    denom = stats.rho_c + stats.rho_d
    threshold = stats.rho_c / denom if denom > 0 else 0.5
    from_ca = bool(rng.random() < threshold)
    pool2 = ca.members if from_ca else da.members
    p2 = pool2[int(rng.integers(0, len(pool2)))]
    return p1, p2, from_ca


def generate_offspring(
    ca: Archive,
    da: Archive,
    problem: ProblemSpec,
    params: VariationParams,
    rng: RandomSource,
) -> list[Individual]:
    """N unevaluated offspring: adaptive parent choice, SBX, mutation.

    Exactly one child per mating (the first SBX child, then mutated). The
    per-offspring draw order is: parent-1 index, archive coin, parent-2
    index, then the crossover and mutation draws (see variation module).
    """
    stats = parental_stats(ca.objectives_matrix(), da.objectives_matrix())
    lower = np.asarray(problem.lower, dtype=np.float64)
    upper = np.asarray(problem.upper, dtype=np.float64)
    offspring: list[Individual] = []
    for _ in range(ca.capacity):
        p1, p2, _ = select_parents(ca, da, stats, rng)
        child, _ = sbx_pair(p1.decision, p2.decision, lower, upper, params, rng)
        child = polynomial_mutation(child, lower, upper, params, rng)
        offspring.append(Individual(child))
    return offspring


# ---------------------------------------------------------------------------
# archive updates


def _top_by_fitness(fit: np.ndarray, keep: int) -> np.ndarray:
    """Indices of the ``keep`` largest fitness values, ties to lower index,
    returned in ascending input order."""
    order = np.argsort(-fit, kind="stable")
    return np.sort(order[:keep])


def _require_pool(pool_size: int, keep: int, what: str) -> None:
    if pool_size < keep:
        raise ValueError(f"{what} received {pool_size} candidates for capacity {keep}")


def select_ca_indices(F: np.ndarray, capacity: int, k: float) -> tuple[np.ndarray, bool]:
    """Unnormalized CA survivor indices: one rank-select on epsilon fitness.

    No removal loop: the survivor set is exactly the top-N by I1 fitness,
    which keeps the update at sort cost beyond the pairwise matrix.
    """
    _require_pool(len(F), capacity, "CA update")
    fit, clamped = _i1_from_eps_matrix(kernels.eps_matrix(F), k)
    return _top_by_fitness(fit, capacity), clamped


def select_ca_indices_normalized(F: np.ndarray, capacity: int, k: float) -> tuple[np.ndarray, int]:
    """Normalized CA survivors: scale, rescale exponent by c, remove worst
    one at a time (re-adding each removed rival's contribution)."""
    _require_pool(len(F), capacity, "CA update")
    if len(F) == capacity:
        return np.arange(capacity, dtype=np.int64), 0
    scaled, _, _ = normalize_objectives(F)
    E = kernels.eps_matrix(scaled)
    c = float(np.max(np.abs(E)))
    if c == 0.0:
        # all candidates identical in objective space: every pairwise term
        # degenerates to -1 and removal order is by index
        W = np.ones_like(E)
    else:
        W = np.exp(-E / (c * k))
    return kernels.ca_reduce(W, capacity)


def select_da_indices(F: np.ndarray, capacity: int, normalize: bool) -> np.ndarray:
    """DA survivor indices: top-N by shift-based density fitness."""
    _require_pool(len(F), capacity, "DA update")
    pool = normalize_objectives(F)[0] if normalize else F
    fit = fitness_i2(pool, capacity)
    return _top_by_fitness(fit, capacity)


def _archive_from_indices(pool: Sequence[Individual], idx: np.ndarray, capacity: int) -> Archive:
    return Archive((pool[i] for i in idx), capacity)


def update_ca(h1: Sequence[Individual], config: Sra3Config) -> Archive:
    """Select the CA from the union pool using raw-objective epsilon fitness."""
    pool = list(h1)
    idx, clamped = select_ca_indices(
        objectives_matrix(pool), config.archive_capacity, config.eps.k
    )
    if clamped:
        logger.debug("epsilon fitness clamped to sentinel during CA update")
    return _archive_from_indices(pool, idx, config.archive_capacity)


def update_ca_normalized(h1: Sequence[Individual], config: Sra3Config) -> Archive:
    """Select the CA from the union pool using scaled epsilon fitness."""
    pool = list(h1)
    idx, _ = select_ca_indices_normalized(
        objectives_matrix(pool), config.archive_capacity, config.eps.k
    )
    return _archive_from_indices(pool, idx, config.archive_capacity)


def update_da(h2: Sequence[Individual], config: Sra3Config) -> Archive:
    """Select the DA from the union pool by shift-based density."""
    pool = list(h2)
    idx = select_da_indices(
        objectives_matrix(pool), config.archive_capacity, config.variant.normalizes_da
    )
    return _archive_from_indices(pool, idx, config.archive_capacity)


# ---------------------------------------------------------------------------
# full runs


@dataclass
class RunResult:
    """Outcome of one seeded run: the final front plus metrics and timings.

    Everything except ``timing`` is a pure function of (problem, config), so
    rerunning with the same seed reproduces the record exactly up to that
    block; the serialization helpers in the experiment module rely on this.
    """

    problem: str
    m: int
    variant: str
    seed: int
    archive_capacity: int
    max_evaluations: int
    evaluations: int
    eps_k: float
    final_decisions: np.ndarray
    final_objectives: np.ndarray
    hv: float | None = None
    igd: float | None = None
    mc_seed: int | None = None
    timing: dict[str, float] = field(default_factory=dict)
    backend: str = ""

    @property
    def n_final(self) -> int:
        return len(self.final_objectives)


def derive_mc_seed(seed: int) -> int:
    """Metric-sampling seed for a run seed: deterministic but decoupled."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(_MC_SEED_KEY,))
    return int(ss.generate_state(1)[0])


def run(
    problem: ProblemSpec,
    config: Sra3Config,
    metric_config=None,
    reference_front: np.ndarray | None = None,
) -> RunResult:
    """Execute one seeded run and score the final front.

    ``metric_config=None`` uses metric defaults; pass ``reference_front`` to
    reuse a cached front (the experiment driver does, so every run of a
    problem is scored against the same reference).
    """
    from .metrics import MetricConfig, igd as igd_metric, normalized_hv

    if metric_config is None:
        metric_config = MetricConfig()
    n_cap = config.archive_capacity
    rng = RandomSource(config.seed)
    lower = np.asarray(problem.lower, dtype=np.float64)
    upper = np.asarray(problem.upper, dtype=np.float64)
    timing = {key: 0.0 for key in ("initialization", "offspring", "evaluation", "update_ca", "update_da", "metrics")}
    clamp_warned = False

    def _evaluated(X: np.ndarray) -> list[Individual]:
        F = problem.evaluate_batch(X)
        return [
            Individual(x, ObjectiveVector(f)) for x, f in zip(X, F)
        ]

    t0 = time.perf_counter()
    ca_members = _evaluated(rng.uniform(lower, upper, (n_cap, problem.n_var)))
    da_members = _evaluated(rng.uniform(lower, upper, (n_cap, problem.n_var)))
    evaluations = 2 * n_cap
    ca = Archive(ca_members, n_cap)
    da = Archive(da_members, n_cap)
    timing["initialization"] = time.perf_counter() - t0

    while evaluations + n_cap <= config.max_evaluations:
        t0 = time.perf_counter()
        offspring = generate_offspring(ca, da, problem, config.variation, rng)
        timing["offspring"] += time.perf_counter() - t0

        t0 = time.perf_counter()
        X = np.asarray([ind.decision for ind in offspring], dtype=np.float64)
        q = _evaluated(X)
        evaluations += n_cap
        timing["evaluation"] += time.perf_counter() - t0

        t0 = time.perf_counter()
        h1 = list(ca.members) + q
        if config.variant.normalizes_ca:
            ca = update_ca_normalized(h1, config)
        else:
            pool_f = objectives_matrix(h1)
            idx, clamped = select_ca_indices(pool_f, n_cap, config.eps.k)
            if clamped and not clamp_warned:
                logger.warning(
                    "run(seed=%d, %s m=%d): epsilon fitness clamped to sentinel; "
                    "raw objective spread is large relative to k=%g",
                    config.seed,
                    problem.name,
                    problem.m,
                    config.eps.k,
                )
                clamp_warned = True
            ca = _archive_from_indices(h1, idx, n_cap)
        timing["update_ca"] += time.perf_counter() - t0

        t0 = time.perf_counter()
        da = update_da(list(da.members) + q, config)
        timing["update_da"] += time.perf_counter() - t0

    final = [ind for ind, keep in zip(ca.members, kernels.nondominated_mask(ca.objectives_matrix())) if keep]
    final_F = objectives_matrix(final)
    final_X = np.asarray([ind.decision for ind in final], dtype=np.float64)

    t0 = time.perf_counter()
    mc_seed = derive_mc_seed(config.seed)
    hv_value = normalized_hv(final_F, problem.nadir(), metric_config, mc_seed)
    igd_value = None
    if reference_front is None:
        from .problems import sample_reference_front

        reference_front = sample_reference_front(
            problem, metric_config.igd_reference_size, RandomSource(metric_config.reference_seed)
        )
    igd_value = igd_metric(final_F, reference_front)
    timing["metrics"] = time.perf_counter() - t0

    return RunResult(
        problem=problem.name,
        m=problem.m,
        variant=config.variant.value,
        seed=config.seed,
        archive_capacity=n_cap,
        max_evaluations=config.max_evaluations,
        evaluations=evaluations,
        eps_k=config.eps.k,
        final_decisions=final_X,
        final_objectives=final_F,
        hv=hv_value,
        igd=igd_value,
        mc_seed=mc_seed,
        timing=timing,
        backend=kernels.active_backend(),
    )
