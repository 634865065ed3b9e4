"""Batch experiment execution, result persistence, and summaries.

One experiment = a set of (problem, m) cells, one or more normalization
variants, ``runs`` seeded repetitions each (seed = base_seed + run_index).
Every run produces a JSON record plus a CSV of its final objectives; the
summarizer aggregates directories of records into mean-metric tables and
pairwise rank-sum verdicts.

Records are written atomically (temp file then rename), so concurrent
workers and interrupted experiments never leave half-written files. Apart
from the ``timing`` block a record is a deterministic function of its
configuration; rerunning reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .algorithm import NormalizationVariant, RunResult, Sra3Config, run
from .analysis import FrontSample, mean_eps_profile, sample_similar_front, wilcoxon_rank_sum
from .core import RandomSource
from .metrics import MetricConfig
from .problems import get_problem, sample_reference_front

__all__ = [
    "ConfigError",
    "DEFAULT_ARCHIVE_SIZES",
    "default_archive_size",
    "ExperimentConfig",
    "run_experiment",
    "record_from_result",
    "load_records",
    "summarize_records",
    "write_summary",
    "bias_study",
    "write_bias_csv",
    "write_front_csv",
]

RECORD_SCHEMA = "sra3-run/1"

# archive capacities of the standard protocol, keyed by objective count
DEFAULT_ARCHIVE_SIZES = {5: 210, 10: 275, 15: 135, 20: 135, 25: 135}


class ConfigError(ValueError):
    """Invalid experiment configuration (maps to CLI exit code 2)."""


def default_archive_size(m: int) -> int | None:
    return DEFAULT_ARCHIVE_SIZES.get(int(m))


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """One experiment: (problem, m) cells x variants x seeded repetitions.

    ``archive_sizes`` maps objective count to capacity; entries fall back to
    the standard protocol table, and every requested m must resolve.
    """

    problems: tuple[tuple[str, int], ...]
    variants: tuple[str, ...]
    runs: int = 20
    base_seed: int = 1
    archive_sizes: dict[int, int] | None = None
    max_evaluations: int = 90_000
    out_dir: Path = Path("results")
    jobs: int = 1
    metric_config: MetricConfig = field(default_factory=MetricConfig)

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError(f"runs must be positive, got {self.runs}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be positive, got {self.jobs}")
        if not self.variants:
            raise ConfigError("at least one variant is required")
        if not self.problems:
            raise ConfigError("at least one (problem, m) cell is required")
        try:
            parsed = tuple(NormalizationVariant.parse(v).value for v in self.variants)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        cells = tuple((str(name), int(m)) for name, m in self.problems)
        sizes = dict(DEFAULT_ARCHIVE_SIZES)
        sizes.update(self.archive_sizes or {})
        for name, m in cells:
            if m not in sizes:
                raise ConfigError(
                    f"no archive size for m={m} ({name}); pass one via archive_sizes"
                )
        object.__setattr__(self, "variants", parsed)
        object.__setattr__(self, "problems", cells)
        object.__setattr__(self, "archive_sizes", sizes)
        object.__setattr__(self, "out_dir", Path(self.out_dir))

    def capacity_for(self, m: int) -> int:
        return self.archive_sizes[int(m)]


def _atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def record_from_result(result: RunResult, run_index: int, metric_config: MetricConfig) -> dict:
    """JSON-ready record for one run; floats keep full round-trip precision."""
    return {
        "schema": RECORD_SCHEMA,
        "problem": result.problem,
        "m": result.m,
        "variant": result.variant,
        "run_index": int(run_index),
        "seed": result.seed,
        "archive_capacity": result.archive_capacity,
        "max_evaluations": result.max_evaluations,
        "evaluations": result.evaluations,
        "eps_k": result.eps_k,
        "hv": result.hv,
        "igd": result.igd,
        "mc_seed": result.mc_seed,
        "hv_mc_samples": metric_config.hv_mc_samples,
        "igd_reference_size": metric_config.igd_reference_size,
        "reference_seed": metric_config.reference_seed,
        "n_final": result.n_final,
        "final_objectives": np.asarray(result.final_objectives).tolist(),
        "final_decisions": np.asarray(result.final_decisions).tolist(),
        "backend": result.backend,
        "timing": {k: float(v) for k, v in result.timing.items()},
    }


def _objectives_csv(F: np.ndarray) -> str:
    m = F.shape[1] if len(F) else 0
    lines = [",".join(f"f{i + 1}" for i in range(m))]
    for row in F:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def _execute_one(args: tuple) -> str:
    """Worker: one seeded run, written to disk; returns the JSON path."""
    (problem_name, m, variant, capacity, max_evals, seed, run_index,
     metric_config, reference, out_dir) = args
    spec = get_problem(problem_name, m)
    config = Sra3Config(
        archive_capacity=capacity,
        seed=seed,
        variant=variant,
        max_evaluations=max_evals,
    )
    result = run(spec, config, metric_config, reference)
    record = record_from_result(result, run_index, metric_config)
    stem = f"{problem_name}_m{m}_{variant}_run{run_index:03d}"
    json_path = Path(out_dir) / f"{stem}.json"
    _atomic_write_text(json_path, json.dumps(record, indent=2, sort_keys=True) + "\n")
    _atomic_write_text(Path(out_dir) / f"{stem}.csv", _objectives_csv(result.final_objectives))
    return str(json_path)


def run_experiment(cfg: ExperimentConfig) -> list[str]:
    """Execute every (cell, variant, run) combination and persist the records.

    Returns the written JSON paths. All cells are validated before the first
    run starts. Runs are independent; with ``jobs > 1`` they execute in a
    process pool, and because each run's seed is fixed up front the outputs
    are identical to a sequential execution.
    """
    specs = {}
    for name, m in cfg.problems:
        try:
            spec = get_problem(name, m)
            Sra3Config(
                archive_capacity=cfg.capacity_for(m),
                seed=cfg.base_seed,
                variant=cfg.variants[0],
                max_evaluations=cfg.max_evaluations,
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        specs[(spec.name, m)] = spec
    tasks = []
    for (name, m), spec in specs.items():
        reference = sample_reference_front(
            spec,
            cfg.metric_config.igd_reference_size,
            RandomSource(cfg.metric_config.reference_seed),
        )
        tasks.extend(
            (
                spec.name,
                m,
                variant,
                cfg.capacity_for(m),
                cfg.max_evaluations,
                cfg.base_seed + run_index,
                run_index,
                cfg.metric_config,
                reference,
                str(cfg.out_dir),
            )
            for variant in cfg.variants
            for run_index in range(cfg.runs)
        )
    if cfg.jobs == 1:
        return [_execute_one(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        return list(pool.map(_execute_one, tasks))


def load_records(directory) -> list[dict]:
    """All run records found under ``directory`` (non-recursive), sorted by
    (problem, m, variant, run_index)."""
    directory = Path(directory)
    records = []
    for path in sorted(directory.glob("*.json")):
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            continue
        if isinstance(data, dict) and data.get("schema") == RECORD_SCHEMA:
            records.append(data)
    records.sort(key=lambda r: (r["problem"], r["m"], r["variant"], r["run_index"]))
    return records


def summarize_records(records: Sequence[dict], alpha: float = 0.05) -> tuple[list[dict], list[dict]]:
    """Aggregate records into per-cell stats and pairwise rank-sum verdicts.

    Verdict marks read left-to-right: "+" means variant_a is significantly
    better than variant_b on that metric (hypervolume: larger is better;
    IGD: smaller is better), "-" the reverse, "=" no significant difference.
    """
    groups: dict[tuple, dict[str, list[dict]]] = {}
    for rec in records:
        cell = groups.setdefault((rec["problem"], rec["m"]), {})
        cell.setdefault(rec["variant"], []).append(rec)

    cells: list[dict] = []
    verdicts: list[dict] = []
    for (problem, m), by_variant in sorted(groups.items()):
        stats = {}
        for variant, recs in sorted(by_variant.items()):
            hv = np.asarray([r["hv"] for r in recs], dtype=np.float64)
            igd_vals = np.asarray([r["igd"] for r in recs], dtype=np.float64)
            stats[variant] = (hv, igd_vals)
        best = max(stats, key=lambda v: stats[v][0].mean())
        for variant, (hv, igd_vals) in stats.items():
            cells.append(
                {
                    "problem": problem,
                    "m": m,
                    "variant": variant,
                    "runs": len(hv),
                    "hv_mean": float(hv.mean()),
                    "hv_std": float(hv.std(ddof=1)) if len(hv) > 1 else 0.0,
                    "igd_mean": float(igd_vals.mean()),
                    "igd_std": float(igd_vals.std(ddof=1)) if len(igd_vals) > 1 else 0.0,
                    "best_hv": variant == best,
                }
            )
        variants = sorted(stats)
        for i, va in enumerate(variants):
            for vb in variants[i + 1 :]:
                if min(len(stats[va][0]), len(stats[vb][0])) < 2:
                    continue
                for metric, index, higher_better in (("hv", 0, True), ("igd", 1, False)):
                    sa = stats[va][index]
                    sb = stats[vb][index]
                    verdict = wilcoxon_rank_sum(
                        sa if higher_better else -sa,
                        sb if higher_better else -sb,
                        alpha=alpha,
                    )
                    mark = {"win": "+", "loss": "-", "tie": "="}[verdict.outcome]
                    verdicts.append(
                        {
                            "problem": problem,
                            "m": m,
                            "metric": metric,
                            "variant_a": va,
                            "variant_b": vb,
                            "mark": mark,
                            "p_value": verdict.p_value,
                            "mean_a": float(sa.mean()),
                            "mean_b": float(sb.mean()),
                        }
                    )
    return cells, verdicts


def write_summary(cells: list[dict], verdicts: list[dict], out_dir) -> tuple[str, str]:
    """Write summary.csv and verdicts.csv; returns their paths."""
    out_dir = Path(out_dir)
    summary_path = out_dir / "summary.csv"
    verdict_path = out_dir / "verdicts.csv"

    def _csv_text(rows: list[dict], columns: list[str]) -> str:
        import io

        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row[k] for k in columns})
        return buf.getvalue()

    _atomic_write_text(
        summary_path,
        _csv_text(
            cells,
            ["problem", "m", "variant", "runs", "hv_mean", "hv_std", "igd_mean", "igd_std", "best_hv"],
        ),
    )
    _atomic_write_text(
        verdict_path,
        _csv_text(
            verdicts,
            ["problem", "m", "metric", "variant_a", "variant_b", "mark", "p_value", "mean_a", "mean_b"],
        ),
    )
    return str(summary_path), str(verdict_path)


def format_summary_table(cells: list[dict]) -> str:
    """Human-readable view of the summary cells; best-HV variant starred."""
    if not cells:
        return "(no records)"
    header = f"{'problem':<8} {'m':>3} {'variant':<7} {'runs':>4} {'HV mean':>12} {'HV std':>10} {'IGD mean':>12} {'IGD std':>10}"
    lines = [header, "-" * len(header)]
    for c in cells:
        star = "*" if c["best_hv"] else " "
        lines.append(
            f"{c['problem']:<8} {c['m']:>3} {c['variant']:<7}{star}{c['runs']:>4} "
            f"{c['hv_mean']:>12.6f} {c['hv_std']:>10.6f} {c['igd_mean']:>12.6f} {c['igd_std']:>10.6f}"
        )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# bias study and front export


def bias_study(
    shape: str, scales: tuple[float, float], n: int, normalized: bool, seed: int
) -> tuple[FrontSample, np.ndarray]:
    sample = sample_similar_front(shape, scales, n, RandomSource(seed))
    profile = mean_eps_profile(sample.objectives, normalized=normalized)
    return sample, profile


def write_bias_csv(path, sample: FrontSample, profile: np.ndarray) -> None:
    lines = ["t,f1,f2,mean_eps"]
    for t, (f1, f2), v in zip(sample.t, sample.objectives, profile):
        lines.append(f"{float(t)!r},{float(f1)!r},{float(f2)!r},{float(v)!r}")
    _atomic_write_text(Path(path), "\n".join(lines) + "\n")


def write_front_csv(path, F: np.ndarray, header_comment: str | None = None) -> None:
    text = _objectives_csv(np.asarray(F, dtype=np.float64))
    if header_comment:
        text = f"# {header_comment}\n" + text
    _atomic_write_text(Path(path), text)
