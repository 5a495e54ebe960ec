"""Experiment driver: success rates, query scaling and report files.

Trials fan out over a process pool, since each trial is CPU-bound Python;
`Executor.map` hands results back in trial order, so the emitted records
never depend on scheduling.
"""

import concurrent.futures
import csv
import functools
import logging
import math
import time
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import DegenerateFit, InvalidParameter, OneSidedErrorViolation
from .exact import verify_witness
from .generators import gen_instance
from .models.constants import AlgorithmConstants
from .models.instances import FAR_STYLES, CertifiedInstance, InstanceSpec
from .models.reports import (
    BenchConfig,
    LogFit,
    ScalingConfig,
    ScalingReport,
    ScalingRow,
    SuccessEstimate,
    SummaryRow,
    TrialRecord,
)
from .rng import Rng
from .tester import MonotoneTester
from .view import SequenceView

logger = logging.getLogger(__name__)


def run_trial(
    values: Tuple[float, ...],
    spec: InstanceSpec,
    eps: float,
    delta: float,
    seed: int,
    constants: AlgorithmConstants,
) -> TrialRecord:
    """One seeded `find_monotone` run on its own view tree, re-verified."""
    view = SequenceView(values)
    tester = MonotoneTester(constants, Rng(seed))
    started = time.perf_counter()
    outcome = tester.find_monotone(view, spec.k, eps, delta)
    elapsed = time.perf_counter() - started

    if outcome.found and not verify_witness(values, outcome.witness, view.interval, view.value_range):
        raise OneSidedErrorViolation(
            f"seed {seed} reported {list(outcome.witness.indices)}, which is not a pattern",
            code="one_sided",
        )
    record = TrialRecord(
        seed=seed,
        n=spec.n,
        k=spec.k,
        eps=eps,
        delta=delta,
        style=spec.style,
        found=outcome.found,
        witness=list(outcome.witness.indices) if outcome.found else None,
        queries=outcome.queries,
        wall_time=elapsed,
    )
    logger.info(record.model_dump_json())
    return record


def estimate_success(
    config: BenchConfig, instance: Optional[CertifiedInstance] = None
) -> SuccessEstimate:
    """Run `config.trials` seeded trials (seeds base_seed + i) on one instance."""
    if config.trials < 1:
        raise InvalidParameter("trials must be >= 1", code="trials_range")
    if instance is None:
        instance = gen_instance(config.instance)
    seeds = [config.base_seed + i for i in range(config.trials)]
    trial = functools.partial(
        run_trial,
        tuple(instance.values),
        config.instance,
        config.eps,
        config.delta,
        constants=config.constants,
    )

    if config.workers == 1:
        records = [trial(seed) for seed in seeds]
    else:
        chunksize = max(1, len(seeds) // (4 * config.workers))
        with concurrent.futures.ProcessPoolExecutor(max_workers=config.workers) as executor:
            records = list(executor.map(trial, seeds, chunksize=chunksize))

    rate = sum(r.found for r in records) / len(records)
    return SuccessEstimate(rate=rate, trials=len(records), records=records)


def scaling_experiment(config: ScalingConfig) -> ScalingReport:
    ns = sorted(set(config.ns))
    if len(ns) < 3:
        raise InvalidParameter(f"need at least 3 distinct n, got {ns}", code="scaling_ns")
    far = config.style in FAR_STYLES

    rows = []
    for n in ns:
        spec = InstanceSpec(
            style=config.style,
            n=n,
            k=config.k,
            eps=config.eps if far else None,
            seed=config.instance_seed,
        )
        estimate = estimate_success(
            BenchConfig(
                instance=spec,
                eps=config.eps,
                delta=config.delta,
                trials=config.trials,
                base_seed=config.base_seed,
                constants=config.constants,
                workers=config.workers,
            )
        )
        rows.append(
            ScalingRow(
                n=n,
                mean_queries=estimate.mean_queries,
                max_queries=estimate.max_queries,
                trials=estimate.trials,
            )
        )
        logger.info("n=%d mean_queries=%.1f rate=%.3f", n, estimate.mean_queries, estimate.rate)

    fit = fit_log_slope([(row.n, row.mean_queries) for row in rows])
    return ScalingReport(rows=rows, fit=fit)


def fit_log_slope(rows: Sequence[Tuple[int, float]]) -> LogFit:
    """Least squares of mean ~ a + b * log2(n)."""
    if len({n for n, _ in rows}) < 2:
        raise DegenerateFit("the fit needs at least two distinct n", code="degenerate_fit")
    x = np.log2(np.array([n for n, _ in rows], dtype=float))
    y = np.array([mean for _, mean in rows], dtype=float)
    b, a = np.polyfit(x, y, 1)

    residual = float(np.sum((y - (a + b * x)) ** 2))
    total = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if total == 0 else 1.0 - residual / total
    return LogFit(a=float(a), b=float(b), r2=r2)


def summarize(records: Iterable[TrialRecord]) -> List[SummaryRow]:
    """One summary row per (n, k, eps, delta, style), in first-seen order."""
    groups: Dict[tuple, List[TrialRecord]] = {}
    for record in records:
        key = (record.n, record.k, record.eps, record.delta, record.style)
        groups.setdefault(key, []).append(record)

    summary = []
    for (n, k, eps, delta, style), group in groups.items():
        queries = [r.queries for r in group]
        summary.append(
            SummaryRow(
                n=n,
                k=k,
                eps=eps,
                delta=delta,
                style=style,
                trials=len(group),
                success_rate=sum(r.found for r in group) / len(group),
                mean_queries=math.fsum(queries) / len(queries),
                max_queries=max(queries),
            )
        )
    return summary


def write_trials_jsonl(path: Union[str, Path], records: Iterable[TrialRecord]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(record.model_dump_json() + "\n")


def write_summary_csv(path: Union[str, Path], rows: Iterable[SummaryRow]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=list(SummaryRow.model_fields))
        writer.writeheader()
        for row in rows:
            writer.writerow(row.model_dump())
