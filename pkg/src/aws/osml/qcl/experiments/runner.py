#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Dict, List, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from aws.osml.qcl.allocator import AllocationProblem, AllocationResult, Strategy, solve
from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.confidence_fn import ComponentModel
from aws.osml.qcl.fault_tree import FaultTree, basic_events, random_ft
from aws.osml.qcl.utils import log_context

from .config import ExperimentConfig, ExperimentName, ExperimentRow, Rq1Config, Rq2Config
from .faults import reliability_from_counts, remove_faults, seed_faults

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["experiment", "budget", "strategy", "score", "rel_diff_pct", "stderr", "n_instances"]

InstanceKey = Tuple[int, Strategy]
InstanceScores = Dict[InstanceKey, float]


def derive_seed(*entropy: int) -> int:
    """
    Mix the global seed with the indices of a task into an independent 64 bit seed.
    """
    return int(np.random.SeedSequence(list(entropy)).generate_state(1, dtype=np.uint64)[0])


def build_instance(cfg: ExperimentConfig, ft_index: int, sp_index: int) -> Tuple[FaultTree, Dict[str, float]]:
    """
    :return: the fault tree of the instance and the resources already spent on each of its components
    """
    ft = random_ft(cfg.ft_leaves, derive_seed(cfg.seed, ft_index))
    rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, ft_index, sp_index]))
    names = basic_events(ft)
    low, high = cfg.sp_range
    return ft, dict(zip(names, rng.uniform(low, high, size=len(names)).tolist()))


def allocate_instance(
    cfg: ExperimentConfig, ft: FaultTree, sp: Dict[str, float], ft_index: int, sp_index: int
) -> Dict[InstanceKey, AllocationResult]:
    """
    Solve every (budget, strategy) allocation of an instance once.
    """
    components = [ComponentModel(name=name, fn=cfg.conf_family, spent=spent) for name, spent in sp.items()]
    allocations = {}
    for budget_index, budget in enumerate(cfg.budgets):
        problem = AllocationProblem(ft=ft, components=tuple(components), budget=budget)
        seed = derive_seed(cfg.seed, ft_index, sp_index, budget_index)
        for strategy in cfg.strategies:
            allocations[(budget_index, strategy)] = solve(problem, strategy, cfg.sa, seed)
    return allocations


def _run_rq1_instance(cfg: Rq1Config, ft_index: int, sp_index: int) -> InstanceScores:
    with log_context(experiment=ExperimentName.RQ1.value, instance=f"ft{ft_index}-sp{sp_index}"):
        ft, sp = build_instance(cfg, ft_index, sp_index)
        allocations = allocate_instance(cfg, ft, sp, ft_index, sp_index)
        return {key: result.predicted_after for key, result in allocations.items()}


def _run_rq2_instance(cfg: Rq2Config, ft_index: int, sp_index: int) -> InstanceScores:
    with log_context(experiment=ExperimentName.RQ2.value, instance=f"ft{ft_index}-sp{sp_index}"):
        ft, sp = build_instance(cfg, ft_index, sp_index)
        allocations = allocate_instance(cfg, ft, sp, ft_index, sp_index)
        per_fd: Dict[InstanceKey, List[float]] = {key: [] for key in allocations}
        for fd_index in range(cfg.n_fds):
            fa = seed_faults(sp, cfg.conf_family, np.random.SeedSequence([cfg.seed, ft_index, sp_index, fd_index]))
            rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, ft_index, sp_index, fd_index, 1]))
            for key, result in allocations.items():
                survivors = {
                    name: remove_faults(count, result.split[name], cfg.test_cost, cfg.observability, rng, cfg.n_runs)
                    for name, count in fa.faults.items()
                }
                reliability = reliability_from_counts(ft, survivors, cfg.observability)
                per_fd[key].append(math.fsum(reliability.tolist()) / cfg.n_runs)
        return {key: math.fsum(values) / cfg.n_fds for key, values in per_fd.items()}


def _run_instances(
    cfg: ExperimentConfig, worker: Callable[[ExperimentConfig, int, int], InstanceScores]
) -> List[InstanceScores]:
    ft_indices = [ft_index for ft_index in range(cfg.n_fts) for _ in range(cfg.n_sps)]
    sp_indices = [sp_index for _ in range(cfg.n_fts) for sp_index in range(cfg.n_sps)]
    workers = cfg.workers or QclConfig().workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(partial(worker, cfg), ft_indices, sp_indices))
    return [worker(cfg, ft_index, sp_index) for ft_index, sp_index in zip(ft_indices, sp_indices)]


def relative_difference(r: float, r_prime: float) -> float:
    """
    Relative change of unreliability, in percent: (r' - r) / (1 - r) * 100. A competitor scoring r' below the
    reference r gets a negative difference. When the reference is certain the difference is 0 for an equally
    certain competitor and undefined (NaN) otherwise.

    :param r: reference reliability
    :param r_prime: competitor reliability
    :return: the difference in percent
    """
    if r >= 1.0:
        return 0.0 if r_prime == r else math.nan
    return (r_prime - r) / (1.0 - r) * 100.0


def _mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    n = len(values)
    mean = math.fsum(values) / n
    if n < 2:
        return mean, 0.0
    variance = math.fsum((value - mean) ** 2 for value in values) / (n - 1)
    return mean, math.sqrt(variance / n)


def aggregate(
    experiment: ExperimentName, cfg: ExperimentConfig, instances: Sequence[InstanceScores]
) -> List[ExperimentRow]:
    """
    Average instance scores per (budget, strategy) and compare every strategy with SA.

    :param experiment: the experiment the scores belong to
    :param cfg: the configuration that produced the scores
    :param instances: the scores of every instance
    :return: one row per budget and strategy, in configuration order
    """
    rows = []
    for budget_index, budget in enumerate(cfg.budgets):
        statistics = {
            strategy: _mean_and_stderr([scores[(budget_index, strategy)] for scores in instances])
            for strategy in cfg.strategies
        }
        reference = statistics[Strategy.SA][0]
        for strategy in cfg.strategies:
            score, stderr = statistics[strategy]
            rows.append(
                ExperimentRow(
                    experiment=experiment,
                    budget=budget,
                    strategy=strategy,
                    score=score,
                    rel_diff_pct=relative_difference(reference, score),
                    stderr=stderr,
                    n_instances=len(instances),
                )
            )
    return rows


def _run(experiment: ExperimentName, cfg: ExperimentConfig, worker) -> List[ExperimentRow]:
    start = time.perf_counter()
    logger.info(f"Running {experiment.value} on {cfg.n_fts * cfg.n_sps} instances")
    rows = aggregate(experiment, cfg, _run_instances(cfg, worker))
    logger.info(f"METRIC: ExperimentTime={time.perf_counter() - start:.3f}s Experiment={experiment.value}")
    return rows


def run_rq1(cfg: Rq1Config) -> List[ExperimentRow]:
    """
    Compare the reliability each strategy predicts after distributing every budget, averaged over random fault
    trees and spendings.

    :param cfg: the experiment configuration
    :return: one row per budget and strategy
    """
    return _run(ExperimentName.RQ1, cfg, _run_rq1_instance)


def run_rq2(cfg: Rq2Config) -> List[ExperimentRow]:
    """
    Compare the reliability each strategy reaches when hidden faults are seeded from the component confidences and
    removed by simulated testing.

    :param cfg: the experiment configuration
    :return: one row per budget and strategy
    """
    return _run(ExperimentName.RQ2, cfg, _run_rq2_instance)


def rows_to_frame(rows: Sequence[ExperimentRow]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump(mode="json") for row in rows], columns=CSV_COLUMNS)


def write_csv(rows: Sequence[ExperimentRow], destination: Union[str, TextIO]) -> None:
    rows_to_frame(rows).to_csv(destination, index=False, float_format="%.9g", lineterminator="\n")
