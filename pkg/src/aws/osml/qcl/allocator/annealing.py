#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import math
import time
from itertools import combinations
from typing import Iterator, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from .baselines import proportional_split
from .problem import AllocationProblem, AllocationResult, ObjectiveFunction, Strategy

logger = logging.getLogger(__name__)

# Above this many components only single components and the full set seed the walk.
MAX_SUBSET_START_COMPONENTS = 10


class SAParams(BaseModel):
    """
    Hyperparameters of the simulated annealing solver.

    :param iterations: number of proposed moves
    :param initial_temperature: starting temperature, in objective units
    :param cooling: geometric cooling factor applied after every move
    :param step_fraction: largest transfer as a fraction of the budget at the start of the schedule
    :param min_step_fraction: floor of the schedule progress used to scale transfers, keeps late moves from vanishing
    """

    iterations: int = Field(default=20000, ge=0)
    initial_temperature: float = Field(default=1e-3, gt=0.0)
    cooling: float = Field(default=0.9995, gt=0.0, le=1.0)
    step_fraction: float = Field(default=0.1, gt=0.0)
    min_step_fraction: float = Field(default=0.001, ge=0.0)


def _supports(n: int) -> Iterator[Sequence[int]]:
    if n > MAX_SUBSET_START_COMPONENTS:
        yield from ((i,) for i in range(n))
        yield tuple(range(n))
        return
    for size in range(1, n + 1):
        yield from combinations(range(n), size)


def _warm_start(evaluator: ObjectiveFunction, budget: float) -> List[float]:
    """
    Pick the best of the proportional split and the uniform splits over every subset of components. The optimum of
    a fault tree objective often concentrates the budget on a few components, one subset per local basin.
    """
    n = len(evaluator.names)
    best_split = proportional_split(evaluator.confidences([0.0] * n), budget)
    best = evaluator(best_split)
    for support in _supports(n):
        split = [0.0] * n
        for i in support:
            split[i] = budget / len(support)
        value = evaluator(split)
        if value > best:
            best, best_split = value, split
    return best_split


def solve_sa(problem: AllocationProblem, params: Optional[SAParams] = None, seed: int = 0) -> AllocationResult:
    """
    Maximize the objective over the budget simplex with simulated annealing.

    The walk starts at the best of the proportional split and the uniform splits over subsets of components; the
    full set gives the uniform split. A move transfers an amount drawn uniformly from
    [0, max(T / T0, min_step_fraction) * budget * step_fraction] from one random component to another, limited by
    what the donor holds, and is accepted with probability min(1, exp(gain / T)). The best split seen is returned,
    scaled so that it spends exactly the budget.

    :param problem: the allocation problem
    :param params: the annealing schedule, defaults to SAParams()
    :param seed: seed of the random generator
    :return: the best split found
    :raises EvalError: if a confidence function cannot be evaluated
    """
    params = params or SAParams()
    evaluator = ObjectiveFunction(problem)
    n = len(evaluator.names)
    budget = problem.budget
    if budget == 0.0 or n == 1:
        return evaluator.result(Strategy.SA, [budget] * n)

    start = time.perf_counter()
    rng = np.random.default_rng(seed)
    donors = rng.integers(0, n, size=params.iterations)
    receivers = (donors + rng.integers(1, n, size=params.iterations)) % n
    transfers = rng.random(params.iterations)
    thresholds = rng.random(params.iterations)

    split = _warm_start(evaluator, budget)
    confidences = evaluator.confidences(split)
    current = evaluator.reliability(confidences)
    best, best_split = current, list(split)
    curves = evaluator.curves
    temperature = params.initial_temperature
    progress = 1.0
    accepted = 0

    for k in range(params.iterations):
        i, j = int(donors[k]), int(receivers[k])
        scale = max(progress, params.min_step_fraction) * budget * params.step_fraction
        delta = min(transfers[k] * scale, split[i])
        if delta > 0.0:
            new_i, new_j = split[i] - delta, split[j] + delta
            old_ci, old_cj = confidences[i], confidences[j]
            confidences[i], confidences[j] = curves[i](new_i), curves[j](new_j)
            candidate = evaluator.reliability(confidences)
            gain = candidate - current
            if gain >= 0.0 or thresholds[k] < math.exp(gain / temperature):
                split[i], split[j] = new_i, new_j
                current = candidate
                accepted += 1
                if current > best:
                    best, best_split = current, list(split)
            else:
                confidences[i], confidences[j] = old_ci, old_cj
        temperature *= params.cooling
        progress *= params.cooling

    total = sum(best_split)
    best_split = [max(value, 0.0) * budget / total for value in best_split]
    logger.info(
        f"METRIC: AnnealingTime={time.perf_counter() - start:.3f}s Iterations={params.iterations} Accepted={accepted}"
    )
    return evaluator.result(Strategy.SA, best_split)
