#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import math
import time
from typing import Iterator, List, Optional, Tuple

import numpy as np

from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.errors import BadParameter, TooLarge

from .problem import AllocationProblem, AllocationResult, ObjectiveFunction, Strategy

logger = logging.getLogger(__name__)


def lattice_size(n: int, steps: int) -> int:
    """
    :return: the number of ways to put `steps` indistinguishable units into n components
    """
    return math.comb(steps + n - 1, n - 1)


def _prefixes(length: int, remaining: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(remaining + 1):
        for rest in _prefixes(length - 1, remaining - first):
            yield (first,) + rest


def solve_grid(problem: AllocationProblem, step: float, config: Optional[QclConfig] = None) -> AllocationResult:
    """
    Brute-force oracle: enumerate every point of the budget simplex whose coordinates are multiples of the
    effective step budget / ceil(budget / step) and return the best one. The last three coordinates of the lattice
    are evaluated as numpy arrays.

    :param problem: the allocation problem
    :param step: the requested lattice resolution, positive
    :param config: settings bounding the lattice size
    :return: the best lattice point
    :raises BadParameter: if step is not positive
    :raises TooLarge: if the lattice holds more points than the configured limit
    """
    config = config or QclConfig()
    if step <= 0:
        raise BadParameter(f"grid step must be positive, got {step}")
    evaluator = ObjectiveFunction(problem)
    n = len(evaluator.names)
    if problem.budget == 0.0 or n == 1:
        return evaluator.result(Strategy.GRID, [problem.budget] * n)

    steps = math.ceil(problem.budget / step - QclConfig.TOLERANCE)
    size = lattice_size(n, steps)
    if size > config.grid_max_points:
        raise TooLarge(f"grid of {size} points exceeds the limit of {config.grid_max_points}")
    effective_step = problem.budget / steps

    start = time.perf_counter()
    amounts = np.arange(steps + 1) * effective_step
    tables = [curve.vector(amounts) for curve in evaluator.curves]

    best_value = -math.inf
    best_point: List[int] = []
    tail = min(n, 3)
    for prefix in _prefixes(n - tail, steps):
        remaining = steps - sum(prefix)
        head = [tables[i][k] for i, k in enumerate(prefix)]
        if tail == 2:
            first = np.arange(remaining + 1)
            columns = [first, remaining - first]
        else:
            total, first = np.tril_indices(remaining + 1)
            columns = [first, total - first, remaining - total]
        values = evaluator.polynomial.evaluate_vector(
            head + [tables[n - tail + offset][column] for offset, column in enumerate(columns)]
        )
        index = int(np.argmax(values))
        if values[index] > best_value:
            best_value = float(values[index])
            best_point = list(prefix) + [int(column[index]) for column in columns]

    logger.info(f"METRIC: GridSearchTime={time.perf_counter() - start:.3f}s GridPoints={size}")
    return evaluator.result(Strategy.GRID, [k * effective_step for k in best_point])
