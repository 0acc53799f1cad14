#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from typing import Optional

from .annealing import SAParams, solve_sa
from .baselines import solve_proportional, solve_uniform
from .grid import solve_grid
from .problem import AllocationProblem, AllocationResult, Strategy

DEFAULT_GRID_STEP = 0.05


def solve(
    problem: AllocationProblem,
    strategy: Strategy,
    params: Optional[SAParams] = None,
    seed: int = 0,
    grid_step: float = DEFAULT_GRID_STEP,
) -> AllocationResult:
    """
    Run the solver of a strategy.

    :param problem: the allocation problem
    :param strategy: which solver to run
    :param params: annealing schedule, SA only
    :param seed: seed of the random generator, SA only
    :param grid_step: lattice resolution, GRID only
    :return: the allocation found by the strategy
    """
    if strategy == Strategy.SA:
        return solve_sa(problem, params, seed)
    if strategy == Strategy.UNIFORM:
        return solve_uniform(problem)
    if strategy == Strategy.PROPORTIONAL:
        return solve_proportional(problem)
    return solve_grid(problem, grid_step)
