#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .annealing import SAParams, solve_sa
from .baselines import proportional_split, solve_proportional, solve_uniform, uniform_split
from .grid import lattice_size, solve_grid
from .problem import (
    AllocationProblem,
    AllocationResult,
    ObjectiveFunction,
    Strategy,
    make_problem,
    objective,
    parse_allocation,
)
from .solver import DEFAULT_GRID_STEP, solve
