#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from typing import List, Sequence

from .problem import AllocationProblem, AllocationResult, ObjectiveFunction, Strategy


def uniform_split(n: int, budget: float) -> List[float]:
    return [budget / n] * n


def proportional_split(confidences: Sequence[float], budget: float) -> List[float]:
    """
    Give each component a share of the budget proportional to 1 - c, its missing confidence. When every component
    is certain the weights vanish and the split falls back to uniform.

    :param confidences: current confidence of every component
    :param budget: the resources to distribute
    :return: the split
    """
    weights = [1.0 - confidence for confidence in confidences]
    total = sum(weights)
    if total <= 0.0:
        return uniform_split(len(confidences), budget)
    return [budget * weight / total for weight in weights]


def solve_uniform(problem: AllocationProblem) -> AllocationResult:
    evaluator = ObjectiveFunction(problem)
    return evaluator.result(Strategy.UNIFORM, uniform_split(len(evaluator.names), problem.budget))


def solve_proportional(problem: AllocationProblem) -> AllocationResult:
    evaluator = ObjectiveFunction(problem)
    current = evaluator.confidences([0.0] * len(evaluator.names))
    return evaluator.result(Strategy.PROPORTIONAL, proportional_split(current, problem.budget))
