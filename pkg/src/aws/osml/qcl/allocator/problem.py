#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from enum import auto
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from aws.osml.qcl.confidence_fn import ComponentModel, ConfidenceCurve
from aws.osml.qcl.errors import BadParameter, ComponentMismatch, SchemaError
from aws.osml.qcl.fault_tree import FaultTree, ReliabilityPolynomial, basic_events
from aws.osml.qcl.utils import AutoLowerStringEnum, SignificantFloat


class Strategy(str, AutoLowerStringEnum):
    """
    Test resource allocation strategies.

    :cvar SA: simulated annealing on the reliability objective, the QCL strategy
    :cvar UNIFORM: split the budget evenly
    :cvar PROPORTIONAL: split the budget in proportion to the missing confidence of each component
    :cvar GRID: exhaustive search on a lattice of the budget simplex
    """

    SA = auto()
    UNIFORM = auto()
    PROPORTIONAL = auto()
    GRID = auto()


class AllocationProblem(BaseModel):
    """
    Maximize the reliability of the system by distributing a budget of test resources over its components.

    :param ft: the fault tree of the system
    :param components: one component per basic event of the fault tree
    :param budget: the resources to distribute
    """

    model_config = ConfigDict(frozen=True)

    ft: FaultTree
    components: Tuple[ComponentModel, ...]
    budget: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _check_bijection(self) -> "AllocationProblem":
        names = [component.name for component in self.components]
        if len(set(names)) != len(names):
            raise ComponentMismatch(f"duplicate components in {names}")
        events = set(basic_events(self.ft))
        missing, extra = sorted(events - set(names)), sorted(set(names) - events)
        if missing or extra:
            raise ComponentMismatch(f"components do not match the basic events: missing {missing}, unknown {extra}")
        return self

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(basic_events(self.ft))

    def component(self, name: str) -> ComponentModel:
        return next(component for component in self.components if component.name == name)


def make_problem(ft: FaultTree, components: Sequence[ComponentModel], budget: float) -> AllocationProblem:
    """
    Build an allocation problem, reporting invalid budgets as input errors.

    :raises ComponentMismatch: if components and basic events are not in bijection
    :raises BadParameter: if the budget is negative
    """
    try:
        return AllocationProblem(ft=ft, components=tuple(components), budget=budget)
    except ValidationError as err:
        raise BadParameter(f"Invalid allocation problem: {err}") from err


class AllocationResult(BaseModel):
    """
    A split of the budget with the system reliability predicted before and after spending it.

    :param strategy: the strategy that produced the split
    :param split: resources allocated to each component
    :param predicted_before: the objective with nothing allocated
    :param predicted_after: the objective at the split
    """

    strategy: Strategy
    split: Dict[str, SignificantFloat]
    predicted_before: SignificantFloat
    predicted_after: SignificantFloat

    @property
    def total(self) -> float:
        return sum(self.split.values())

    def dump_json(self) -> str:
        return self.model_dump_json(indent=2)


def parse_allocation(text: Union[str, bytes]) -> AllocationResult:
    try:
        return AllocationResult.model_validate_json(text)
    except ValidationError as err:
        raise SchemaError(f"Invalid allocation result: {err}") from err


class ObjectiveFunction:
    """
    The reliability objective compiled for repeated evaluation. Splits are vectors ordered like `names`, the basic
    events of the fault tree from left to right.
    """

    def __init__(self, problem: AllocationProblem) -> None:
        self.polynomial = ReliabilityPolynomial(problem.ft)
        self.names = self.polynomial.names
        self.budget = problem.budget
        self.curves: List[ConfidenceCurve] = [ConfidenceCurve(problem.component(name)) for name in self.names]

    def confidences(self, split: Sequence[float]) -> List[float]:
        return [curve(extra) for curve, extra in zip(self.curves, split)]

    def reliability(self, confidences: Sequence[float]) -> float:
        return float(self.polynomial.evaluate_vector(confidences))

    def __call__(self, split: Sequence[float]) -> float:
        return self.reliability(self.confidences(split))

    def as_mapping(self, split: Sequence[float]) -> Dict[str, float]:
        return {name: float(value) for name, value in zip(self.names, split)}

    def result(self, strategy: Strategy, split: Sequence[float]) -> AllocationResult:
        return AllocationResult(
            strategy=strategy,
            split=self.as_mapping(split),
            predicted_before=self([0.0] * len(self.names)),
            predicted_after=self(split),
        )


def objective(problem: AllocationProblem, split: Mapping[str, float]) -> float:
    """
    Evaluate the reliability of the system after spending a split on its components.

    :param problem: the allocation problem
    :param split: resources allocated to every component
    :return: the reliability polynomial of the fault tree applied to the shifted confidence functions
    :raises ComponentMismatch: if the split does not name exactly the components
    :raises BadParameter: if an allocation is negative
    :raises EvalError: if a confidence function cannot be evaluated
    """
    evaluator = ObjectiveFunction(problem)
    if set(split) != set(evaluator.names):
        raise ComponentMismatch(f"split names {sorted(split)} do not match components {sorted(evaluator.names)}")
    negative = sorted(name for name, value in split.items() if value < 0)
    if negative:
        raise BadParameter(f"negative allocations for {negative}")
    return evaluator([split[name] for name in evaluator.names])
