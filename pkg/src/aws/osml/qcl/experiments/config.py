#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from enum import auto
from typing import List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from aws.osml.qcl.allocator import SAParams, Strategy
from aws.osml.qcl.confidence_fn import BuiltinFamily, ExponentialFamily
from aws.osml.qcl.errors import SchemaError
from aws.osml.qcl.utils import AutoLowerStringEnum

ConfigType = TypeVar("ConfigType", bound="ExperimentConfig")


class ExperimentName(str, AutoLowerStringEnum):
    """
    :cvar RQ1: predicted confidence gain of each strategy
    :cvar RQ2: reliability reached after simulated fault seeding, testing and removal
    """

    RQ1 = auto()
    RQ2 = auto()


class ExperimentConfig(BaseModel):
    """
    Settings shared by both experiments. Every (fault tree, spending) pair is one experiment instance.

    :param n_fts: number of random fault trees
    :param n_sps: number of random spendings per fault tree
    :param sp_range: range of the resources already spent on each component, sampled uniformly
    :param budgets: test budgets to distribute, ascending
    :param ft_leaves: number of basic events of every fault tree, connected by ft_leaves - 1 binary gates
    :param conf_family: confidence function of every component
    :param strategies: strategies to compare, SA is the reference of relative differences
    :param sa: annealing schedule of the SA strategy
    :param seed: seed from which every instance seed is derived
    :param workers: number of processes evaluating instances, defaults to QCL_WORKERS
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_fts: int = Field(gt=0)
    n_sps: int = Field(gt=0)
    sp_range: Tuple[float, float]
    budgets: List[float] = Field(min_length=1)
    ft_leaves: int = Field(default=6, ge=2)
    conf_family: BuiltinFamily = ExponentialFamily(base=0.99, shift=1.0)
    strategies: Tuple[Strategy, ...] = (Strategy.SA, Strategy.UNIFORM, Strategy.PROPORTIONAL)
    sa: SAParams = SAParams()
    seed: int = 0
    workers: Optional[int] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check_ranges(self) -> "ExperimentConfig":
        low, high = self.sp_range
        if not 0.0 <= low < high:
            raise ValueError(f"sp_range must satisfy 0 <= low < high, got {self.sp_range}")
        if any(budget < 0.0 for budget in self.budgets):
            raise ValueError("budgets must be non-negative")
        if list(self.budgets) != sorted(self.budgets):
            raise ValueError("budgets must be sorted ascending")
        if Strategy.SA not in self.strategies:
            raise ValueError("strategies must include sa, the reference of relative differences")
        return self


class Rq1Config(ExperimentConfig):
    """
    Predicted reliability after allocation. The defaults reproduce the full scale run: 200 fault trees of six
    components, 100 spendings each in [100, 300] and budgets from 1 to 1000.
    """

    n_fts: int = Field(default=200, gt=0)
    n_sps: int = Field(default=100, gt=0)
    sp_range: Tuple[float, float] = (100.0, 300.0)
    budgets: List[float] = Field(default=[1.0, 10.0, 50.0, 100.0, 250.0, 500.0, 1000.0], min_length=1)


class Rq2Config(ExperimentConfig):
    """
    Empirical reliability after fault seeding and testing. The defaults reproduce the full scale run: 50 fault
    trees, 50 spendings each in [10, 70], 50 fault distributions per spending and 100 testing runs per distribution
    and budget.

    :param n_fds: number of fault distributions seeded per instance
    :param n_runs: number of testing and removal runs per fault distribution and budget
    :param test_cost: resources consumed by one full test
    :param observability: probability that one test, or one operation, triggers a given fault
    """

    n_fts: int = Field(default=50, gt=0)
    n_sps: int = Field(default=50, gt=0)
    sp_range: Tuple[float, float] = (10.0, 70.0)
    budgets: List[float] = Field(default=[60.0, 120.0, 240.0, 360.0, 480.0, 600.0], min_length=1)
    n_fds: int = Field(default=50, gt=0)
    n_runs: int = Field(default=100, gt=0)
    test_cost: float = Field(default=10.0, gt=0.0)
    observability: float = Field(default=0.1, gt=0.0, le=1.0)


class ExperimentRow(BaseModel):
    """
    One line of an experiment report.

    :param experiment: which experiment produced the row
    :param budget: the test budget
    :param strategy: the allocation strategy
    :param score: mean system reliability over the instances
    :param rel_diff_pct: (score - reference) / (1 - reference) * 100 where reference is the SA score
    :param stderr: standard error of the score over the instances
    :param n_instances: number of instances averaged
    """

    experiment: ExperimentName
    budget: float
    strategy: Strategy
    score: float
    rel_diff_pct: float
    stderr: float
    n_instances: int


def load_config(config_type: Type[ConfigType], text: Union[str, bytes]) -> ConfigType:
    """
    Parse an experiment configuration from JSON whose keys mirror the field names.

    :param config_type: Rq1Config or Rq2Config
    :param text: the JSON document
    :return: the configuration
    :raises SchemaError: if the document does not match the configuration
    """
    try:
        return config_type.model_validate_json(text)
    except ValidationError as err:
        raise SchemaError(f"Invalid {config_type.__name__}: {err}") from err
