#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import math
from typing import Dict, Mapping, Optional, Union

import numpy as np
from pydantic import BaseModel, NonNegativeInt

from aws.osml.qcl.confidence_fn import BuiltinFamily, evaluate
from aws.osml.qcl.errors import DegenerateConfidence
from aws.osml.qcl.fault_tree import FaultTree, failure_prob

Seed = Union[int, np.random.SeedSequence]
Counts = Union[int, np.ndarray]


class FaultAssignment(BaseModel):
    """
    :param faults: number of faults hidden in each component
    """

    faults: Dict[str, NonNegativeInt]


def seed_faults(sp: Mapping[str, float], conf_family: BuiltinFamily, rng_seed: Seed) -> FaultAssignment:
    """
    Hide faults in components according to their confidence: a component with confidence c receives k faults with
    probability (1 - c)^k c, so that components we trust more hold fewer faults on average, (1 - c) / c.

    :param sp: resources already spent on each component
    :param conf_family: the confidence function of every component
    :param rng_seed: seed of the random generator
    :return: the fault counts
    :raises DegenerateConfidence: if a component has confidence 0
    """
    rng = np.random.default_rng(rng_seed)
    expr = conf_family.to_expr()
    faults = {}
    for name, spent in sp.items():
        confidence = evaluate(expr, spent)
        if confidence <= 0.0:
            raise DegenerateConfidence(f"component {name} has confidence 0 at spending {spent}")
        faults[name] = 0 if confidence >= 1.0 else int(rng.geometric(confidence)) - 1
    return FaultAssignment(faults=faults)


def survival_probability(resources: float, test_cost: float, observability: float) -> float:
    """
    Probability that one fault survives spending resources on its component: each of the floor(r / cost) full
    tests removes it with probability `observability` and the leftover budget runs a partial test whose removal
    probability is scaled by the leftover fraction of a test.
    """
    full_tests = math.floor(resources / test_cost)
    partial = resources / test_cost - full_tests
    return (1.0 - observability) ** full_tests * (1.0 - observability * partial)


def remove_faults(
    faults: Counts,
    resources: float,
    test_cost: float,
    observability: float,
    rng: np.random.Generator,
    size: Optional[int] = None,
) -> Counts:
    return rng.binomial(faults, survival_probability(resources, test_cost, observability), size=size)


def simulate_testing(
    fa: FaultAssignment, split: Mapping[str, float], test_cost: float, observability: float, rng_seed: Seed
) -> FaultAssignment:
    """
    Run the testing phase: spend the allocated resources on every component and remove the faults found.

    :param fa: faults before testing
    :param split: resources allocated to each component, missing components receive nothing
    :param test_cost: resources consumed by one full test
    :param observability: probability that one test finds a given fault
    :param rng_seed: seed of the random generator
    :return: the surviving faults
    """
    rng = np.random.default_rng(rng_seed)
    return FaultAssignment(
        faults={
            name: int(remove_faults(count, split.get(name, 0.0), test_cost, observability, rng))
            for name, count in fa.faults.items()
        }
    )


def reliability_from_counts(ft: FaultTree, counts: Mapping[str, Counts], observability: float):
    """
    :param counts: surviving faults per component, integers or arrays of equal shape
    :return: 1 - failure_prob(ft, p) with p_i = 1 - (1 - observability)^n_i
    """
    leaf_failure = {
        name: 1.0 - (1.0 - observability) ** np.asarray(count, dtype=np.float64) for name, count in counts.items()
    }
    return 1.0 - failure_prob(ft, leaf_failure)


def system_reliability(ft: FaultTree, fa: FaultAssignment, observability: float) -> float:
    """
    Probability that the system operates without failure when every surviving fault triggers independently with
    probability `observability`.

    :param ft: the fault tree of the system
    :param fa: the surviving faults
    :param observability: probability that a fault triggers in operation
    :return: the system reliability
    """
    return float(reliability_from_counts(ft, fa.faults, observability))
