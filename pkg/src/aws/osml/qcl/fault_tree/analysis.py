#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from functools import reduce
from typing import Callable, Mapping, Sequence, Tuple, TypeVar, Union

import numpy as np

from aws.osml.qcl.errors import UnknownBasicEvent
from aws.osml.qcl.logic import Confidence, ProofShape, ProofTree, and_i, ax, infer_confidences, or_i

from .model import AndGate, BasicEvent, FaultTree, basic_events

Value = TypeVar("Value", float, np.ndarray)
Evaluator = Callable[[Sequence[Value]], Value]


def _check_covered(ft: FaultTree, values: Mapping[str, object]) -> None:
    missing = [name for name in basic_events(ft) if name not in values]
    if missing:
        raise UnknownBasicEvent(f"no value given for basic events {missing}")


def proof_shape(ft: FaultTree) -> ProofShape:
    """
    Dualize a fault tree into a derivation of the absence of faults: AND gates become left-nested OrI applications
    and OR gates left-nested AndI applications.

    :param ft: the fault tree to translate
    :return: the proof shape, one Ax leaf per basic event
    """
    if isinstance(ft, BasicEvent):
        return ax(ft.name)
    children = [proof_shape(child) for child in ft.children]
    rule = or_i if isinstance(ft, AndGate) else and_i
    return reduce(rule, children)


def translate(ft: FaultTree, leaf_conf: Mapping[str, Confidence]) -> ProofTree:
    """
    Translate a fault tree to a proof tree concluding the absence of system faults.

    :param ft: the fault tree
    :param leaf_conf: the confidence that each basic event has no fault
    :return: an introduction-only proof tree of a linear formula
    :raises UnknownBasicEvent: if a basic event has no confidence
    """
    _check_covered(ft, leaf_conf)
    return infer_confidences(proof_shape(ft), {name: leaf_conf[name] for name in basic_events(ft)})


def _compile_reliability(node: FaultTree, index: Mapping[str, int]) -> Evaluator:
    if isinstance(node, BasicEvent):
        position = index[node.name]
        return lambda values: values[position]
    children = [_compile_reliability(child, index) for child in node.children]
    if isinstance(node, AndGate):

        def and_gate(values):
            unreliability = 1.0
            for child in children:
                unreliability = unreliability * (1.0 - child(values))
            return 1.0 - unreliability

        return and_gate

    def or_gate(values):
        reliability = 1.0
        for child in children:
            reliability = reliability * child(values)
        return reliability

    return or_gate


class ReliabilityPolynomial:
    """
    The true confidence of the translated proof as a function of the true confidences of the basic events, with
    false confidences held at 0. An AND gate combines child reliabilities r_i as 1 - prod(1 - r_i) and an OR gate
    as prod(r_i).

    Arguments may be floats or numpy arrays of equal shape, which evaluates many points at once.
    """

    def __init__(self, ft: FaultTree) -> None:
        self.names: Tuple[str, ...] = tuple(basic_events(ft))
        self._evaluate = _compile_reliability(ft, {name: position for position, name in enumerate(self.names)})

    def __call__(self, values: Mapping[str, Value]) -> Value:
        missing = [name for name in self.names if name not in values]
        if missing:
            raise UnknownBasicEvent(f"no value given for basic events {missing}")
        return self._evaluate([values[name] for name in self.names])

    def evaluate_vector(self, values: Sequence[Value]) -> Value:
        """
        :param values: leaf true confidences in the order of `names`
        :return: the reliability
        """
        return self._evaluate(values)


def reliability_fn(ft: FaultTree) -> ReliabilityPolynomial:
    return ReliabilityPolynomial(ft)


def _propagate_failure(node: FaultTree, leaf_failure: Mapping[str, Value]) -> Value:
    if isinstance(node, BasicEvent):
        return leaf_failure[node.name]
    children = [_propagate_failure(child, leaf_failure) for child in node.children]
    if isinstance(node, AndGate):
        return reduce(lambda a, b: a * b, children)
    survival = reduce(lambda a, b: a * b, [1.0 - child for child in children])
    return 1.0 - survival


def failure_prob(ft: FaultTree, leaf_failure: Mapping[str, Union[float, np.ndarray]]) -> Union[float, np.ndarray]:
    """
    Classical propagation of failure probabilities: an AND gate over failure probabilities a and b fails with
    probability ab, an OR gate with probability a + b - ab.

    :param ft: the fault tree
    :param leaf_failure: failure probability of every basic event, floats or numpy arrays
    :return: the failure probability of the root event
    :raises UnknownBasicEvent: if a basic event has no failure probability
    """
    _check_covered(ft, leaf_failure)
    return _propagate_failure(ft, leaf_failure)
