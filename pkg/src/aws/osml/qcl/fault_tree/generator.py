#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from itertools import count
from typing import Iterator

import numpy as np

from aws.osml.qcl.errors import BadParameter

from .model import AndGate, BasicEvent, FaultTree, OrGate


def random_ft(n_leaves: int, rng_seed: int) -> FaultTree:
    """
    Sample a fault tree of binary gates. The shape is drawn by splitting the leaf count uniformly at every gate and
    every gate is AND or OR with probability 1/2. Leaves are named c0, c1, ... from left to right.

    :param n_leaves: number of basic events, at least 2
    :param rng_seed: seed of the random generator
    :return: a fault tree with n_leaves - 1 binary gates
    :raises BadParameter: if n_leaves is below 2
    """
    if n_leaves < 2:
        raise BadParameter(f"a random fault tree needs at least 2 leaves, got {n_leaves}")
    rng = np.random.default_rng(rng_seed)
    return _build(n_leaves, rng, count())


def _build(n_leaves: int, rng: np.random.Generator, names: Iterator[int]) -> FaultTree:
    if n_leaves == 1:
        return BasicEvent(name=f"c{next(names)}")
    left_leaves = int(rng.integers(1, n_leaves))
    gate = AndGate if rng.random() < 0.5 else OrGate
    left = _build(left_leaves, rng, names)
    right = _build(n_leaves - left_leaves, rng, names)
    return gate(children=(left, right))
