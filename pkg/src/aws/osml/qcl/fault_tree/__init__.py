#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .analysis import ReliabilityPolynomial, failure_prob, proof_shape, reliability_fn, translate
from .generator import random_ft
from .model import FAULT_TREE_ADAPTER, AndGate, BasicEvent, FaultTree, OrGate, basic_events, count_gates, dump_ft, parse_ft
