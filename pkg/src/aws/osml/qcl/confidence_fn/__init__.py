#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .components import (
    COMPONENTS_ADAPTER,
    ComponentEntry,
    ComponentModel,
    ConfidenceCurve,
    ConfidenceFunction,
    dump_components,
    parse_components,
)
from .expression import (
    ConfidenceExpr,
    EvaluationResult,
    ExprOp,
    add,
    check_monotone,
    compile_expr,
    const,
    div,
    evaluate,
    evaluate_detailed,
    evaluate_scalar,
    evaluate_vector,
    maximum,
    minimum,
    mul,
    neg,
    power,
    sub,
    substitute_var,
    var,
)
from .families import (
    BuiltinFamily,
    CoverageFamily,
    ExponentialFamily,
    RandomTestingFamily,
    builtin,
    coverage,
    exponential,
    random_testing,
)
