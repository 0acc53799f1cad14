#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import math
import operator
from enum import auto
from functools import reduce
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.errors import BadParameter, EvalError
from aws.osml.qcl.utils import AutoLowerStringEnum

logger = logging.getLogger(__name__)

Resource = Union[float, np.ndarray]
CompiledExpr = Callable[[Resource], Resource]


class ExprOp(str, AutoLowerStringEnum):
    """
    Operators of the confidence expression language.

    :cvar CONST: a constant, carries `value`
    :cvar VAR: the resource variable r
    :cvar ADD: sum of two or more arguments
    :cvar SUB: first argument minus second
    :cvar MUL: product of two or more arguments
    :cvar DIV: first argument divided by second
    :cvar POW: first argument raised to the second
    :cvar MIN: smallest of two or more arguments
    :cvar MAX: largest of two or more arguments
    :cvar NEG: negation of the single argument
    """

    CONST = auto()
    VAR = auto()
    ADD = auto()
    SUB = auto()
    MUL = auto()
    DIV = auto()
    POW = auto()
    MIN = auto()
    MAX = auto()
    NEG = auto()


_VARIADIC = {ExprOp.ADD, ExprOp.MUL, ExprOp.MIN, ExprOp.MAX}
_BINARY = {ExprOp.SUB, ExprOp.DIV, ExprOp.POW}


class ConfidenceExpr(BaseModel):
    """
    A parse tree of a confidence function f(r) over the single variable r, the resources spent on a component.

    :param op: the operator of this node
    :param value: the constant, for CONST nodes only
    :param args: the operands of this node
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    op: ExprOp
    value: Optional[float] = None
    args: Tuple["ConfidenceExpr", ...] = ()

    @model_validator(mode="after")
    def _check_arity(self) -> "ConfidenceExpr":
        if self.op == ExprOp.CONST:
            if self.value is None or self.args:
                raise ValueError("const needs a value and no arguments")
        elif self.value is not None:
            raise ValueError(f"{self.op.value} does not take a value")
        elif self.op == ExprOp.VAR and self.args:
            raise ValueError("var does not take arguments")
        elif self.op == ExprOp.NEG and len(self.args) != 1:
            raise ValueError("neg takes exactly one argument")
        elif self.op in _BINARY and len(self.args) != 2:
            raise ValueError(f"{self.op.value} takes exactly two arguments")
        elif self.op in _VARIADIC and len(self.args) < 2:
            raise ValueError(f"{self.op.value} takes at least two arguments")
        return self

    def dump_json(self) -> str:
        return self.model_dump_json(exclude_defaults=True)


def const(value: float) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.CONST, value=value)


def var() -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.VAR)


def add(*args: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.ADD, args=args)


def sub(lhs: ConfidenceExpr, rhs: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.SUB, args=(lhs, rhs))


def mul(*args: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.MUL, args=args)


def div(lhs: ConfidenceExpr, rhs: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.DIV, args=(lhs, rhs))


def power(base: ConfidenceExpr, exponent: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.POW, args=(base, exponent))


def minimum(*args: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.MIN, args=args)


def maximum(*args: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.MAX, args=args)


def neg(arg: ConfidenceExpr) -> ConfidenceExpr:
    return ConfidenceExpr(op=ExprOp.NEG, args=(arg,))


def substitute_var(expr: ConfidenceExpr, replacement: ConfidenceExpr) -> ConfidenceExpr:
    """
    Replace every occurrence of r in an expression.

    :param expr: the expression to rewrite
    :param replacement: the expression put in place of r
    :return: the rewritten expression
    """
    if expr.op == ExprOp.VAR:
        return replacement
    if not expr.args:
        return expr
    return ConfidenceExpr(op=expr.op, args=tuple(substitute_var(arg, replacement) for arg in expr.args))


_VECTOR_COMBINERS = {
    ExprOp.ADD: np.add,
    ExprOp.SUB: np.subtract,
    ExprOp.MUL: np.multiply,
    ExprOp.DIV: np.divide,
    ExprOp.POW: np.power,
    ExprOp.MIN: np.minimum,
    ExprOp.MAX: np.maximum,
}

_SCALAR_COMBINERS = {
    ExprOp.ADD: operator.add,
    ExprOp.SUB: operator.sub,
    ExprOp.MUL: operator.mul,
    ExprOp.DIV: operator.truediv,
    ExprOp.POW: math.pow,
    ExprOp.MIN: min,
    ExprOp.MAX: max,
}


def compile_expr(expr: ConfidenceExpr, vectorized: bool = False) -> CompiledExpr:
    """
    Turn an expression into a closure computing the raw value, without clamping. The scalar closure works on
    floats with the math module; the vectorized one works on numpy arrays.

    :param expr: the expression to compile
    :param vectorized: build the numpy closure
    :return: the compiled function of r
    """
    if vectorized:
        return _compile(expr, _VECTOR_COMBINERS, np.negative)
    return _compile(expr, _SCALAR_COMBINERS, operator.neg)


def _compile(expr: ConfidenceExpr, combiners: Dict, negate: Callable) -> CompiledExpr:
    if expr.op == ExprOp.CONST:
        value = float(expr.value)
        return lambda r: value
    if expr.op == ExprOp.VAR:
        return lambda r: r
    children = [_compile(arg, combiners, negate) for arg in expr.args]
    if expr.op == ExprOp.NEG:
        child = children[0]
        return lambda r: negate(child(r))
    combine = combiners[expr.op]
    return lambda r: reduce(combine, (child(r) for child in children))


def evaluate_scalar(fn: CompiledExpr, r: float) -> float:
    """
    Run a scalar compiled expression.

    :param fn: the closure built by compile_expr
    :param r: the resource value
    :return: the raw value
    :raises EvalError: on division by zero, overflow or a result outside the reals
    """
    try:
        raw = float(fn(r))
    except (ZeroDivisionError, OverflowError, ValueError) as err:
        raise EvalError(f"confidence function cannot be evaluated at r={r}: {err}") from err
    if not math.isfinite(raw):
        raise EvalError(f"confidence function evaluated to {raw} at r={r}")
    return raw


def evaluate_vector(fn: CompiledExpr, r: np.ndarray) -> np.ndarray:
    """
    Run a vectorized compiled expression with floating point errors raised.

    :param fn: the closure built by compile_expr with vectorized=True
    :param r: resource values
    :return: the raw values, broadcast to the shape of r
    :raises EvalError: on division by zero, overflow or a result outside the reals
    """
    r = np.asarray(r, dtype=np.float64)
    try:
        with np.errstate(divide="raise", over="raise", invalid="raise", under="ignore"):
            raw = np.broadcast_to(fn(r), r.shape)
    except (FloatingPointError, ZeroDivisionError, OverflowError) as err:
        raise EvalError(f"confidence function cannot be evaluated: {err}") from err
    if not np.isfinite(raw).all():
        raise EvalError("confidence function evaluated to a non-finite value")
    return raw


class EvaluationResult(BaseModel):
    """
    :param value: the confidence, clamped to [0, 1]
    :param raw: the value before clamping
    :param clamped: True if clamping changed the value
    """

    value: float
    raw: float
    clamped: bool


def evaluate_detailed(expr: ConfidenceExpr, r: float) -> EvaluationResult:
    """
    Evaluate a confidence function and report whether its output had to be clamped to [0, 1].

    :param expr: the confidence function
    :param r: the resources spent, non-negative
    :return: the clamped value with its diagnostic flag
    :raises BadParameter: if r is negative
    :raises EvalError: if the expression is undefined at r
    """
    if r < 0:
        raise BadParameter(f"resources must be non-negative, got {r}")
    raw = evaluate_scalar(compile_expr(expr), r)
    value = min(max(raw, 0.0), 1.0)
    clamped = value != raw
    if clamped:
        logger.warning(f"Confidence function value {raw} at r={r} clamped to {value}")
    return EvaluationResult(value=value, raw=raw, clamped=clamped)


def evaluate(expr: ConfidenceExpr, r: float) -> float:
    return evaluate_detailed(expr, r).value


def check_monotone(expr: ConfidenceExpr, r_max: float, samples: int) -> bool:
    """
    Sampled monotonicity check: evaluate the clamped function on equally spaced points of [0, r_max] and require
    it never decreases by more than 1e-9. This is not a proof of monotonicity.

    :param expr: the confidence function
    :param r_max: right end of the sampled interval
    :param samples: number of sample points, at least 2
    :return: True if no decrease was observed
    :raises BadParameter: if fewer than 2 samples are requested
    :raises EvalError: if the expression is undefined at a sample point
    """
    if samples < 2:
        raise BadParameter(f"monotonicity check needs at least 2 samples, got {samples}")
    points = np.linspace(0.0, r_max, samples)
    values = np.clip(evaluate_vector(compile_expr(expr, vectorized=True), points), 0.0, 1.0)
    return bool(np.all(np.diff(values) >= -QclConfig.TOLERANCE))
