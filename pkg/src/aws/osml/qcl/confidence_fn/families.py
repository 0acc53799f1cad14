#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from aws.osml.qcl.errors import BadParameter

from .expression import ConfidenceExpr, add, const, div, minimum, power, sub, var


class CoverageFamily(BaseModel):
    """
    Confidence grows linearly with coverage: f(r) = min(r / (n * r0), 1), full confidence once every one of the n
    items has received r0 resources.

    :param n: the number of items to cover
    :param r0: the resources needed to cover one item
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    builtin: Literal["coverage"] = "coverage"
    n: float = Field(gt=0.0)
    r0: float = Field(gt=0.0)

    def to_expr(self) -> ConfidenceExpr:
        return minimum(div(var(), const(self.n * self.r0)), const(1.0))


class RandomTestingFamily(BaseModel):
    """
    Random testing where every test of cost r0 finds a remaining fault with probability p:
    f(r) = 1 - (1 - p)^(r / r0).

    :param p: detection probability of one test
    :param r0: the resources needed to run one test
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    builtin: Literal["random_testing"] = "random_testing"
    p: float = Field(gt=0.0, lt=1.0)
    r0: float = Field(gt=0.0)

    def to_expr(self) -> ConfidenceExpr:
        return sub(const(1.0), power(const(1.0 - self.p), div(var(), const(self.r0))))


class ExponentialFamily(BaseModel):
    """
    f(r) = 1 - base^(r + shift).

    :param base: the per-resource-unit probability that a fault survives
    :param shift: resources credited before any spending
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    builtin: Literal["exponential"] = "exponential"
    base: float = Field(gt=0.0, lt=1.0)
    shift: float = Field(default=0.0, ge=0.0)

    def to_expr(self) -> ConfidenceExpr:
        exponent = add(var(), const(self.shift)) if self.shift else var()
        return sub(const(1.0), power(const(self.base), exponent))


BuiltinFamily = Annotated[Union[CoverageFamily, RandomTestingFamily, ExponentialFamily], Field(discriminator="builtin")]


def builtin(family: BuiltinFamily) -> ConfidenceExpr:
    return family.to_expr()


def _make(family_type, **params) -> BuiltinFamily:
    try:
        return family_type(**params)
    except ValidationError as err:
        raise BadParameter(f"Invalid {family_type.__name__} parameters: {err}") from err


def coverage(n: float, r0: float) -> CoverageFamily:
    return _make(CoverageFamily, n=n, r0=r0)


def random_testing(p: float, r0: float) -> RandomTestingFamily:
    return _make(RandomTestingFamily, p=p, r0=r0)


def exponential(base: float, shift: float = 0.0) -> ExponentialFamily:
    return _make(ExponentialFamily, base=base, shift=shift)
