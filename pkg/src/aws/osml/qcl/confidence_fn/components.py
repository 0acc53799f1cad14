#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
from typing import Dict, List, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from aws.osml.qcl.errors import SchemaError

from .expression import (
    ConfidenceExpr,
    add,
    compile_expr,
    const,
    evaluate,
    evaluate_scalar,
    evaluate_vector,
    substitute_var,
    var,
)
from .families import BuiltinFamily

logger = logging.getLogger(__name__)

ConfidenceFunction = Union[BuiltinFamily, ConfidenceExpr]


class ComponentEntry(BaseModel):
    """
    One entry of a components file.

    :param fn: the confidence function, as a parse tree or a builtin family
    :param spent: the resources already spent on the component
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    fn: ConfidenceFunction
    spent: float = Field(default=0.0, ge=0.0)


class ComponentModel(ComponentEntry):
    """
    A component of the system under test: its confidence function and the resources already spent on it.

    :param name: the basic event the component stands for
    """

    name: str = Field(min_length=1)

    @property
    def expr(self) -> ConfidenceExpr:
        if isinstance(self.fn, ConfidenceExpr):
            return self.fn
        return self.fn.to_expr()

    def shifted(self) -> ConfidenceExpr:
        """
        :return: f_s(r) = f(r + s), the confidence function counted from the resources already spent
        """
        return substitute_var(self.expr, add(var(), const(self.spent)))

    def confidence(self, extra: float = 0.0) -> float:
        return evaluate(self.expr, self.spent + extra)


class ConfidenceCurve:
    """
    A compiled confidence function of a component, evaluated at the spent resources plus extra resources and
    clamped to [0, 1]. The first clamping is logged and remembered in `clamped`.
    """

    def __init__(self, component: ComponentModel) -> None:
        self.name = component.name
        self.spent = component.spent
        self.clamped = False
        expr = component.expr
        self._scalar = compile_expr(expr)
        self._vector = compile_expr(expr, vectorized=True)

    def _note_clamp(self, raw) -> None:
        if not self.clamped:
            self.clamped = True
            logger.warning(f"Confidence function of {self.name} clamped from {raw} to [0, 1]")

    def __call__(self, extra: float) -> float:
        raw = evaluate_scalar(self._scalar, self.spent + extra)
        if raw < 0.0 or raw > 1.0:
            self._note_clamp(raw)
            return min(max(raw, 0.0), 1.0)
        return raw

    def vector(self, extras: np.ndarray) -> np.ndarray:
        raw = evaluate_vector(self._vector, self.spent + np.asarray(extras, dtype=np.float64))
        values = np.clip(raw, 0.0, 1.0)
        if not np.array_equal(values, raw):
            self._note_clamp(raw[values != raw][0])
        return values


COMPONENTS_ADAPTER: TypeAdapter = TypeAdapter(Dict[str, ComponentEntry])


def parse_components(text: Union[str, bytes]) -> List[ComponentModel]:
    """
    Parse a components file mapping component names to {"fn": ..., "spent": ...}.

    :param text: the JSON document
    :return: the components, in file order
    :raises SchemaError: if the document does not match the schema
    """
    try:
        entries = COMPONENTS_ADAPTER.validate_json(text)
    except ValidationError as err:
        raise SchemaError(f"Invalid components file: {err}") from err
    return [ComponentModel(name=name, fn=entry.fn, spent=entry.spent) for name, entry in entries.items()]


def dump_components(components: Sequence[ComponentModel]) -> str:
    entries = {component.name: ComponentEntry(fn=component.fn, spent=component.spent) for component in components}
    return COMPONENTS_ADAPTER.dump_json(entries, indent=2, exclude_none=True).decode("utf-8")
