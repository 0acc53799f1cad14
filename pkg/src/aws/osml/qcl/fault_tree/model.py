#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from collections import Counter
from typing import Annotated, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from aws.osml.qcl.errors import SchemaError


class BasicEvent(BaseModel):
    """
    A leaf of a fault tree, i.e. an independent component that may contain faults.

    :param name: The unique name of the component.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    type: Literal["basic"] = "basic"
    name: str = Field(min_length=1)


class _Gate(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    children: Tuple["FaultTree", ...] = Field(min_length=2)

    @model_validator(mode="after")
    def _check_unique_names(self) -> "_Gate":
        names = Counter(name for child in self.children for name in basic_events(child))
        duplicates = sorted(name for name, count in names.items() if count > 1)
        if duplicates:
            raise ValueError(f"basic events {duplicates} occur more than once")
        return self


class AndGate(_Gate):
    """
    Faults propagate through an AND gate only when every child has failed.

    :param children: The subtrees combined by the gate, at least two.
    """

    type: Literal["and"] = "and"


class OrGate(_Gate):
    """
    Faults propagate through an OR gate when any child has failed.

    :param children: The subtrees combined by the gate, at least two.
    """

    type: Literal["or"] = "or"


FaultTree = Annotated[Union[BasicEvent, AndGate, OrGate], Field(discriminator="type")]
AndGate.model_rebuild()
OrGate.model_rebuild()

FAULT_TREE_ADAPTER: TypeAdapter = TypeAdapter(FaultTree)


def basic_events(ft: FaultTree) -> List[str]:
    """
    :param ft: the fault tree to inspect
    :return: the names of the basic events, left to right
    """
    names = []
    stack = [ft]
    while stack:
        node = stack.pop()
        if isinstance(node, BasicEvent):
            names.append(node.name)
        else:
            stack.extend(reversed(node.children))
    return names


def count_gates(ft: FaultTree) -> int:
    if isinstance(ft, BasicEvent):
        return 0
    return 1 + sum(count_gates(child) for child in ft.children)


def parse_ft(text: Union[str, bytes]) -> FaultTree:
    """
    Parse a fault tree from its JSON description. Gates keep their arity.

    :param text: the JSON document
    :return: the fault tree
    :raises SchemaError: on unknown node types, gates with fewer than two children or duplicate basic events
    """
    try:
        return FAULT_TREE_ADAPTER.validate_json(text)
    except ValidationError as err:
        raise SchemaError(f"Invalid fault tree: {err}") from err


def dump_ft(ft: FaultTree) -> str:
    return FAULT_TREE_ADAPTER.dump_json(ft, indent=2).decode("utf-8")
