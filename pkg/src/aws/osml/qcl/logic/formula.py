#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from collections import Counter
from typing import Annotated, FrozenSet, Literal, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter


class Atom(BaseModel):
    """
    An atomic proposition, e.g. "component A has no fault".
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["atom"] = "atom"
    name: str = Field(min_length=1)


class Top(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["top"] = "top"


class Bottom(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["bottom"] = "bottom"


class Implies(BaseModel):
    """
    The only connective of the core syntax, negation, disjunction and conjunction are encoded with it.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["implies"] = "implies"
    lhs: "Formula"
    rhs: "Formula"


Formula = Annotated[Union[Atom, Top, Bottom, Implies], Field(discriminator="kind")]
Implies.model_rebuild()

FORMULA_ADAPTER: TypeAdapter = TypeAdapter(Formula)

TOP = Top()
BOTTOM = Bottom()


def implies(phi: Formula, psi: Formula) -> Implies:
    return Implies(lhs=phi, rhs=psi)


def negate(phi: Formula) -> Implies:
    """
    :return: the encoding of not phi, phi => bottom
    """
    return Implies(lhs=phi, rhs=BOTTOM)


def disjoin(phi: Formula, psi: Formula) -> Implies:
    """
    :return: the encoding of phi or psi, (not phi) => psi
    """
    return Implies(lhs=negate(phi), rhs=psi)


def conjoin(phi: Formula, psi: Formula) -> Implies:
    """
    :return: the encoding of phi and psi, not ((not phi) or (not psi))
    """
    return negate(disjoin(negate(phi), negate(psi)))


def match_negation(phi: Formula) -> Optional[Formula]:
    if isinstance(phi, Implies) and isinstance(phi.rhs, Bottom):
        return phi.lhs
    return None


def match_disjunction(phi: Formula) -> Optional[Tuple[Formula, Formula]]:
    if isinstance(phi, Implies):
        left = match_negation(phi.lhs)
        if left is not None:
            return left, phi.rhs
    return None


def match_conjunction(phi: Formula) -> Optional[Tuple[Formula, Formula]]:
    inner = match_negation(phi)
    if inner is None:
        return None
    parts = match_disjunction(inner)
    if parts is None:
        return None
    left, right = match_negation(parts[0]), match_negation(parts[1])
    if left is None or right is None:
        return None
    return left, right


def atom_occurrences(phi: Formula) -> Counter:
    """
    Count how many times each atom name occurs in the formula.

    :param phi: the formula to inspect
    :return: a Counter keyed by atom name
    """
    counts = Counter()
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            counts[node.name] += 1
        elif isinstance(node, Implies):
            stack.append(node.rhs)
            stack.append(node.lhs)
    return counts


def atoms(phi: Formula) -> FrozenSet[str]:
    return frozenset(atom_occurrences(phi))


def is_linear(phi: Formula) -> bool:
    """
    A formula is linear when each atomic proposition occurs at most once. The sugar encodings never duplicate a
    subformula so counting over the raw syntax tree is exact.

    :param phi: the formula to inspect
    :return: True if no atom name occurs twice
    """
    return all(count == 1 for count in atom_occurrences(phi).values())


def evaluate_boolean(phi: Formula, assignment: Mapping[str, bool]) -> bool:
    """
    Classical two-valued evaluation with => read as material implication.

    :param phi: the formula to evaluate
    :param assignment: truth value of every atom of phi
    :return: the truth value of phi
    """
    if isinstance(phi, Atom):
        return bool(assignment[phi.name])
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Bottom):
        return False
    return (not evaluate_boolean(phi.lhs, assignment)) or evaluate_boolean(phi.rhs, assignment)


def _render_operand(phi: Formula) -> str:
    text = render(phi)
    binary = match_conjunction(phi) is not None or (isinstance(phi, Implies) and match_negation(phi) is None)
    return f"({text})" if binary else text


def render(phi: Formula) -> str:
    """
    Pretty print a formula, folding the encodings of negation, disjunction and conjunction back into their sugar.

    :param phi: the formula to print
    :return: e.g. "(A ∨ B) ∧ (C ∨ D)"
    """
    if isinstance(phi, Atom):
        return phi.name
    if isinstance(phi, Top):
        return "⊤"
    if isinstance(phi, Bottom):
        return "⊥"
    conjunction = match_conjunction(phi)
    if conjunction is not None:
        return f"{_render_operand(conjunction[0])} ∧ {_render_operand(conjunction[1])}"
    negated = match_negation(phi)
    if negated is not None:
        return f"¬{_render_operand(negated)}"
    disjunction = match_disjunction(phi)
    if disjunction is not None:
        return f"{_render_operand(disjunction[0])} ∨ {_render_operand(disjunction[1])}"
    return f"{_render_operand(phi.lhs)} ⇒ {_render_operand(phi.rhs)}"
