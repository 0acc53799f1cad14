#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
from typing import Iterator, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, computed_field, field_validator, model_validator

from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.errors import SchemaError, SideConditionViolated, UnknownAtom

from .confidence import Confidence
from .formula import TOP, Atom, Bottom, Formula, Implies, conjoin, disjoin, implies, negate, render
from .rules import ARITY, Rule, apply_rule

logger = logging.getLogger(__name__)


class Hypothesis(BaseModel):
    """
    A formula with confidence held in a sequent context.
    """

    model_config = ConfigDict(frozen=True)

    formula: Formula
    confidence: Confidence


class Sequent(BaseModel):
    """
    The judgement Γ ⊢ φ : c. The context is a set keyed by formula; a later hypothesis on the same formula
    replaces an earlier one.

    :param context: the hypotheses Γ
    :param goal: the concluded formula φ, kept in its desugared form
    :param confidence: the concluded confidence c
    """

    model_config = ConfigDict(frozen=True)

    context: Tuple[Hypothesis, ...] = ()
    goal: Formula
    confidence: Confidence

    @field_validator("context", mode="after")
    @classmethod
    def _deduplicate(cls, context: Tuple[Hypothesis, ...]) -> Tuple[Hypothesis, ...]:
        by_formula = {}
        for hypothesis in context:
            by_formula[hypothesis.formula] = hypothesis
        if len(by_formula) == len(context):
            return context
        return tuple(by_formula.values())

    @computed_field
    @property
    def rendering(self) -> str:
        return render(self.goal)

    def lookup(self, formula: Formula) -> Optional[Confidence]:
        for hypothesis in self.context:
            if hypothesis.formula == formula:
                return hypothesis.confidence
        return None


class ProofTree(BaseModel):
    """
    A derivation labelled with rule tags. Derived rules (NegI, AndI, OrI) are first-class nodes.

    :param rule: the rule concluding this node
    :param premises: sub-derivations, in rule order
    :param conclusion: the sequent concluded at this node
    """

    model_config = ConfigDict(frozen=True)

    rule: Rule
    premises: Tuple["ProofTree", ...] = ()
    conclusion: Sequent

    @model_validator(mode="after")
    def _check_arity(self) -> "ProofTree":
        if len(self.premises) != ARITY[self.rule]:
            raise ValueError(f"{self.rule.value} expects {ARITY[self.rule]} premises, got {len(self.premises)}")
        return self

    @property
    def goal(self) -> Formula:
        return self.conclusion.goal

    @property
    def confidence(self) -> Confidence:
        return self.conclusion.confidence

    def nodes(self) -> Iterator["ProofTree"]:
        yield self
        for premise in self.premises:
            yield from premise.nodes()

    def rules_used(self) -> frozenset:
        return frozenset(node.rule for node in self.nodes())


class ProofShape(BaseModel):
    """
    A derivation without confidences, the input of confidence inference. Build shapes with the helpers below so
    that goal formulas agree with the rules.
    """

    model_config = ConfigDict(frozen=True)

    rule: Rule
    premises: Tuple["ProofShape", ...] = ()
    goal: Formula

    @model_validator(mode="after")
    def _check_arity(self) -> "ProofShape":
        if len(self.premises) != ARITY[self.rule]:
            raise ValueError(f"{self.rule.value} expects {ARITY[self.rule]} premises, got {len(self.premises)}")
        return self


class ProofDiagnostic(BaseModel):
    """
    The first node of a proof tree that fails checking.

    :param path: premise indices leading from the root to the failing node
    :param rule: the rule of the failing node
    :param reason: a human readable description of the failure
    """

    path: Tuple[int, ...]
    rule: Rule
    reason: str

    def __str__(self) -> str:
        location = "/".join(str(index) for index in self.path) or "root"
        return f"{location} ({self.rule.value}): {self.reason}"


def ax(name: str) -> ProofShape:
    return ProofShape(rule=Rule.Ax, goal=Atom(name=name))


def unk(phi: Formula) -> ProofShape:
    return ProofShape(rule=Rule.Unk, goal=phi)


def top_i() -> ProofShape:
    return ProofShape(rule=Rule.TopI, goal=TOP)


def bot_i() -> ProofShape:
    return ProofShape(rule=Rule.BotI, goal=Bottom())


def imp_i(phi: ProofShape, psi: ProofShape) -> ProofShape:
    return ProofShape(rule=Rule.ImpI, premises=(phi, psi), goal=implies(phi.goal, psi.goal))


def neg_i(phi: ProofShape) -> ProofShape:
    return ProofShape(rule=Rule.NegI, premises=(phi,), goal=negate(phi.goal))


def and_i(phi: ProofShape, psi: ProofShape) -> ProofShape:
    return ProofShape(rule=Rule.AndI, premises=(phi, psi), goal=conjoin(phi.goal, psi.goal))


def or_i(phi: ProofShape, psi: ProofShape) -> ProofShape:
    return ProofShape(rule=Rule.OrI, premises=(phi, psi), goal=disjoin(phi.goal, psi.goal))


def imp_e_l(implication: ProofShape, antecedent: ProofShape) -> ProofShape:
    if not isinstance(implication.goal, Implies):
        raise ValueError(f"ImpEl needs an implication as first premise, got {render(implication.goal)}")
    return ProofShape(rule=Rule.ImpEl, premises=(implication, antecedent), goal=implication.goal.rhs)


def imp_e_r(implication: ProofShape, consequent: ProofShape) -> ProofShape:
    if not isinstance(implication.goal, Implies):
        raise ValueError(f"ImpEr needs an implication as first premise, got {render(implication.goal)}")
    return ProofShape(rule=Rule.ImpEr, premises=(implication, consequent), goal=implication.goal.lhs)


def infer_confidences(shape: ProofShape, leaf_assignment: Mapping[str, Confidence]) -> ProofTree:
    """
    Evaluate a proof shape bottom-up. The context Γ of every sequent holds one atomic hypothesis per entry of the
    leaf assignment.

    :param shape: the derivation to evaluate
    :param leaf_assignment: confidence of every atom used by an Ax leaf
    :return: the proof tree with every conclusion confidence computed by its rule
    :raises UnknownAtom: if an Ax leaf is not an atom of the leaf assignment
    :raises SideConditionViolated: if an elimination rule is applied outside its side conditions
    """
    context = tuple(
        Hypothesis(formula=Atom(name=name), confidence=confidence) for name, confidence in sorted(leaf_assignment.items())
    )
    return _infer(shape, leaf_assignment, context)


def _infer(shape: ProofShape, leaf_assignment: Mapping[str, Confidence], context: Tuple[Hypothesis, ...]) -> ProofTree:
    premises = tuple(_infer(premise, leaf_assignment, context) for premise in shape.premises)
    axiom_conf = None
    if shape.rule == Rule.Ax:
        if not isinstance(shape.goal, Atom) or shape.goal.name not in leaf_assignment:
            raise UnknownAtom(f"no confidence assigned to hypothesis {render(shape.goal)}")
        axiom_conf = leaf_assignment[shape.goal.name]
    confidence = apply_rule(shape.rule, [premise.confidence for premise in premises], axiom_conf)
    return ProofTree(
        rule=shape.rule,
        premises=premises,
        conclusion=Sequent(context=context, goal=shape.goal, confidence=confidence),
    )


def _expected_goal(node: ProofTree) -> Optional[Formula]:
    goals = [premise.goal for premise in node.premises]
    if node.rule == Rule.ImpI:
        return implies(goals[0], goals[1])
    if node.rule == Rule.NegI:
        return negate(goals[0])
    if node.rule == Rule.AndI:
        return conjoin(goals[0], goals[1])
    if node.rule == Rule.OrI:
        return disjoin(goals[0], goals[1])
    if node.rule == Rule.TopI:
        return TOP
    if node.rule == Rule.BotI:
        return Bottom()
    return None


def _check_node(node: ProofTree) -> Optional[str]:
    context = set(node.conclusion.context)
    for index, premise in enumerate(node.premises):
        if set(premise.conclusion.context) != context:
            return f"premise {index} is stated in a different context"

    expected_goal = _expected_goal(node)
    if expected_goal is not None and node.goal != expected_goal:
        return f"goal {render(node.goal)} does not match {render(expected_goal)}"
    if node.rule == Rule.ImpEl and node.premises[0].goal != implies(node.premises[1].goal, node.goal):
        return "first premise must be the implication from the second premise to the goal"
    if node.rule == Rule.ImpEr and node.premises[0].goal != implies(node.goal, node.premises[1].goal):
        return "first premise must be the implication from the goal to the second premise"

    axiom_conf = None
    if node.rule == Rule.Ax:
        axiom_conf = node.conclusion.lookup(node.goal)
        if axiom_conf is None:
            return f"hypothesis {render(node.goal)} is not in the context"
    try:
        expected = apply_rule(node.rule, [premise.confidence for premise in node.premises], axiom_conf)
    except SideConditionViolated as err:
        return f"side condition violated: {err}"
    if not node.confidence.is_close(expected, QclConfig.TOLERANCE):
        return f"confidence {node.confidence} differs from the rule result {expected}"
    return None


def find_proof_error(tree: ProofTree) -> Optional[ProofDiagnostic]:
    """
    Locate the first node, in depth-first premise order, whose conclusion does not follow from its premises.

    :param tree: the proof tree to check
    :return: the diagnostic of the first failing node or None if the proof checks
    """
    stack: List[Tuple[Tuple[int, ...], ProofTree]] = [((), tree)]
    while stack:
        path, node = stack.pop()
        reason = _check_node(node)
        if reason is not None:
            return ProofDiagnostic(path=path, rule=node.rule, reason=reason)
        for index in reversed(range(len(node.premises))):
            stack.append((path + (index,), node.premises[index]))
    return None


def check_proof(tree: ProofTree) -> bool:
    """
    Validate every node of a proof tree: confidences follow the rule arithmetic within 1e-9, side conditions hold,
    goals have the shape the rule produces and Ax conclusions are hypotheses of the context.

    :param tree: the proof tree to check
    :return: True if the proof checks
    """
    diagnostic = find_proof_error(tree)
    if diagnostic is not None:
        logger.debug(f"Proof check failed at {diagnostic}")
        return False
    return True


def dump_proof(tree: ProofTree) -> str:
    """
    Write a proof tree as JSON. Confidences keep full double precision: rounding every node independently would
    let a translated proof fail its own check at the 1e-9 tolerance.

    :param tree: the proof tree to write
    :return: the JSON document
    """
    return tree.model_dump_json(indent=2)


def parse_proof(text: str) -> ProofTree:
    """
    Parse a proof tree from its JSON form.

    :param text: the JSON document
    :return: the proof tree
    :raises SchemaError: if the document does not describe a proof tree
    """
    try:
        return ProofTree.model_validate_json(text)
    except ValidationError as err:
        raise SchemaError(f"Invalid proof tree: {err}") from err
