#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import logging
import math
from typing import Annotated, Callable, Collection, Dict, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from aws.osml.qcl.app_config import QclConfig
from aws.osml.qcl.errors import (
    BadParameter,
    EliminationRulePresent,
    InconsistentContext,
    NonLinearFormula,
    SharedAtoms,
    TooManyAtoms,
    UnknownAtom,
)

from .confidence import Confidence
from .formula import Atom, Bottom, Formula, Implies, Top, atoms, conjoin, disjoin, implies, is_linear, negate, render
from .proof import ProofTree
from .rules import ELIMINATION_RULES, Rule, apply_rule

logger = logging.getLogger(__name__)

Probability = Annotated[float, Field(ge=0.0, le=1.0)]
Columns = Dict[str, np.ndarray]


class IndependentContext(BaseModel):
    """
    A finite probability space given by one independent Bernoulli variable per atom.

    :param probs: probability that each atom is true
    """

    model_config = ConfigDict(frozen=True)

    probs: Dict[str, Probability]


class SemanticsResult(BaseModel):
    """
    :param p_true: exact probability that the formula evaluates to true
    """

    p_true: Probability


class MonteCarloEstimate(BaseModel):
    """
    A sampled estimate of the probability that a formula evaluates to true.

    :param p_true: the sample mean
    :param stderr: the standard error of the sample mean
    :param samples: the number of samples drawn
    """

    p_true: Probability
    stderr: float
    samples: int

    def consistent_with(self, c: Confidence, width: float = 3.0) -> bool:
        """
        :param c: the confidence to test against
        :param width: the number of standard errors tolerated outside the interval
        :return: True if the estimate lies within [t, 1 - f] widened by width standard errors
        """
        slack = width * self.stderr + QclConfig.TOLERANCE
        return c.t - slack <= self.p_true <= 1.0 - c.f + slack


def _truth_table(phi: Formula, columns: Columns, size: int) -> np.ndarray:
    if isinstance(phi, Atom):
        return columns[phi.name]
    if isinstance(phi, Top):
        return np.ones(size, dtype=bool)
    if isinstance(phi, Bottom):
        return np.zeros(size, dtype=bool)
    return ~_truth_table(phi.lhs, columns, size) | _truth_table(phi.rhs, columns, size)


def _check_atoms(names: Collection[str], ctx: IndependentContext, config: QclConfig) -> None:
    missing = sorted(name for name in names if name not in ctx.probs)
    if missing:
        raise UnknownAtom(f"atoms {missing} have no probability in the context")
    if len(names) > config.max_enumeration_atoms:
        raise TooManyAtoms(f"{len(names)} atoms exceed the enumeration bound of {config.max_enumeration_atoms}")


def _enumerate(
    names: Sequence[str],
    ctx: IndependentContext,
    event: Callable[[Columns, int], np.ndarray],
    config: QclConfig,
) -> float:
    """
    Sum the weights of the assignments of the given atoms on which the event holds. Assignments are enumerated as
    the binary digits of an integer index, in blocks of the configured size.
    """
    total = 1 << len(names)
    block = min(total, config.enumeration_block_size)
    partial_sums = []
    for start in range(0, total, block):
        index = np.arange(start, min(start + block, total), dtype=np.int64)
        weights = np.ones(len(index))
        columns: Columns = {}
        for position, name in enumerate(names):
            bits = ((index >> position) & 1).astype(bool)
            columns[name] = bits
            p = ctx.probs[name]
            weights *= np.where(bits, p, 1.0 - p)
        partial_sums.append(math.fsum(weights[event(columns, len(index))].tolist()))
    return min(max(math.fsum(partial_sums), 0.0), 1.0)


def eval_exact(phi: Formula, ctx: IndependentContext, config: Optional[QclConfig] = None) -> SemanticsResult:
    """
    Compute the probability that a formula evaluates to true by enumerating all assignments of its atoms, with
    implication read as material implication.

    :param phi: the formula to evaluate
    :param ctx: the independent context giving each atom its probability
    :param config: settings bounding the enumeration
    :return: the exact probability
    :raises UnknownAtom: if an atom of phi has no probability in ctx
    :raises TooManyAtoms: if phi has more distinct atoms than the enumeration bound
    """
    config = config or QclConfig()
    names = sorted(atoms(phi))
    _check_atoms(names, ctx, config)
    p_true = _enumerate(names, ctx, lambda columns, size: _truth_table(phi, columns, size), config)
    return SemanticsResult(p_true=p_true)


def holds(phi: Formula, c: Confidence, ctx: IndependentContext, config: Optional[QclConfig] = None) -> bool:
    """
    Decide whether a confidence is satisfied by a context, i.e. whether the probability of phi lies in [t, 1 - f].

    :param phi: the formula to evaluate
    :param c: the confidence claimed for phi
    :param ctx: the independent context
    :param config: settings bounding the enumeration
    :return: True if the probability of phi lies within the interval, up to 1e-9
    """
    p_true = eval_exact(phi, ctx, config).p_true
    return c.t - QclConfig.TOLERANCE <= p_true <= 1.0 - c.f + QclConfig.TOLERANCE


def _in_values(truth: np.ndarray, values: Collection[bool]) -> np.ndarray:
    accepted = set(bool(value) for value in values)
    if accepted == {True, False}:
        return np.ones(truth.shape, dtype=bool)
    if accepted == {True}:
        return truth
    if accepted == {False}:
        return ~truth
    return np.zeros(truth.shape, dtype=bool)


def check_independence_lemma(
    phi: Formula,
    psi: Formula,
    ctx: IndependentContext,
    S: Collection[bool],
    T: Collection[bool],
    config: Optional[QclConfig] = None,
) -> bool:
    """
    Check that two atom-disjoint formulas define independent random variables: the probability that phi takes a
    value in S and psi a value in T is the product of the marginal probabilities.

    :param phi: the first formula
    :param psi: the second formula
    :param ctx: the independent context
    :param S: accepted truth values of phi, a subset of {True, False}
    :param T: accepted truth values of psi, a subset of {True, False}
    :param config: settings bounding the enumeration
    :return: True if joint and product probabilities agree within 1e-9
    :raises SharedAtoms: if phi and psi have an atom in common
    """
    config = config or QclConfig()
    phi_atoms, psi_atoms = atoms(phi), atoms(psi)
    shared = phi_atoms & psi_atoms
    if shared:
        raise SharedAtoms(f"formulas share atoms {sorted(shared)}")
    _check_atoms(phi_atoms | psi_atoms, ctx, config)

    def phi_event(columns: Columns, size: int) -> np.ndarray:
        return _in_values(_truth_table(phi, columns, size), S)

    def psi_event(columns: Columns, size: int) -> np.ndarray:
        return _in_values(_truth_table(psi, columns, size), T)

    joint = _enumerate(
        sorted(phi_atoms | psi_atoms), ctx, lambda columns, size: phi_event(columns, size) & psi_event(columns, size), config
    )
    marginal_phi = _enumerate(sorted(phi_atoms), ctx, phi_event, config)
    marginal_psi = _enumerate(sorted(psi_atoms), ctx, psi_event, config)
    return abs(joint - marginal_phi * marginal_psi) <= QclConfig.TOLERANCE


def check_soundness(tree: ProofTree, ctx: IndependentContext, config: Optional[QclConfig] = None) -> bool:
    """
    Check the conclusion of an introduction-only proof of a linear formula against the exact semantics, given a
    context that satisfies every hypothesis used by the proof.

    :param tree: the proof to check
    :param ctx: an independent context consistent with the Ax leaves of the proof
    :param config: settings bounding the enumeration
    :return: True if the root confidence holds in ctx
    :raises NonLinearFormula: if an atom occurs twice in the root formula
    :raises EliminationRulePresent: if the proof uses ImpEl or ImpEr
    :raises InconsistentContext: if an Ax leaf confidence does not hold in ctx
    """
    if not is_linear(tree.goal):
        raise NonLinearFormula(f"{render(tree.goal)} is not linear")
    eliminations = tree.rules_used() & ELIMINATION_RULES
    if eliminations:
        raise EliminationRulePresent(f"proof uses elimination rules {sorted(rule.value for rule in eliminations)}")
    for node in tree.nodes():
        if node.rule == Rule.Ax and not holds(node.goal, node.confidence, ctx, config):
            raise InconsistentContext(f"hypothesis {render(node.goal)} : {node.confidence} does not hold in the context")
    return holds(tree.goal, tree.confidence, ctx, config)


def estimate_monte_carlo(
    phi: Formula, ctx: IndependentContext, samples: Optional[int] = None, seed: int = 0
) -> MonteCarloEstimate:
    """
    Estimate the probability that a formula evaluates to true by sampling the context. Used for diagnostics on
    formulas beyond the enumeration bound.

    :param phi: the formula to evaluate
    :param ctx: the independent context
    :param samples: number of assignments to draw, defaults to the configured sample count
    :param seed: seed of the random generator
    :return: the estimate with its standard error
    """
    samples = samples or QclConfig().monte_carlo_samples
    names = sorted(atoms(phi))
    missing = [name for name in names if name not in ctx.probs]
    if missing:
        raise UnknownAtom(f"atoms {missing} have no probability in the context")
    rng = np.random.default_rng(seed)
    columns = {name: rng.random(samples) < ctx.probs[name] for name in names}
    p_true = float(np.mean(_truth_table(phi, columns, samples)))
    stderr = math.sqrt(p_true * (1.0 - p_true) / samples)
    return MonteCarloEstimate(p_true=p_true, stderr=stderr, samples=samples)


def _rule_operands(rule: Rule, formulas: Sequence[Formula]) -> Tuple[Tuple[Formula, ...], Formula]:
    if rule == Rule.NegI:
        return (formulas[0],), negate(formulas[0])
    if rule in (Rule.ImpI, Rule.AndI, Rule.OrI):
        build = {Rule.ImpI: implies, Rule.AndI: conjoin, Rule.OrI: disjoin}[rule]
        return (formulas[0], formulas[1]), build(formulas[0], formulas[1])
    implication, other = formulas
    if not isinstance(implication, Implies):
        raise BadParameter(f"{rule.value} needs an implication as first premise, got {render(implication)}")
    if rule == Rule.ImpEl and other == implication.lhs:
        return (implication.lhs, implication.rhs), implication.rhs
    if rule == Rule.ImpEr and other == implication.rhs:
        return (implication.lhs, implication.rhs), implication.lhs
    raise BadParameter(f"second premise {render(other)} does not match {render(implication)} for {rule.value}")


def check_rule_soundness(
    rule: Rule,
    premises: Sequence[Tuple[Formula, Confidence]],
    ctx: IndependentContext,
    config: Optional[QclConfig] = None,
) -> bool:
    """
    Check a single rule application against the exact semantics. The formulas the rule combines must not share
    atoms; elimination rules are included, which makes this an exploratory diagnostic.

    :param rule: a rule with premises
    :param premises: formula and confidence of each premise, in rule order
    :param ctx: a context in which every premise confidence holds
    :param config: settings bounding the enumeration
    :return: True if the concluded confidence holds in ctx
    :raises SharedAtoms: if the combined formulas share an atom
    :raises InconsistentContext: if a premise does not hold in ctx
    """
    operands, conclusion = _rule_operands(rule, [formula for formula, _ in premises])
    if len(operands) == 2 and atoms(operands[0]) & atoms(operands[1]):
        raise SharedAtoms(f"{render(operands[0])} and {render(operands[1])} share atoms")
    for formula, confidence in premises:
        if not holds(formula, confidence, ctx, config):
            raise InconsistentContext(f"premise {render(formula)} : {confidence} does not hold in the context")
    confidence = apply_rule(rule, [confidence for _, confidence in premises])
    return holds(conclusion, confidence, ctx, config)
