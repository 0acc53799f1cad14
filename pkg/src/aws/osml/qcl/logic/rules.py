#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

from enum import auto
from typing import Optional, Sequence

from aws.osml.qcl.errors import MissingAxiomConfidence, SideConditionViolated
from aws.osml.qcl.utils import AutoStringEnum

from .confidence import CERTAINLY_FALSE, CERTAINLY_TRUE, UNKNOWN, Confidence, clamp


class Rule(str, AutoStringEnum):
    """
    Tags of the proof rules. The values are written verbatim into proof JSON.

    :cvar Ax: hypothesis taken from the context
    :cvar Unk: anything holds with null confidence
    :cvar TopI: truth introduction
    :cvar BotI: falsity introduction
    :cvar ImpI: implication introduction
    :cvar ImpEl: implication elimination on the antecedent (modus ponens)
    :cvar ImpEr: implication elimination on the consequent (modus tollens)
    :cvar NegI: derived negation introduction
    :cvar AndI: derived conjunction introduction
    :cvar OrI: derived disjunction introduction
    """

    Ax = auto()
    Unk = auto()
    TopI = auto()
    BotI = auto()
    ImpI = auto()
    ImpEl = auto()
    ImpEr = auto()
    NegI = auto()
    AndI = auto()
    OrI = auto()


ARITY = {
    Rule.Ax: 0,
    Rule.Unk: 0,
    Rule.TopI: 0,
    Rule.BotI: 0,
    Rule.NegI: 1,
    Rule.ImpI: 2,
    Rule.ImpEl: 2,
    Rule.ImpEr: 2,
    Rule.AndI: 2,
    Rule.OrI: 2,
}

ELIMINATION_RULES = frozenset({Rule.ImpEl, Rule.ImpEr})
INTRODUCTION_RULES = frozenset(rule for rule in Rule if rule not in ELIMINATION_RULES)


def rule_imp_i(c_phi: Confidence, c_psi: Confidence) -> Confidence:
    t, f = c_phi.t, c_phi.f
    t2, f2 = c_psi.t, c_psi.f
    return clamp(f + t2 - f * t2, t * f2)


def rule_imp_e_l(c_imp: Confidence, c_phi: Confidence) -> Confidence:
    """
    Modus ponens: from phi => psi : (t, f) and phi : (t', f') conclude psi.

    :raises SideConditionViolated: if t' = 0 or f' = 1, a false antecedent says nothing about psi
    """
    t, f = c_imp.t, c_imp.f
    t2, f2 = c_phi.t, c_phi.f
    if t2 == 0.0 or f2 == 1.0:
        raise SideConditionViolated(f"ImpEl requires t' != 0 and f' != 1 on the antecedent, got {c_phi}")
    return clamp(1.0 - (1.0 - t) / t2, f / (1.0 - f2))


def rule_imp_e_r(c_imp: Confidence, c_psi: Confidence) -> Confidence:
    """
    Modus tollens: from phi => psi : (t, f) and psi : (t', f') conclude phi.

    :raises SideConditionViolated: if t' = 1 or f' = 0, a true consequent says nothing about phi
    """
    t, f = c_imp.t, c_imp.f
    t2, f2 = c_psi.t, c_psi.f
    if t2 == 1.0 or f2 == 0.0:
        raise SideConditionViolated(f"ImpEr requires t' != 1 and f' != 0 on the consequent, got {c_psi}")
    return clamp(f / (1.0 - t2), 1.0 - (1.0 - t) / f2)


def rule_neg_i(c: Confidence) -> Confidence:
    return Confidence(t=c.f, f=c.t)


def rule_and_i(c1: Confidence, c2: Confidence) -> Confidence:
    return clamp(c1.t * c2.t, c1.f + c2.f - c1.f * c2.f)


def rule_or_i(c1: Confidence, c2: Confidence) -> Confidence:
    return clamp(c1.t + c2.t - c1.t * c2.t, c1.f * c2.f)


def rule_const(tag: Rule, axiom_conf: Optional[Confidence] = None) -> Confidence:
    """
    Confidence concluded by a rule without premises.

    :param tag: one of Ax, Unk, TopI, BotI
    :param axiom_conf: the hypothesis confidence, required for Ax only
    :return: the concluded confidence
    :raises MissingAxiomConfidence: if tag is Ax and no confidence was given
    """
    if tag == Rule.Ax:
        if axiom_conf is None:
            raise MissingAxiomConfidence("the Ax rule requires the confidence of its hypothesis")
        return axiom_conf
    constants = {Rule.Unk: UNKNOWN, Rule.TopI: CERTAINLY_TRUE, Rule.BotI: CERTAINLY_FALSE}
    if tag not in constants:
        raise ValueError(f"{tag} is not a rule without premises")
    return constants[tag]


_BINARY_RULES = {
    Rule.ImpI: rule_imp_i,
    Rule.ImpEl: rule_imp_e_l,
    Rule.ImpEr: rule_imp_e_r,
    Rule.AndI: rule_and_i,
    Rule.OrI: rule_or_i,
}


def apply_rule(tag: Rule, premises: Sequence[Confidence], axiom_conf: Optional[Confidence] = None) -> Confidence:
    """
    Dispatch to the arithmetic of a rule.

    :param tag: the rule to apply
    :param premises: confidences of the premises, in rule order
    :param axiom_conf: the hypothesis confidence for Ax
    :return: the concluded confidence
    """
    if len(premises) != ARITY[tag]:
        raise ValueError(f"{tag.value} expects {ARITY[tag]} premises, got {len(premises)}")
    if tag == Rule.NegI:
        return rule_neg_i(premises[0])
    if tag in _BINARY_RULES:
        return _BINARY_RULES[tag](premises[0], premises[1])
    return rule_const(tag, axiom_conf)
