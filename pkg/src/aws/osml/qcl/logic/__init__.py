#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

# Telling flake8 to not flag errors in this file. It is normal that these classes are imported but not used in an
# __init__.py file.
# flake8: noqa

from .confidence import CERTAINLY_FALSE, CERTAINLY_TRUE, UNKNOWN, Confidence, clamp
from .formula import (
    BOTTOM,
    FORMULA_ADAPTER,
    TOP,
    Atom,
    Bottom,
    Formula,
    Implies,
    Top,
    atom_occurrences,
    atoms,
    conjoin,
    disjoin,
    evaluate_boolean,
    implies,
    is_linear,
    match_conjunction,
    match_disjunction,
    match_negation,
    negate,
    render,
)
from .proof import (
    Hypothesis,
    ProofDiagnostic,
    ProofShape,
    ProofTree,
    Sequent,
    and_i,
    ax,
    bot_i,
    check_proof,
    dump_proof,
    find_proof_error,
    imp_e_l,
    imp_e_r,
    imp_i,
    infer_confidences,
    neg_i,
    or_i,
    parse_proof,
    top_i,
    unk,
)
from .rules import (
    ARITY,
    ELIMINATION_RULES,
    INTRODUCTION_RULES,
    Rule,
    apply_rule,
    rule_and_i,
    rule_const,
    rule_imp_e_l,
    rule_imp_e_r,
    rule_imp_i,
    rule_neg_i,
    rule_or_i,
)
from .semantics import (
    IndependentContext,
    MonteCarloEstimate,
    SemanticsResult,
    check_independence_lemma,
    check_rule_soundness,
    check_soundness,
    estimate_monte_carlo,
    eval_exact,
    holds,
)
