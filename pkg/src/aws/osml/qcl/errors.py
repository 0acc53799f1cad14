#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.


class QclError(Exception):
    """
    Base class of every error raised by the QCL package.
    """


class QclInputError(QclError):
    """
    Raised when user supplied inputs (files, formulas, configurations) are malformed or inconsistent. The command
    line front end maps this family to exit status 2.
    """


class QclComputationError(QclError):
    """
    Raised when a computation over valid inputs cannot be carried out. The command line front end maps this family
    to exit status 3.
    """


class SchemaError(QclInputError):
    pass


class UnknownAtom(QclInputError):
    pass


class UnknownBasicEvent(QclInputError):
    pass


class TooManyAtoms(QclInputError):
    pass


class SharedAtoms(QclInputError):
    pass


class NonLinearFormula(QclInputError):
    pass


class EliminationRulePresent(QclInputError):
    pass


class MissingAxiomConfidence(QclInputError):
    pass


class InconsistentContext(QclInputError):
    """
    Raised when an independent context does not satisfy the confidences assigned to the hypotheses of a proof.
    """


class BadParameter(QclInputError):
    pass


class ComponentMismatch(QclInputError):
    """
    Raised when the components of an allocation problem are not in bijection with the fault tree basic events.
    """


class DegenerateConfidence(QclInputError):
    pass


class TooLarge(QclInputError):
    pass


class ClampedOutOfSpace(QclComputationError):
    """
    Raised when a clamped rule output still violates t + f <= 1, which signals a bug in the rule arithmetic.
    """


class SideConditionViolated(QclComputationError):
    pass


class EvalError(QclComputationError):
    pass
