"""Exception hierarchy. Every error carries the offending witness when there is one."""


class AlgebraError(Exception):
    """Base class; ``witness`` is the first offending tuple found, if any."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class IndexOutOfRange(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class BadIdentity(AlgebraError):
    pass


class NotAGroup(AlgebraError):
    pass


class DegreeTooLarge(AlgebraError):
    pass


class OrderTooLarge(AlgebraError):
    pass


class NotASymmetricGroup(AlgebraError):
    pass


class DomainMismatch(AlgebraError):
    pass


class AmbientMismatch(AlgebraError):
    pass


class NotHomomorphism(AlgebraError):
    pass


class NotNormal(AlgebraError):
    pass


class NotComplement(AlgebraError):
    pass


class NotInjective(AlgebraError):
    pass


class NotACocycle(AlgebraError):
    pass


class NotSplit(AlgebraError):
    pass


class NotSchreier(AlgebraError):
    pass


class NotCentral(AlgebraError):
    pass


class SearchBudgetExceeded(AlgebraError):
    pass


class AxiomViolated(AlgebraError):
    def __init__(self, axiom, witness=None):
        super().__init__(f"action axiom ({axiom}) violated at {witness}", witness)
        self.axiom = axiom


class NotInHomSet(AlgebraError):
    pass


class HypothesisFailed(AlgebraError):
    pass


class SpecError(AlgebraError):
    """Malformed input document."""
