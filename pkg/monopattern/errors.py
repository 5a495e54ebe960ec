class MonopatternError(Exception):
    """Base package exception."""

    exit_code: int = 1

    def __init__(self, message: str, *, code: str | None = None):
        super().__init__(message)
        self.code = code


class ContractError(MonopatternError):
    """An operation was called outside its precondition."""

    exit_code = 2


class InvalidParameter(ContractError):
    """A numeric parameter (k, eps, delta, trials, ...) is out of range."""


class IndexOutsideInterval(ContractError):
    """A query or restriction reached outside the view's index interval."""


class EmptyRestriction(ContractError):
    """A restriction produced an empty interval or an empty value range."""


class MalformedInterval(ContractError):
    """An index interval with lo > hi."""


class MalformedIntervals(ContractError):
    """Interval families that are not ordered, disjoint or properly nested."""


class DegenerateSuffix(ContractError):
    """A growing suffix was requested at the last index."""


class PreconditionMassTooLow(ContractError):
    """Interval family too light for the robustification lemma."""


class InfeasibleDensity(ContractError):
    """A far instance cannot hold ceil(eps*n) disjoint k-patterns."""


class DegenerateFit(ContractError):
    """Fewer than two distinct n values for the log-slope fit."""


class UnsupportedFormat(ContractError):
    """Sequence file extension is neither .txt nor .f64."""


class InvariantViolation(MonopatternError):
    """An internal invariant broke; results cannot be trusted."""

    exit_code = 1


class OneSidedErrorViolation(InvariantViolation):
    """A reported witness failed independent re-verification."""


class QueryBudgetExceeded(InvariantViolation):
    """A run issued more queries than its analytic bound allows."""


class RecursionDepthExceeded(InvariantViolation):
    """A recursive call did not decrease the sought pattern length."""
