"""Exception hierarchy shared by all modules.

The CLI maps these onto its exit codes: malformed input -> 4,
precondition failures (e.g. a claw witness) -> 2, exhausted search
budgets -> 3.  Invalid certificates are *reports*, not exceptions, so
verifiers return them and the CLI exits 1.
"""


class LccError(Exception):
    """Base class for all package errors."""


class MalformedInputError(LccError):
    """Structurally bad input: indices out of range, bad JSON shapes."""


class PreconditionError(LccError):
    """A documented precondition does not hold for the given input.

    Carries an optional ``witness`` (e.g. the claw or the offending
    vertex pair) so callers can surface it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ClawError(PreconditionError):
    """Input graph is not claw-free; witness = (center, (a, b, c))."""


class BudgetExhaustedError(LccError):
    """A search ran out of node budget before proving its answer.

    ``best`` carries the best-known unproven bound, if any.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class InfeasibleBudgetError(LccError):
    """A construction was asked for parameters it can prove impossible.

    ``max_feasible`` names the largest feasible size for the budget.
    """

    def __init__(self, message, max_feasible=None):
        super().__init__(message)
        self.max_feasible = max_feasible
