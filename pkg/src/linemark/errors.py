"""Exceptions raised by the constructors and the planner."""


class ConstructionError(Exception):
    pass


class PreconditionError(ConstructionError, ValueError):
    """The parameters do not satisfy the hypotheses of the requested construction."""


class Infeasible(ConstructionError):
    """The counting condition fails, so no marking exists."""


class UnsupportedOpenCase(ConstructionError):
    """Feasible parameters for which no construction is known (composite k, a >= 1)."""


class ExperimentalFailure(ConstructionError):
    """The prime-power construction did not verify for any tried q' table.

    ``attempts`` is the number of q' tables tried and ``report`` the
    verification report of the default table.
    """

    def __init__(self, message, attempts=0, report=None):
        super().__init__(message)
        self.attempts = attempts
        self.report = report
