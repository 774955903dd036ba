"""Exception types shared across the package."""


class CorrwronError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CorrwronError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of a special function."""


class UnknownKernelError(CorrwronError, KeyError):
    """Kernel identifier not present in the catalog."""


class NoClosedFormError(CorrwronError, LookupError):
    """No closed-form expression is tabulated for the requested object."""


class DecayError(DomainError):
    """A modulation would destroy integrability of a kernel."""


class NoConvergenceError(CorrwronError, ArithmeticError):
    """A quadrature routine exhausted its budget.

    Raised only when the caller demands a converged result; routines
    normally report the failure through ``QuadResult.converged``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
