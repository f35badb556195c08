"""Exception types shared across the package."""

from __future__ import annotations


class PropBError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(PropBError):
    """Malformed hypergraph text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UniformityError(PropBError):
    """An operation that needs an r-uniform hypergraph got something else."""


class SizeCapError(PropBError):
    """A derived structure would exceed its configured size cap."""


class BudgetError(PropBError):
    """An exhaustive search would exceed its configured work budget."""


class ConvergenceError(PropBError):
    """An iterative eigensolve did not reach the requested tolerance."""
