"""Exception types shared across the package."""

from __future__ import annotations


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class OutOfRegimeError(PreconditionError):
    """Parameters fall outside the residue class where a closed form is known."""


class ClaimError(AssertionError):
    """A generated construction failed one of its own structural claims.

    ``discrepancy`` carries the failing claims so a report can serialize them.
    """

    def __init__(self, message: str, discrepancy: object = None):
        super().__init__(message)
        self.discrepancy = discrepancy


class GreedyStuck(RuntimeError):
    """Greedy embedding ran out of free neighbours.

    ``precondition_met`` tells a caller whether this is an expected failure
    (host too sparse) or a bug (it should never happen when the host minimum
    degree is at least n - 1).
    """

    def __init__(self, message: str, precondition_met: bool):
        super().__init__(message)
        self.precondition_met = precondition_met


class ExtractionError(RuntimeError):
    """No branch of the certificate extractor produced a structure."""

    def __init__(self, message: str, residual: object = None):
        super().__init__(message)
        self.residual = residual


class CounterexampleFound(RuntimeError):
    """A checked published statement failed on a concrete instance."""

    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload
