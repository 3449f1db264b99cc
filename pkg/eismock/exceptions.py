# -*- coding: utf-8 -*-
"""Common exceptions"""

class ConsistencyError(Exception):
    """Raised when two independent computations of the same quantity disagree, or when an
    internal invariant is found broken."""
    pass


class DomainError(ValueError):
    """Raised when an argument lies outside the mathematical domain of an operation."""
    pass


class ParityError(DomainError):
    """Raised when a pair of characters is not compatible with the weight,
    i.e. when psi(-1)*rho(-1) differs from (-1)^k."""
    pass


class TruncationError(ValueError):
    """Raised when a truncated q-expansion is too short for the requested point.

    Args:
        message (:obj:`str`): the error message.
        required_n_max (:obj:`int`): the truncation order the point requires.
    """
    def __init__(self, message, required_n_max):
        super(TruncationError, self).__init__(message)
        self.required_n_max = required_n_max
