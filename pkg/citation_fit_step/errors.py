# -*- coding: utf-8 -*-

"""Exceptions raised by the citation fitting code."""


class CitationFitError(Exception):
    """Base class for all errors raised by citation_fit_step."""


class DomainError(CitationFitError, ValueError):
    """A mathematical precondition does not hold, e.g. alpha <= 1 or n < 1."""


class ParseError(CitationFitError, ValueError):
    """Input data could not be parsed.

    Parameters
    ----------
    message : str
        What went wrong.
    line : int, optional
        The 1-based line of the input where the problem was found.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UsageError(CitationFitError, RuntimeError):
    """An operation or command was used incorrectly."""
