"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line can map failures to
distinct process exit statuses without a lookup table of its own.
"""

from __future__ import annotations


class DksError(Exception):
    exit_code = 1


# -- input parsing ---------------------------------------------------------

class InputError(DksError, ValueError):
    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeader(InputError):
    pass


class MalformedLine(InputError):
    pass


class SelfLoop(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class WeightLengthMismatch(InputError):
    pass


# -- expressions -----------------------------------------------------------

class ExpressionError(DksError, ValueError):
    exit_code = 3


class ExpressionSyntaxError(ExpressionError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"position {position}: {message}")


class BadLabel(ExpressionError):
    pass


class JoinSameLabel(ExpressionError):
    pass


class RelabelSameLabel(ExpressionError):
    pass


class NotCograph(ExpressionError):
    pass


# -- solver preconditions --------------------------------------------------

class PreconditionError(DksError, ValueError):
    exit_code = 4


class KTooLarge(PreconditionError):
    pass


class NotBlockGraph(PreconditionError):
    pass


class SolverNotApplicable(PreconditionError):
    pass


class StrategyNotApplicable(PreconditionError):
    pass


class InvalidDeletionSet(PreconditionError):
    pass


class DeletionSetTooLarge(PreconditionError):
    pass


class InvalidPartition(PreconditionError):
    pass


class BudgetTooLarge(PreconditionError):
    pass


class InvalidSpec(PreconditionError):
    pass


# -- search limits ---------------------------------------------------------

class SearchLimitError(DksError):
    exit_code = 5


class NotFound(SearchLimitError):
    pass


class BudgetExceeded(SearchLimitError):
    pass


class CompositionSpaceTooLarge(SearchLimitError):
    pass


# -- internal consistency --------------------------------------------------

class VerificationError(DksError, AssertionError):
    """A solver reported a value that its own witness does not reproduce."""

    exit_code = 6
