"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI maps it to.
"""


class LrcError(Exception):
    exit_code = 1


class ParseError(LrcError, ValueError):
    exit_code = 2


class ConstraintError(LrcError, ValueError):
    """A parameter or precondition is violated."""

    exit_code = 3


class DataLossError(LrcError):
    """The surviving symbols do not carry enough rank to recover the message."""

    exit_code = 4


class RepairInfeasibleError(LrcError):
    """Too few survivors inside a local group; fall back to a global decode."""

    exit_code = 5


class CapExceededError(LrcError):
    """An exhaustive search would exceed its configured size cap."""

    exit_code = 6


class RankDeficiencyError(ConstraintError):
    pass


class InconsistentError(LrcError):
    """Supplied symbols are not evaluations of a single codeword (corruption)."""

    exit_code = 4
