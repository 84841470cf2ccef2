"""Shared exception types.

The CLI maps these to exit codes: PreconditionError -> 2 (bad or out-of-domain
input), ResourceCapError -> 3 (a configured or hard-wired resource cap was
hit before an answer was reached).
"""


class TorsionfreeError(Exception):
    pass


class PreconditionError(TorsionfreeError):
    """Input violates a documented precondition."""


class NotSquarefreeError(PreconditionError):
    """Polynomial with repeated roots passed where a squarefree one is required."""


class ResourceCapError(TorsionfreeError):
    """A scan or search hit its cap before reaching a conclusion."""
