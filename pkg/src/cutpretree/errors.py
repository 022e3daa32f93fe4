"""Exception hierarchy.

The CLI maps these to exit codes: InputError -> 2, ConsistencyError -> 3.
"""


class CutPretreeError(Exception):
    pass


class InputError(CutPretreeError, ValueError):
    """Malformed or out-of-range user input."""


class PreconditionError(InputError):
    """An operation was called outside its documented domain."""


class ResourceError(CutPretreeError):
    """An enumeration exceeded its configured size limit."""


class ConsistencyError(CutPretreeError):
    """A structural guarantee failed; this points at a bug, not bad input."""


class AxiomViolation(CutPretreeError):
    """A cut family failed one of the three admissibility conditions."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())
