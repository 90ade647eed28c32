"""Exception hierarchy shared by every module of the package."""


class WreathSFError(Exception):
    """Base class for all domain errors raised by wreathsf."""


class InvalidPartition(WreathSFError, ValueError):
    pass


class InvalidInput(WreathSFError, ValueError):
    pass


class IncomparableWeights(WreathSFError, ValueError):
    pass


class ColorCountMismatch(WreathSFError, ValueError):
    pass


class ContainmentViolated(WreathSFError, ValueError):
    pass


class MalformedFilling(WreathSFError, ValueError):
    pass


class ContentSizeMismatch(WreathSFError, ValueError):
    pass


class InsufficientVariables(WreathSFError, ValueError):
    pass


class DegreeCapExceeded(WreathSFError, ValueError):
    pass


class MalformedGroup(WreathSFError, ValueError):
    pass


class UnknownGroup(WreathSFError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParseError(WreathSFError, ValueError):
    pass


class ValidationFailed(WreathSFError, ValueError):
    """Raised when a group spec fails validation; carries the full report."""

    def __init__(self, report):
        self.report = report
        super().__init__("group validation failed:\n  " + "\n  ".join(report.violations))


class GroupMismatch(WreathSFError, ValueError):
    pass


class WeightMismatch(WreathSFError, ValueError):
    pass


class InternalError(WreathSFError, RuntimeError):
    """An identity that must hold exactly did not; signals a bug."""
