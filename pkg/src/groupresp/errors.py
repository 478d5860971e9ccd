"""Exception types shared across the package."""

from dataclasses import dataclass


class GroupRespError(Exception):
    """Base class for all library errors."""


class ParseError(GroupRespError):
    """Tree file could not be parsed into a raw description."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


@dataclass(frozen=True)
class ValidationIssue:
    """One violated tree invariant, naming the offending node or edge."""

    code: str
    node: str | None
    message: str

    def __str__(self):
        where = f" [{self.node}]" if self.node else ""
        return f"{self.code}{where}: {self.message}"


class TreeValidationError(GroupRespError):
    """Raised by validate() with the full list of violations."""

    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class UnknownNode(GroupRespError):
    pass


class UnknownAgent(GroupRespError):
    pass


class NotOnPath(GroupRespError):
    pass


class DomainGap(GroupRespError):
    """A strategy or scenario is undefined at a node the evaluation reached."""


class ExplosionGuard(GroupRespError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, count, cap, what="combinations"):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} {what} exceed the enumeration cap {cap}")


class BadParameter(GroupRespError):
    pass


class BadQuery(GroupRespError):
    """Contribution/responsibility query outside the defined domain."""


class CodomainViolation(GroupRespError):
    """An aggregator declared proper returned a value outside [0,1]."""
