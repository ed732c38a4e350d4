"""Exception hierarchy shared across the package."""


class CliqueForgeError(Exception):
    """Base class for all package errors."""


class DegenerateClique(CliqueForgeError, ValueError):
    """A clique was built from a node sequence with repeated nodes."""


class MalformedInput(CliqueForgeError, ValueError):
    """An input file or array does not match its declared format."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedFormat(MalformedInput):
    """The input uses a format variant this package does not read."""


class DuplicateEdge(CliqueForgeError, ValueError):
    """An edge stream repeats an edge; enumeration would double-emit."""

    def __init__(self, u, v, index=None):
        where = f" at stream position {index}" if index is not None else ""
        super().__init__(f"duplicate edge ({u}, {v}){where}")
        self.edge = (u, v)
        self.index = index


class InconsistentInput(CliqueForgeError, ValueError):
    """Two inputs that must describe the same graph disagree."""


class InvalidOrder(CliqueForgeError, ValueError):
    """A node ordering does not satisfy the algorithm's precondition."""


class OracleTooLarge(CliqueForgeError):
    """The brute-force oracle was asked to handle more nodes than its cap."""


class NoConventionMatches(CliqueForgeError):
    pass


class AmbiguousConvention(CliqueForgeError):
    pass
