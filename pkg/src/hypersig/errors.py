"""Exception types shared across the package.

The CLI maps DomainError to exit code 1 and FormatError to exit code 2;
everything else is a bug.
"""


class HypersigError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HypersigError, ValueError):
    """Input is well-formed but violates an operation's precondition.

    Examples: disconnected input to a frame computation, arity mismatch
    between a map and a hypergraph, infeasible generator parameters.
    """


class DisconnectedError(DomainError):
    """Operation requires a connected hypergraph."""


class NotEngagedError(DomainError):
    """Map sends some coordinate axis to zero, leaving it unconstrained."""

    def __init__(self, axis: int):
        self.axis = axis
        super().__init__(f"map is not engaged: column {axis} is zero")


class InfeasibleError(DomainError):
    """No object with the requested parameters exists or can be sampled."""


class FormatError(HypersigError, ValueError):
    """A file or JSON document does not match the expected schema."""
