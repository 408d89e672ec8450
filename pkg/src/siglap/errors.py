"""Exception classes shared across the package.

The CLI maps these onto disjoint exit codes: malformed input is 2,
violated theorem hypotheses are 3, failed internal cross-checks are 4.
"""


class SiglapError(Exception):
    """Base class for all package-specific errors."""


class InputError(SiglapError):
    """Malformed user input: bad edge lists, invalid family parameters."""


class ParseError(InputError):
    """Edge-list syntax error, carrying the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class HypothesisError(SiglapError):
    """The graph violates a hypothesis required by the requested computation
    (disconnected, bipartite, isolated vertex, or not bicyclic)."""


class ConsistencyError(SiglapError):
    """An internal exactness cross-check failed; indicates a bug."""
