"""Exception types shared across the package."""


class UnknownVertex(KeyError):
    """A vertex id was referenced that the graph does not contain."""


class EnvelopeExceeded(RuntimeError):
    """An exact computation would exceed its configured size envelope."""


class InvariantFailure(AssertionError):
    """An internal consistency check failed (a bug, or a counterexample)."""


class NotDistanceHereditaryError(ValueError):
    """Raised where a distance-hereditary input is required but not given."""
