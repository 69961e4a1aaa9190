"""Exception hierarchy shared by every module."""


class CyclesmithError(Exception):
    """Base class for all errors raised by this package."""


class MalformedGraph6(CyclesmithError):
    """Input is not a valid graph6 string."""


class MalformedEdgeList(CyclesmithError):
    """Input is not a valid edge-list document."""


class UnsupportedFormat(CyclesmithError):
    """Valid input that this implementation deliberately does not handle
    (e.g. graph6 with a multi-byte size field, n > 62)."""


class NotEven(CyclesmithError):
    """An odd-degree vertex was found where every degree must be even."""


class NotRegularEven(CyclesmithError):
    """The graph is not 2k-regular."""


class NoSuchCycle(CyclesmithError):
    """No cycle through the two requested edges; the graph was not
    2-connected as the caller promised."""


class NotClawFree(CyclesmithError):
    """An induced K_{1,3} was found.  ``center`` and ``leaves`` give the
    witness."""

    def __init__(self, center: int, leaves: tuple[int, int, int]):
        self.center = center
        self.leaves = tuple(sorted(leaves))
        super().__init__(f"induced claw at {center} with leaves {self.leaves}")


class DegreeTooHigh(CyclesmithError):
    """Maximum degree exceeds what the requested algorithm supports."""


class TooManyOddVertices(CyclesmithError):
    """Exact linkage search refused: |T| above the configured threshold."""


class LimitExceeded(CyclesmithError):
    """An exact search hit a configured resource limit before it could
    prove its answer."""


class PreconditionError(CyclesmithError):
    """A documented precondition was violated (e.g. forest or disconnected
    input to an operation that requires a connected cyclic graph)."""


class InvalidParams(CyclesmithError):
    """Bad parameters to a generator or CLI command."""
