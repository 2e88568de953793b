class EsdomError(Exception):
    """Base class for errors raised by esdom."""


class InvalidGraphError(EsdomError, ValueError):
    """A graph, vertex set or family spec violates its constraints."""


class CapExceededError(EsdomError):
    """The exact search was asked to handle a graph above its size cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"graph has n={n} vertices, above the solver cap of {cap}; "
            "use esdom.closed_forms for named families or pass a larger cap"
        )


class NotEsdSetError(EsdomError, ValueError):
    """A vertex set is not an end super dominating set.

    ``reason`` carries the first violated condition.
    """

    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)
