"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceBoundError(RuntimeError):
    """A requested size exceeds the configured computation bound."""


class DisconnectedGraphError(ValueError):
    """The weighted graph of a chain is disconnected (its character is not faithful)."""
