"""Exception types shared across the package."""


class GraphCodesError(Exception):
    """Base class for all library errors."""


class DomainError(GraphCodesError, ValueError):
    """A parameter or value lies outside an operation's domain."""


class UnsupportedParameterError(DomainError):
    """Parameters name a case this library deliberately does not build."""


class CapabilityError(GraphCodesError):
    """The request exceeds a configured size or enumeration budget."""
