class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ResourceError(RuntimeError):
    """A computation would exceed its configured work budget."""
