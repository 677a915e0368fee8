"""Exception types; the CLI maps them to exit statuses."""


class DomainError(ValueError):
    """Inputs violate an operation's preconditions."""


class ResourceLimitError(RuntimeError):
    """A brute-force enumeration would exceed its configured bound."""


class ConsistencyError(ArithmeticError):
    """An identity the library checks internally came out false."""
