"""Exception types shared across the package."""


class BraidscopeError(Exception):
    pass


class InvalidParameter(BraidscopeError, ValueError):
    """A numeric or enumerated parameter is out of its allowed range."""


class InvalidInput(BraidscopeError, ValueError):
    """Structurally invalid input (disconnected graph, mismatched homomorphism, ...)."""


class NotConnected(BraidscopeError, ValueError):
    """The 1-skeleton of a configuration complex is disconnected."""
