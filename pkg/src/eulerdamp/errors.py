"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was evaluated outside its mathematical domain (e.g. vacuum)."""


class ConfigError(ValueError):
    """A run configuration is malformed or inconsistent."""


class NumericalFailure(RuntimeError):
    """A solver run ended in a non-physical state (vacuum or non-finite values)."""
