"""Exception types shared across the package."""


class ProxinvError(Exception):
    """Base class for all library errors."""


class PreconditionError(ProxinvError, ValueError):
    """An argument violates an operation's stated domain."""


class ResourceLimitError(ProxinvError, RuntimeError):
    """A computation would exceed a configured resource bound."""


class ConfigError(ProxinvError, ValueError):
    """A configuration document is malformed or inconsistent."""
