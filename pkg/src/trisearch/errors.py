"""Exception types shared across the engine."""


class TrisearchError(Exception):
    """Base class for all engine errors."""


class ParseError(TrisearchError):
    """A corpus record could not be parsed. Carries the offending field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class DuplicateIdError(TrisearchError):
    """A document / paragraph / passage id was seen twice."""


class ConfigError(TrisearchError):
    """Invalid configuration value."""


class EmptyQueryError(TrisearchError):
    """Query is empty or whitespace-only."""


class NotFoundError(TrisearchError):
    """Referenced unit does not exist in the index."""


class IndexFormatError(TrisearchError):
    """Persisted index is corrupt or has an unsupported format version."""
