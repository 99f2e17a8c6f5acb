"""Exception types raised by scxpath."""


class ScxError(Exception):
    """Base class for all scxpath errors."""


class InvalidSimplex(ScxError, ValueError):
    """A vertex set is not a valid simplex for the complex it is used with."""


class InvalidWeights(ScxError, ValueError):
    """Weights are negative, NaN or otherwise unusable for shortest paths."""


class ConfigInvalid(ScxError, ValueError):
    """A generator configuration violates its constraints."""


class InstanceTooLarge(ScxError, RuntimeError):
    """The exhaustive search exceeded its node-expansion budget."""


class ParseError(ScxError, ValueError):
    """Malformed ``.scx`` input. ``line`` is 1-based, or 0 when unknown."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
