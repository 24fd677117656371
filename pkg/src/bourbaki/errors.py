"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine-level failures."""


class NotHomogeneous(EngineError):
    pass


class NotReduced(EngineError):
    pass


class BadCharacteristic(EngineError):
    pass


class NotZeroDimensional(EngineError):
    pass


class NotStabilized(EngineError):
    pass


class NotASyzygy(EngineError):
    pass


class NoSyzygyQuotient(EngineError):
    pass


class InfiniteLocalDimension(EngineError):
    pass


class InconsistentClassification(EngineError):
    pass


class SaturationCapExceeded(EngineError):
    pass


class ParseError(ValueError):
    """Syntax error in a polynomial expression; carries the 0-based position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position
