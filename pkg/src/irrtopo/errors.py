"""Exception types raised across the package."""


class TopologyError(Exception):
    """Base class for every error raised by irrtopo."""


class NotT0(TopologyError):
    pass


class CarrierTooLarge(TopologyError):
    pass


class EmptySet(TopologyError):
    pass


class NotOpen(TopologyError):
    pass


class NotClosed(TopologyError):
    pass


class FuelExhausted(TopologyError):
    """Iteration stopped before reaching a fixpoint.

    The partial result is kept on ``partial`` so callers can still report it.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnknownSpace(TopologyError):
    pass


class OracleMismatch(TopologyError):
    pass


class UndecidableTail(TopologyError):
    pass


class NotCofinal(TopologyError):
    pass


class BudgetExceeded(TopologyError):
    pass


class TooLarge(TopologyError):
    pass


class BadQuery(TopologyError):
    pass
