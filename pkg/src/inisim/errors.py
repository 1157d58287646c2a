"""Exception types shared across the simulator."""


class InisimError(Exception):
    """Base class for all simulator errors."""


class UnknownNumerology(InisimError, KeyError):
    """The (SCS, frequency range) pair is not a row of the NR numerology table."""


class InvalidGuard(InisimError, ValueError):
    """Guard band is not a non-negative integer multiple of the base subcarrier spacing."""


class InvalidScenario(InisimError, ValueError):
    """A mixed-numerology scenario invariant is violated; the message names it."""


class LengthMismatch(InisimError, ValueError):
    """A sample or symbol sequence has the wrong length for the operation."""


class ShapeMismatch(InisimError, ValueError):
    """Two arrays that must be elementwise comparable have different shapes."""


class ScenarioMismatch(InisimError, ValueError):
    """A derived object (report, coupling matrix) belongs to a different scenario."""


class TargetUnreachable(InisimError):
    """No guard within the band meets the interference target.

    Carries ``best_db``, the lowest worst-case interference achieved
    during the search.
    """

    def __init__(self, message: str, best_db: float):
        super().__init__(message)
        self.best_db = best_db
