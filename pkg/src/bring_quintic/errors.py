"""Exception hierarchy shared by the solver modules."""


class BringQuinticError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"


class DomainError(BringQuinticError, ValueError):
    """Input lies outside the domain a routine supports."""

    kind = "domain"


class DivergenceError(DomainError):
    """A series method was asked to work where its series does not converge."""

    kind = "divergence"


class CapacityError(BringQuinticError, ValueError):
    """A coefficient table is too short for the requested evaluation."""

    kind = "capacity"

    def __init__(self, required_index: int, capacity: int):
        self.required_index = required_index
        self.capacity = capacity
        super().__init__(
            f"coefficient table holds c_1..c_{capacity} but c_{required_index} is required"
        )


class DegenerateNormalizationError(BringQuinticError):
    """The leading quartic coefficient is too small to divide by."""

    kind = "degenerate_normalization"


class SelectionError(BringQuinticError):
    """No quartic root fell inside the open interval (0, 1)."""

    kind = "selection"

    def __init__(self, message: str, roots=()):
        self.roots = tuple(roots)
        super().__init__(f"{message}; quartic roots: {list(self.roots)}")


class ConvergenceError(BringQuinticError):
    """An iterative method stopped before meeting its tolerance."""

    kind = "convergence"

    def __init__(self, message: str, last_iterate: float):
        self.last_iterate = last_iterate
        super().__init__(f"{message} (last iterate {last_iterate!r})")
