"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An argument broke a documented precondition (wrong weight, bad range, ...)."""


class GraphParseError(ValueError):
    """Unparseable graph text.  Carries the byte offset of the first bad character."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class FamilyError(ValueError):
    """Unknown graph family or parameters outside the family's legal range."""


class EdgeCapacityError(RuntimeError):
    """Edge-subset expansion refused because the graph exceeds the edge cap."""


class InconsistentSolve(RuntimeError):
    """Internal error: a triangular change-of-basis solve failed to reproduce its input."""
