class PermlabError(Exception):
    """Base class for computation errors raised by this package."""


class BoundExceeded(PermlabError):
    pass


class NotComparable(PermlabError):
    pass


class NotLayered(PermlabError):
    pass


class InadmissibleShape(PermlabError):
    pass


class InsufficientTerms(PermlabError):
    pass


class ClosureViolation(PermlabError):
    pass


class BudgetExceeded(PermlabError):
    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded its state budget of {budget} nodes")
        self.budget = budget


def check_bound(name: str, value: int, bound: int) -> None:
    if value > bound:
        raise BoundExceeded(f"{name}={value} exceeds the configured bound {bound}")
