"""Exception types raised across the package."""


class HypergraphError(ValueError):
    """Base class for invalid input to any hyperstab operation."""


class OutOfRange(HypergraphError):
    pass


class DuplicateEdge(HypergraphError):
    pass


class BadArity(HypergraphError):
    pass


class BadLevel(HypergraphError):
    pass


class Overlap(HypergraphError):
    pass


class BadParams(HypergraphError):
    pass


class DifferentClass(HypergraphError):
    pass


class NotOrdered(HypergraphError):
    pass


class NotInMatching(HypergraphError):
    pass


class TooLarge(HypergraphError):
    pass


class Infeasible(HypergraphError):
    pass


class BudgetExceeded(RuntimeError):
    """A solver hit its node limit.

    ``best`` holds the best certificate found before the abort; for a
    maximisation it is only a lower bound, for a minimisation only an
    upper bound.
    """

    def __init__(self, message: str, best=None, nodes: int = 0):
        super().__init__(message)
        self.best = best
        self.nodes = nodes
