"""Exception types shared by the solver modules."""


class SizeGuardError(Exception):
    """Raised when brute-force enumeration would exceed its size guard."""


class RoundLimitError(Exception):
    """Raised when the naive symmetric iteration runs out of rounds."""


class SolverInternalError(Exception):
    """An iteration exceeded its strategy-space bound.

    Strategy improvement strictly improves the valuation every round, so the
    number of rounds is bounded by the number of positional strategies.  Hitting
    that bound signals an implementation bug, never a property of the input.
    """
