"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class DegenerateCapError(DomainError):
    """Sphere/ball configuration yields no proper cap.

    ``case`` identifies which degeneracy occurred: "tangent", "disjoint"
    or "contained".
    """

    def __init__(self, case: str, message: str):
        super().__init__(message)
        self.case = case


class UndefinedGrowthError(DomainError):
    """Growth ratio undefined because the inner ball has zero measure."""


class EmptyTestFunctionError(DomainError):
    """Certificate test function has zero mass."""


class QuadraturePrecisionError(RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget before reaching
    the requested tolerance."""


class HypothesisViolationError(RuntimeError):
    """A growth-hypothesis inequality failed its grid check.

    ``failed`` names the inequality: "sup", "limsup", "window" or
    "tail-inconclusive".
    """

    def __init__(self, failed: str, message: str):
        super().__init__(message)
        self.failed = failed


class NonSettlingTailError(HypothesisViolationError):
    """Tail samples of the growth ratio did not settle monotonically, so the
    limsup check is inconclusive."""

    def __init__(self, message: str):
        super().__init__("tail-inconclusive", message)
