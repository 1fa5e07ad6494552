"""Exception types shared across the package."""

from __future__ import annotations


class TunnelTimesError(Exception):
    """Base class for library failures."""


class NonPositiveRootArgument(TunnelTimesError):
    """A square-root argument that must be positive is not.

    Raised when the requested regime places a propagating or evanescent
    wavenumber outside its domain of validity.
    """

    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"square-root argument {name} = {value:.6g} must be positive")


class OverflowGuard(TunnelTimesError):
    """Barrier opacity too large for the finite-width expressions.

    The evanescent exponent exceeds the safe range; callers should switch to
    the wide-barrier limits (wide=True), which are exact in this regime to
    double precision anyway.
    """

    def __init__(self, exponent: float, limit: float):
        self.exponent = exponent
        self.limit = limit
        super().__init__(
            f"evanescent exponent {exponent:.4g} exceeds {limit:.4g}; "
            "use the wide-barrier limits"
        )


class SingularMatching(TunnelTimesError):
    """The boundary-matching linear system is numerically singular."""


class StencilOutOfDomain(TunnelTimesError):
    """A finite-difference stencil point leaves the admissible energy window."""

    def __init__(self, eps: float, step: int | float):
        self.eps = eps
        self.step = step
        super().__init__(
            f"stencil around eps={eps:.6g} with step {step:.3g} leaves (0, 1)"
        )
