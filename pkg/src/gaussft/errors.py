"""Exception types shared across the package."""


class NumericalError(ArithmeticError):
    """A computation could not deliver a trustworthy finite value."""


class FaddeevaOverflowError(NumericalError, OverflowError):
    """w(z) (or a factor built on it) exceeds the double range.

    ``log10_magnitude`` holds the decimal order of magnitude of the value
    that would have been returned.
    """

    def __init__(self, z, log10_magnitude):
        self.z = z
        self.log10_magnitude = log10_magnitude
        super().__init__(
            f"w({z!r}) overflows: |w| ~ 1e{log10_magnitude:.0f}, "
            "beyond the double-precision range"
        )


class QuadratureError(NumericalError):
    """Adaptive quadrature did not converge within its budget."""
