"""Exception types shared across the package."""


class QtError(Exception):
    """Base class for all package-specific errors."""


class DegenerateParameters(QtError):
    """A required denominator factor (1 - q^a t^b, or one involving an
    auxiliary scalar) vanishes at the chosen parameter point."""


class PoleAtOne(QtError):
    """A rational function of q has no finite limit at q = 1."""


class NotAPartition(QtError, ValueError):
    """An integer vector is not weakly decreasing (or has a negative part
    where none is allowed)."""


class LengthMismatch(QtError, ValueError):
    """Two partitions that must share the same fixed length do not."""


class NotAStrip(QtError):
    """A skew pair lambda/mu is not a horizontal strip where one is required."""


class ConvergenceViolated(QtError):
    """Parameters fall outside the convergence region of an infinite sum
    or product."""


class UnsupportedRegime(QtError):
    """The operation is only defined for a restricted parameter regime
    (e.g. sampling requires the positivity regime, a limit mode is not
    available for this input)."""


# Exact division by zero is reported with the builtin; alias for API clarity.
DivisionByZero = ZeroDivisionError
