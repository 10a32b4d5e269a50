"""Exception types shared across the package."""


class FormatError(ValueError):
    """An image file could not be parsed as a supported format."""


class NumericalBlowupError(ArithmeticError):
    """The level-set update produced NaN or Inf values."""
