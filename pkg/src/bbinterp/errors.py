"""Exception types raised by :mod:`bbinterp`."""


class BBInterpError(ValueError):
    """Invalid input to one of the library routines."""


class UnsupportedOrderError(BBInterpError):
    """The requested smoothness order ``beta`` has no closed form here."""


class IllConditionedError(ArithmeticError):
    """A dense linear solve broke down or left a large residual."""
