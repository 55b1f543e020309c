"""Exception types raised by the library."""


class DimensionMismatchError(ValueError):
    """Coordinates do not match the shape of the ambient group."""


class PreconditionError(ValueError):
    """An input violates a standing hypothesis of the computation.

    The message names the hypothesis, e.g. that the list contains no zero
    vector or that it spans the ambient lattice.
    """
