"""Exception hierarchy shared by the exact and the Monte Carlo layers."""


class FormalityError(Exception):
    """Base class of every error raised by this package."""


class DimensionMismatchError(FormalityError, ValueError):
    """Two operands live in different ambient dimensions."""


class AxisError(FormalityError, IndexError):
    """A coordinate index is outside [0, dim)."""


class ArityError(FormalityError, ValueError):
    """An operator received the wrong number of arguments or has an unsupported arity."""


class DegreeError(FormalityError, ValueError):
    """A polyvector has the wrong number of wedge factors for the requested operation."""


class SchemaError(FormalityError, ValueError):
    """A JSON document does not match the expected encoding."""


class NotPoissonError(FormalityError, ValueError):
    """A bivector fails [γ, γ] = 0 or div(γ) = 0."""


class WeightDimensionError(FormalityError, ValueError):
    """The number of 1-forms of a graph differs from the dimension of its configuration space."""


class UnsupportedOrderError(FormalityError, ValueError):
    """The requested order needs Monte Carlo components outside the supported range."""
