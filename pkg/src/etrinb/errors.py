"""Exception hierarchy shared by every module of the package."""


class EtriError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EtriError, ValueError):
    """An input violates a structural or model invariant."""


class DimensionError(ValidationError):
    """An alternative does not fit the product space it is used with."""


class SymbolicScaleError(EtriError, TypeError):
    """A numeric operation was requested on a scale with symbolic levels."""


class ResourceCapError(EtriError):
    """An enumeration or search would exceed its configured size cap."""

    def __init__(self, message, size=None, cap=None):
        super().__init__(message)
        self.size = size
        self.cap = cap


class PreconditionError(ValidationError):
    """A relation or representation does not satisfy an operation's precondition."""


class ProfileValidationError(ValidationError):
    """Two limiting profiles are such that one strictly outranks the other."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DegeneratePartitionError(ValidationError):
    """One of the two classes of a twofold partition is empty."""


class NonLinearPartitionError(PreconditionError):
    """A partition fails the linearity condition on some attribute."""

    def __init__(self, message, attribute=None, witness=None):
        super().__init__(message)
        self.attribute = attribute
        self.witness = witness


class InternalConsistencyError(EtriError, AssertionError):
    """A property guaranteed by theory was found violated; indicates a bug."""
