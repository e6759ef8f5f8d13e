"""Exception hierarchy shared by every module of the package."""


class ApostolError(Exception):
    """Base class for all errors raised by apostolb."""


class RingMismatchError(ApostolError):
    """Operands live over different variable sets."""


class UnboundVariableError(ApostolError):
    """An evaluation assignment does not cover a variable that occurs."""


class UnknownVariableError(ApostolError):
    """A variable name is not part of the ring."""


class NotAUnitError(ApostolError):
    """A series has a constant term that is zero or not a scalar."""


class TruncationError(ApostolError):
    """An index beyond the truncation order was requested, or orders differ."""


class InvalidKernelError(ApostolError):
    """Kernel parameters are outside the admissible domain."""


class PoleError(ApostolError):
    """A closed form was evaluated at one of its poles."""


class InsufficientOrderError(ApostolError):
    """A differential-operator series is too short to act exactly."""


class BranchUnavailableError(ApostolError):
    """An identity was requested for parameters where it has no meaning."""
