"""Exception hierarchy. Everything derives from ``ValueError`` so callers that
only care about "bad input" can catch that."""


class SchurIdError(ValueError):
    pass


# partitions and mu-vectors
class NotWeaklyDecreasing(SchurIdError):
    pass


class NotStrictlyDecreasing(SchurIdError):
    pass


class NegativePart(SchurIdError):
    pass


class NTooSmall(SchurIdError):
    pass


class EmptyPartition(SchurIdError):
    pass


# diagram surgery
class RowOutOfRange(SchurIdError):
    pass


class InvalidStartBox(SchurIdError):
    pass


class InvalidStripSpec(SchurIdError):
    pass


class ShiftUndefined(SchurIdError):
    pass


# oracle
class RepeatedCoordinates(SchurIdError):
    pass


class HeightExceedsVariables(SchurIdError):
    pass


class SizeTooSmall(SchurIdError):
    pass


class TooLarge(SchurIdError):
    pass


class VariableCountTooSmall(SchurIdError):
    pass


# plucker / identities
class SizeMismatch(SchurIdError):
    pass


class HeightTooSmall(SchurIdError):
    pass


class InvalidRange(SchurIdError):
    pass
