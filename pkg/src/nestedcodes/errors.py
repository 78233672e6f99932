"""Exception hierarchy shared by all modules.

Every error carries a short machine name (the class name) so the CLI can map
it to an exit code without string matching.
"""


class NestedCodesError(Exception):
    """Base class for all library errors."""


class InvalidInput(NestedCodesError, ValueError):
    """Input failed validation (CLI exit code 2)."""


class ResourceLimit(NestedCodesError):
    """A computation would exceed a configured cap (CLI exit code 3)."""


# field
class NonPrimeCharacteristic(InvalidInput):
    pass


class ReducibleModulus(InvalidInput):
    pass


class NoDefaultModulus(InvalidInput):
    pass


class FieldTooLarge(InvalidInput):
    pass


class NotASubfieldSize(InvalidInput):
    pass


class ZeroInverse(NestedCodesError, ZeroDivisionError):
    pass


class ParseError(InvalidInput):
    pass


# polynomials
class DimensionMismatch(InvalidInput):
    pass


# sequences and points
class NotPrimePower(InvalidInput):
    pass


class BrokenTower(InvalidInput):
    pass


class NonMonotone(InvalidInput):
    pass


class SizeOne(InvalidInput):
    pass


class AmbientTooSmall(InvalidInput):
    pass


class ZeroPoint(InvalidInput):
    pass


class PointNotInX(InvalidInput):
    pass


class NotStandardRep(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput, IndexError):
    pass


# caps
class TooManyPoints(ResourceLimit):
    pass


class DimensionTooLarge(ResourceLimit):
    pass


class SearchTooLarge(ResourceLimit):
    pass


class HilbertOverflow(ResourceLimit, OverflowError):
    pass
