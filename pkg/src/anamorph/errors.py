"""Exception types shared across the package."""


class AnamorphError(Exception):
    """Base class for all errors raised by this package."""


class PointDecodeError(AnamorphError, ValueError):
    """Byte string is not a valid encoded curve point."""


class IdentityPointError(AnamorphError, ValueError):
    """Operation is undefined for the point at infinity."""


class ZeroNonceError(AnamorphError, ValueError):
    """The derived encryption nonce reduced to zero; pick a different key."""


class NegativeResultError(AnamorphError):
    """Cover-message recovery went negative: wrong key or corrupted ciphertext."""


class CovertNotFoundError(AnamorphError):
    """No covert value within the search bound matches: wrong key or bound too small."""


class TableCapacityError(AnamorphError):
    """A baby-step table would exceed the configured memory budget."""


class SchemaError(AnamorphError, ValueError):
    """Covert-schema field out of range or packed value malformed."""


class KeyFormatError(AnamorphError, ValueError):
    """Key or ciphertext file contents are malformed or inconsistent."""


class BenchPlanError(AnamorphError, ValueError):
    """Benchmark plan is malformed or asks for an infeasible cell."""
