"""Exception types shared across the package."""


class SizeError(ValueError):
    """Requested n is outside the supported range."""


class DomainError(ValueError):
    """Operands live in incompatible domains (different n or scalar ring)."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain of validity."""


class IntegralityError(ArithmeticError):
    """A rational element cannot be reduced modulo p."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same object disagree."""


class CacheIntegrityError(RuntimeError):
    """A cache file failed its checksum."""
