"""Exception types shared across the package."""


class PermCharError(Exception):
    """Base class for all package errors."""


class InvalidPermutation(PermCharError):
    """Images do not describe a bijection of the stated degree."""


class CapExceeded(PermCharError):
    """A closure or enumeration passed its configured resource cap."""


class NotPrime(PermCharError):
    pass


class ElementNotInGroup(PermCharError):
    pass


class NotNormal(PermCharError):
    pass


class NotSubgroup(PermCharError):
    pass


class NotChiefFactor(PermCharError):
    pass


class LiftFailure(PermCharError):
    """The modular-to-cyclotomic lift produced inconsistent data (internal bug)."""


class GroupMismatch(PermCharError):
    pass


class NotIrreducible(PermCharError):
    pass


class NotElementaryAbelian(PermCharError):
    pass


class SolvabilityHypothesisFailed(PermCharError):
    pass


class PrimeMismatch(PermCharError):
    pass


class ResourceCap(PermCharError):
    pass


class ConfigError(PermCharError):
    pass
