"""Exception hierarchy and enumeration guards."""

import os


class LatgraphError(Exception):
    """Base class for every error raised by the library."""


class DuplicateName(LatgraphError):
    pass


class UnknownName(LatgraphError):
    pass


class CycleDetected(LatgraphError):
    pass


class CarrierTooLarge(LatgraphError):
    pass


class NotSaturated(LatgraphError):
    pass


class EmptyFamily(LatgraphError):
    pass


class NoZero(LatgraphError):
    pass


class NoJoin(LatgraphError):
    def __init__(self, a, b):
        super().__init__(f"no least upper bound for {a!r} and {b!r}")
        self.pair = (a, b)


class NoMeet(LatgraphError):
    def __init__(self, a, b):
        super().__init__(f"no greatest lower bound for {a!r} and {b!r}")
        self.pair = (a, b)


class NoCover(LatgraphError):
    pass


class NotHereditary(LatgraphError):
    pass


class BadPair(LatgraphError):
    pass


class ParseError(LatgraphError):
    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class UnknownCatalogName(LatgraphError):
    pass


class SizeOutOfRange(LatgraphError):
    pass


def check_size(size, default, what="carrier"):
    """Raise CarrierTooLarge when ``size`` exceeds the guard.

    ``LATGRAPH_MAX_ELEMS`` overrides ``default`` for every guard.
    """
    override = os.environ.get("LATGRAPH_MAX_ELEMS")
    limit = int(override) if override else default
    if size > limit:
        raise CarrierTooLarge(f"{what} has {size} elements, limit is {limit}")
