"""Exception types shared across the library.

Every domain failure derives from CwModuliError so the CLI can map it to a
single exit code. Names of the Hurwitz and metacyclic conditions follow the
mathematical condition they report.
"""

__all__ = [
    "CwModuliError",
    "GroupSizeError",
    "GroupSpecError",
    "PrimeSearchExceeded",
    "InternalConsistencyError",
    "OrderViolation",
    "RelationViolation",
    "NotGenerating",
    "NonIntegralGenus",
    "NegativeGenus",
    "EnumerationCapExceeded",
    "AbelianGroup",
    "NoFreeAction",
]


class CwModuliError(Exception):
    """Base class for all domain errors raised by this package."""


class GroupSizeError(CwModuliError):
    """A construction would exceed the configured group order cap."""


class GroupSpecError(CwModuliError):
    """A group specification string or table file is malformed."""


class PrimeSearchExceeded(CwModuliError):
    """The working-prime search passed its hard cap (2**31)."""


class InternalConsistencyError(CwModuliError):
    """An identity the mathematics guarantees failed; indicates a bug."""


class OrderViolation(CwModuliError):
    """A branch entry of a Hurwitz vector is the identity (order 1)."""


class RelationViolation(CwModuliError):
    """The surface-group relation product of a Hurwitz vector is not the identity."""


class NotGenerating(CwModuliError):
    """The entries of a Hurwitz vector generate a proper subgroup."""


class NonIntegralGenus(CwModuliError):
    """The Riemann-Hurwitz count is odd, so no integer genus exists."""


class NegativeGenus(CwModuliError):
    """The Riemann-Hurwitz count yields a negative genus."""


class EnumerationCapExceeded(CwModuliError):
    """An enumeration emitted more vectors than the configured hard cap."""


class AbelianGroup(CwModuliError):
    """The component bound needs a nonabelian group (r = 1 mod m was given)."""


class NoFreeAction(CwModuliError):
    """No free action exists for the requested genus (divisibility fails or g' < 2)."""
