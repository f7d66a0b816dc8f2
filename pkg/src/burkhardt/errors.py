"""Exception types shared across the package."""


class BurkhardtError(Exception):
    """Base class for all library-specific errors."""


class FieldError(BurkhardtError):
    """Invalid field construction or element coercion."""


class CharacteristicError(BurkhardtError):
    """Operation requested in a forbidden characteristic."""


class BaseLocusError(BurkhardtError):
    """A rational map was evaluated at a point of its base locus."""


class DegeneracyError(BurkhardtError):
    """A construction degenerates at the given point.

    ``label`` names the offending quantity (for example ``"lambda"`` or
    ``"J1-denominator"``) so callers can report which certificate failed.
    """

    def __init__(self, label, message):
        super().__init__(message)
        self.label = label


class ScanCapError(BurkhardtError):
    """An exhaustive scan was refused because it exceeds the configured cap."""
