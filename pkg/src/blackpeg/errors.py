"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Vectors or ranges have incompatible sizes."""


class InconsistentOracle(Exception):
    """The oracle's responses cannot come from any secret.

    ``transcript`` holds the (query, response) pairs recorded up to the point
    the inconsistency was detected, when available.
    """

    def __init__(self, message, transcript=None):
        super().__init__(message)
        self.transcript = transcript


class TooLarge(Exception):
    """An instance exceeds the enumeration cap of a brute-force routine."""


class BudgetExhausted(Exception):
    """A search ran out of nodes before reaching a decision."""


class MalformedInstance(ValueError):
    """A 3DM instance cannot be reduced (or is structurally invalid)."""


class NotAWitness(ValueError):
    """A vector handed to matching extraction does not satisfy the instance."""
