"""Exception types shared across the toolkit."""


class KleinOrderError(Exception):
    """Base class for all toolkit errors."""


class MalformedInputError(KleinOrderError, ValueError):
    """Dimension mismatches, bad file contents, inconsistent structure data."""


class InvalidPairError(KleinOrderError):
    """Stabilizer subspace is not closed under the bracket."""


class NotEffectiveError(KleinOrderError):
    """Raised when an operation requires an effective pair.

    Carries the nonzero ideal found inside the stabilizer as ``radical``.
    """

    def __init__(self, radical):
        self.radical = radical
        super().__init__(
            "pair is not effective: stabilizer contains a nonzero ideal "
            f"of dimension {radical.dim}"
        )


class NotApplicableError(KleinOrderError):
    """A check's hypotheses do not hold for the given input."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class ClosureError(KleinOrderError):
    """A family of vector fields is not closed under the bracket.

    ``pair`` names the offending generator indices when known.
    """

    def __init__(self, message: str, pair=None):
        self.pair = pair
        super().__init__(message)


class BadSeedError(KleinOrderError):
    """The span of the chosen seed vector is an ideal, so no tower exists."""


class CatalogError(KleinOrderError, KeyError):
    """Unknown catalog key or out-of-range parameters."""
