"""Exception types shared across the package."""


class SepackError(Exception):
    """Base class for all package errors."""


class MalformedInputError(SepackError):
    """Input data is structurally invalid (ragged centers, bad shapes, ...)."""


class InvalidPackingError(SepackError):
    """A packing violates the non-overlap condition."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class UndefinedDistanceError(SepackError):
    """Pairwise distance requested on fewer than two centers."""


class DegenerateInputError(SepackError):
    """Duplicate centers make the requested operation meaningless."""


class NotAContactError(SepackError):
    """The given pair of spheres is not touching."""


class UnknownCatalogIdError(SepackError):
    """Requested name is not in the catalog."""


class UnsupportedConstructionError(SepackError):
    """Catalog entry has no implemented coordinate construction."""


class UnsupportedDimensionError(SepackError):
    """Operation is only defined for a specific dimension."""


class EnumerationLimitError(SepackError):
    """Exhaustive enumeration requested beyond its configured size limit."""


class SizeLimitError(SepackError):
    """A construction would exceed its configured size budget."""


class NormalizationRequiredError(SepackError):
    """Operation requires packings normalized to contact distance 2."""


class PackingParseError(SepackError):
    """Packing file could not be parsed."""

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.offset = offset


class PackingVersionError(SepackError):
    """Packing file has an unsupported format version."""


class DegenerateSeedWarning(UserWarning):
    """Orbit seed is fixed by part of the point group; orbit collapsed."""
