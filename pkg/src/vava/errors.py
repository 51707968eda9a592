"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: InputError -> 2, ResourceExceeded -> 3,
TheoremViolation / oracle mismatches -> 4.  Plain ValueError from argument
validation is treated like InputError.
"""


class VavaError(Exception):
    """Base class for all package-specific errors."""


class ContextMismatch(VavaError):
    """Operands live over different ring contexts."""


class ExponentOverflow(VavaError):
    """An exponent left the checked range; the operation was aborted."""


class NotContained(VavaError):
    """A required containment (J in I, subgraph, subclutter) fails."""


class MixedMinor(VavaError):
    """A determinant turned out to be a genuine multi-term polynomial."""


class ResourceExceeded(VavaError):
    """A search or enumeration exceeded its work budget."""

    def __init__(self, message, units=None):
        super().__init__(message)
        self.units = units


class TheoremViolation(VavaError):
    """A result guaranteed by a proved statement failed at runtime.

    This always indicates an implementation bug, never bad input.
    """


class VVNotVanishing(VavaError):
    """A presentation was requested for a pair whose torsion module is nonzero."""


class InputError(VavaError):
    """Malformed user input (JSON schema, value ranges)."""
