"""Exception types shared across the package."""


class HomCertError(Exception):
    """Base class for all errors raised by homcert."""


class InvalidArgumentError(HomCertError, ValueError):
    """Malformed input: bad graph parameters, colors out of range, mismatched dimensions."""


class UnsupportedParametersError(InvalidArgumentError):
    """Parameters outside the range the certificate construction is defined for (n < 3)."""


class FreeActionError(HomCertError):
    """An involution fixes a cell, so the quotient cochain complex is undefined."""
