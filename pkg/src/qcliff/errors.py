"""Exception types shared across the package.

Contract violations (bad arguments, mismatched lengths, malformed files)
raise plain ``ValueError``.  The classes below mark the two conditions the
command line surface must distinguish from ordinary usage errors.
"""


class CapExceeded(RuntimeError):
    """An operation was refused because it would exceed a resource cap."""


class VerificationError(RuntimeError):
    """An exact verification check failed.

    Raised when a constructed object fails its own defining identities.
    For objects built by this package that signals an implementation bug;
    for stored inputs re-checked on request it signals corrupt data.
    """
