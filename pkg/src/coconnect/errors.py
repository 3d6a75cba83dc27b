"""Shared exception types."""


class BoundExceeded(RuntimeError):
    """A configured desk-scale bound was hit.

    Raised instead of silently truncating a computation; callers may retry
    with an explicit larger bound.
    """
