class BoundExceeded(RuntimeError):
    """A documented resource bound (degree, index, window size) was exceeded."""


class VerificationError(RuntimeError):
    """An exact structural check (determinant, symmetry, enclosure) failed."""
