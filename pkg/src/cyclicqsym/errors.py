class CQSymError(ValueError):
    """Base class for invalid arguments to any operation in this package."""


class CapExceeded(CQSymError):
    """A configured size cap would be exceeded."""


class NotCyclic(CQSymError):
    """Raised when a quasi-symmetric function is not cyclic.

    ``witness`` holds two compositions, rotations of each other, whose
    monomial coefficients differ.
    """

    def __init__(self, witness, coeffs):
        self.witness = witness
        self.coeffs = coeffs
        super().__init__(f"not cyclic: M{witness[0]} has {coeffs[0]}, M{witness[1]} has {coeffs[1]}")


class IdentityFailure(AssertionError):
    """A verified identity did not hold; ``counterexample`` is JSON-ready."""

    def __init__(self, message, counterexample=None):
        self.counterexample = counterexample or {}
        super().__init__(message)
