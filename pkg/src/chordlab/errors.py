"""Exception types shared across chordlab."""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class ResourceCapError(RuntimeError):
    """Requested size exceeds the configured enumeration cap."""

    def __init__(self, n, cap):
        super().__init__(f"n={n} exceeds enumeration cap {cap} (raise with --cap or CHORDLAB_CAP)")
        self.n = n
        self.cap = cap
