"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class UnsupportedModelError(RuntimeError):
    """A curve reached a branch that the family-specific algorithms do not cover."""


class ResourceCapError(RuntimeError):
    """A series truncation would exceed the configured coefficient cap."""

    def __init__(self, required, cap):
        self.required = required
        self.cap = cap
        super().__init__(
            f"required n_max = {required} exceeds the resource cap {cap}"
        )


class HeightConvergenceError(RuntimeError):
    """A height iteration stopped before reaching the requested tolerance."""

    def __init__(self, estimate, error_bound, message):
        self.estimate = estimate
        self.error_bound = error_bound
        super().__init__(
            f"{message} (partial estimate {estimate!r} +/- {error_bound!r})"
        )
