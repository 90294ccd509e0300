"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""


class EnumerationCapError(RuntimeError):
    """Representation enumeration exceeded the configured cap."""

    def __init__(self, cap: int, alpha: str):
        self.cap = cap
        self.alpha = alpha
        super().__init__(
            f"enumeration of representations of {alpha} exceeded cap of {cap}; "
            f"raise the cap to proceed"
        )
