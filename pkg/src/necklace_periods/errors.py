class DomainError(ValueError):
    """A caller passed parameters outside an operation's precondition."""


class EnumerationLimitError(DomainError):
    """Brute-force enumeration was requested beyond the configured bound."""

    def __init__(self, what: str, value: int, limit: int):
        self.what = what
        self.value = value
        self.limit = limit
        super().__init__(
            f"{what}={value} exceeds the enumeration limit {limit} "
            f"(raise it with --max-enum / the limit argument)"
        )


class InvariantViolation(AssertionError):
    """A counting identity produced a value that cannot be right.

    Raised instead of rounding, e.g. when a class count is not divisible by
    the class length.
    """
