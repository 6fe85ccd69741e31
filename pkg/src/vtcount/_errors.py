class CapacityError(ValueError):
    """Raised when an enumeration would exceed its configured size cap."""


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    This signals a transcription bug in a counting formula, never bad input.
    """


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def check_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
