import typing
from functools import lru_cache


class DomainError(ValueError):
    """Raised when an input violates a mathematical precondition"""

    pass


class FixtureError(ValueError):
    """
    Raised when a fixture file can not be parsed
    Carries every offending line so that all problems are reported at once
    """

    def __init__(self, path: str, problems: typing.List[typing.Tuple[int, str]]):
        self.path = path
        self.problems = problems
        details = "; ".join(f"line {line}: {msg}" for line, msg in problems)
        super().__init__(f"could not parse {path}: {details}")


def parse_jumps(text: str) -> typing.List[int]:
    """
    Parses the connection-set syntax "1,2,15" (ASCII, comma-separated, spaces allowed)
    Order and duplicates are preserved, reduction is left to the caller
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise DomainError(f"invalid jump list {text!r}, expected e.g. 1,2,15")


def format_jumps(jumps: typing.Iterable[int]) -> str:
    return ",".join(str(j) for j in jumps)


@lru_cache()
def trial_divisors(n: int) -> typing.Tuple[int, ...]:
    """All positive divisors of n in ascending order, by trial division"""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return trial_divisors(p) == (1, p)
