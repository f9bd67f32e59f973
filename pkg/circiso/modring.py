"""
Exact arithmetic on Z_n: reflexive reduction, the unit group and the divisibility gate of theta
"""

import typing
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .config import DEFAULT_CONFIG, SearchConfig
from .util import DomainError, trial_divisors


def check_modulus(n: int) -> int:
    """Structural check of a graph order, independent of any configured limit"""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"graph order must be an integer, got {n!r}")
    if n < 3:
        raise DomainError(f"graph order must be at least 3, got {n}")
    return n


def check_order(n: int, config: SearchConfig = DEFAULT_CONFIG) -> int:
    """Order check at the entry points, where the configured max_order applies"""
    check_modulus(n)
    if n > config.max_order:
        raise DomainError(f"graph order {n} exceeds the configured maximum {config.max_order}")
    return n


def reflexive_residue(n: int, v: int) -> int:
    r = v % n
    return n - r if r > n / 2 else r


def reflexive_reduce(n: int, values: typing.Iterable[int]) -> typing.Tuple[int, ...]:
    """
    Reduces every value modulo n and folds residues above n/2 onto n - residue
    Returns the sorted duplicate-free outcomes. 0 (a self-loop jump) is kept so that callers can reject it.
    """
    return tuple(sorted({reflexive_residue(n, v) for v in values}))


@dataclass(frozen=True)
class UnitGroup:
    n: int
    units: typing.Tuple[int, ...]

    def __len__(self):
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def __contains__(self, x: int) -> bool:
        return gcd(x % self.n, self.n) == 1

    def reflexive_representatives(self) -> typing.Tuple[int, ...]:
        """Units up to sign, x and n - x act identically on reduced jump sets"""
        return tuple(x for x in self.units if x <= self.n - x)


@lru_cache()
def units(n: int) -> UnitGroup:
    check_modulus(n)
    return UnitGroup(n, tuple(x for x in range(1, n) if gcd(x, n) == 1))


def valid_type2_moduli(n: int, jumps: typing.Iterable[int]) -> typing.List[int]:
    """
    All m > 1 with m^3 | n such that some jump r satisfies m | gcd(n, r), ascending
    """
    jumps = list(jumps)
    return [
        m
        for m in trial_divisors(n)
        if m > 1 and n % (m**3) == 0 and any(gcd(n, r) % m == 0 for r in jumps)
    ]
