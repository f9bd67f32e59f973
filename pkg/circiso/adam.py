"""
Type-1 isomorphism: multiplication of connection sets by units of Z_n and the resulting orbits
"""

import typing
from dataclasses import dataclass, field
from math import gcd

from ordered_set import OrderedSet

from .circulant import ConnectionSet
from .modring import units
from .util import DomainError


@dataclass(frozen=True)
class AdamOrbit:
    base: ConnectionSet
    members: OrderedSet = field(default_factory=OrderedSet)
    witness: typing.Dict[ConnectionSet, int] = field(default_factory=dict)

    def __contains__(self, c: ConnectionSet) -> bool:
        return c in self.witness

    def __len__(self):
        return len(self.members)

    def dumps(self) -> str:
        return ", ".join(f"{m.dumps()} [x={self.witness[m]}]" for m in self.members)


def check_same_order(a: ConnectionSet, b: ConnectionSet):
    if a.n != b.n:
        raise DomainError(f"connection sets have different orders {a.n} and {b.n}")


def multiply(c: ConnectionSet, x: int) -> ConnectionSet:
    if gcd(x % c.n, c.n) != 1:
        raise DomainError(f"{x} is not a unit modulo {c.n}")
    return ConnectionSet.from_values(c.n, (x * r for r in c.jumps))


def orbit(c: ConnectionSet) -> AdamOrbit:
    res = AdamOrbit(c)
    # units ascend, so the first unit reaching a member is its smallest witness
    for x in units(c.n):
        image = multiply(c, x)
        if image not in res.witness:
            res.members.add(image)
            res.witness[image] = x
    return res


def type1_witness(a: ConnectionSet, b: ConnectionSet) -> typing.Optional[int]:
    """The smallest unit x with xA = B, None if B is not in the orbit of A"""
    check_same_order(a, b)
    if len(a) != len(b):
        return None
    for x in units(a.n):
        if multiply(a, x) == b:
            return x
    return None
