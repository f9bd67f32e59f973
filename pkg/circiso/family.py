"""
Parametric families of p mutually Type-2 isomorphic circulant graphs of order n*p^3, p an odd prime

For i in [1, p] let d_i = (i-1)*x*p*n + x + y*p. The i-th member has the jumps
p, d_i, k*n*p^2 - d_i and k*n*p^2 + d_i for k in [1, p-1], n*p^3 - d_i and n*p^3 - p.
theta_{np^3, p, jn} sends the i-th member onto the (i+j)-th, indices taken cyclically.
"""

import logging
import typing
from dataclasses import dataclass, field

from .adam import type1_witness
from .circulant import ConnectionSet
from .theta import ThetaParams, apply
from .util import DomainError, is_prime

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyParams:
    p: int
    n: int
    x: int
    y: int

    def __post_init__(self):
        problems = []
        if self.p % 2 == 0 or not is_prime(self.p):
            problems.append(f"p={self.p} is not an odd prime")
        if self.n < 1:
            problems.append(f"n={self.n} is not positive")
        if not 1 <= self.x <= self.p - 1:
            problems.append(f"x={self.x} outside [1, {self.p - 1}]")
        if not 0 <= self.y <= self.n * self.p - 1:
            problems.append(f"y={self.y} outside [0, {self.n * self.p - 1}]")
        if problems:
            raise DomainError("invalid family parameters: " + ", ".join(problems))
        if not 1 <= self.x + self.y * self.p <= self.n * self.p**2 - 1:
            raise DomainError(
                f"x + y*p = {self.x + self.y * self.p} outside [1, {self.n * self.p**2 - 1}]"
            )

    @property
    def order(self) -> int:
        return self.n * self.p**3

    def d(self, i: int) -> int:
        return (i - 1) * self.x * self.p * self.n + self.x + self.y * self.p

    @property
    def d_values(self) -> typing.Tuple[int, ...]:
        return tuple(self.d(i) for i in range(1, self.p + 1))

    def dumps(self) -> str:
        return f"p={self.p} n={self.n} x={self.x} y={self.y}"


def family_member(fp: FamilyParams, i: int) -> ConnectionSet:
    d = fp.d(i)
    block = fp.n * fp.p**2
    values = [fp.p, d, fp.order - d, fp.order - fp.p]
    for k in range(1, fp.p):
        values += [k * block - d, k * block + d]
    return ConnectionSet.from_values(fp.order, values)


def family_generate(fp: FamilyParams) -> typing.List[ConnectionSet]:
    return [family_member(fp, i) for i in range(1, fp.p + 1)]


@dataclass(frozen=True)
class FamilyWitness:
    i: int
    j: int
    t: int
    image: typing.Optional[ConnectionSet]
    expected: ConnectionSet

    @property
    def ok(self) -> bool:
        return self.image == self.expected


@dataclass(frozen=True)
class FamilyVerification:
    params: FamilyParams
    members: typing.List[ConnectionSet]
    witnesses: typing.List[FamilyWitness] = field(default_factory=list)
    # member index pairs (1-based) related by a unit, with the unit
    type1_pairs: typing.List[typing.Tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(w.ok for w in self.witnesses) and not self.type1_pairs


def family_verify(fp: FamilyParams) -> FamilyVerification:
    members = family_generate(fp)
    p = fp.p
    witnesses = []
    for i in range(1, p + 1):
        for j in range(1, p + 1):
            t = j * fp.n
            image = apply(ThetaParams(fp.order, p, t), members[i - 1]).circulant_result
            expected = members[(i + j - 1) % p]
            witnesses.append(FamilyWitness(i, j, t, image, expected))
    type1_pairs = []
    for i in range(1, p + 1):
        for k in range(i + 1, p + 1):
            x = type1_witness(members[i - 1], members[k - 1])
            if x is not None:
                type1_pairs.append((i, k, x))
    res = FamilyVerification(fp, members, witnesses, type1_pairs)
    if not res.ok:
        _LOGGER.warning("family %s failed verification", fp.dumps())
    return res
