"""
Deciding whether two circulant graphs are isomorphic by unit multiplication (Type-1)
or by a theta transformation between connection sets outside each other's orbit (Type-2)
"""

import itertools
import logging
import typing
from dataclasses import dataclass, field

from ordered_set import OrderedSet

from .adam import check_same_order, orbit, type1_witness
from .circulant import ConnectionSet, scale
from .classification import (
    BACKWARD,
    FORWARD,
    Identical,
    NotIsomorphicByTheseMethods,
    PairClassification,
    Type1,
    Type2,
)
from .modring import valid_type2_moduli
from .theta import ThetaParams, apply, circulant_image
from .util import DomainError

_LOGGER = logging.getLogger(__name__)

# Type-2 isomorphism is only defined for connection sets with at least three jumps
TYPE2_MIN_SIZE = 3


@dataclass(frozen=True)
class Type2Partner:
    m: int
    t: int
    partner: ConnectionSet


@dataclass(frozen=True)
class ExtensionRow:
    r: ConnectionSet
    s: typing.Optional[ConnectionSet]
    orbit: typing.List[ConnectionSet] = field(default_factory=list)
    label: str = ""


def theta_witness(a: ConnectionSet, b: ConnectionSet, m: int) -> typing.Optional[int]:
    """The smallest t >= 1 such that theta_{n,m,t} maps C_n(A) onto C_n(B)"""
    for t in range(1, a.n // m):
        if circulant_image(ThetaParams(a.n, m, t), a) == b:
            return t
    return None


def _directed_type2(a: ConnectionSet, b: ConnectionSet) -> typing.Optional[typing.Tuple[int, int]]:
    for m in valid_type2_moduli(a.n, a.jumps):
        t = theta_witness(a, b, m)
        if t is not None:
            return m, t
    return None


def _checked_type2(a: ConnectionSet, b: ConnectionSet, m: int, t: int, direction: str) -> Type2:
    image = apply(ThetaParams(a.n, m, t), a)
    image_check = image.circulant_result == b
    if not image_check:
        raise RuntimeError(
            f"class-wise and edge-wise theta images of {a.dumps()} disagree for m={m}, t={t}"
        )
    return Type2(m, t, image_check, direction)


def classify_pair(a: ConnectionSet, b: ConnectionSet) -> PairClassification:
    check_same_order(a, b)
    if a == b:
        return Identical()
    x = type1_witness(a, b)
    if x is not None:
        return Type1(x)
    if len(a) != len(b) or len(a) < TYPE2_MIN_SIZE:
        return NotIsomorphicByTheseMethods()
    found = _directed_type2(a, b)
    if found is not None:
        return _checked_type2(a, b, *found, FORWARD)
    found = _directed_type2(b, a)
    if found is not None:
        return _checked_type2(b, a, *found, BACKWARD)
    return NotIsomorphicByTheseMethods()


def type2_partners(a: ConnectionSet) -> typing.List[Type2Partner]:
    """
    Every circulant theta image of C_n(A) outside the orbit of A, over all admissible m
    Each partner is reported once with its smallest (m, t).
    """
    if len(a) < TYPE2_MIN_SIZE:
        raise DomainError(
            f"Type-2 partners need at least {TYPE2_MIN_SIZE} jumps, {a.dumps()} has {len(a)}"
        )
    own_orbit = orbit(a)
    seen = OrderedSet()
    res = []
    for m in valid_type2_moduli(a.n, a.jumps):
        for t in range(1, a.n // m):
            s = circulant_image(ThetaParams(a.n, m, t), a)
            if s is None or s == a or s in own_orbit or s in seen:
                continue
            seen.add(s)
            res.append(Type2Partner(m, t, s))
    return res


def extend_pair(
    a: ConnectionSet, b: ConnectionSet, m: int, extension: typing.Iterable[int]
) -> typing.Tuple[ConnectionSet, ConnectionSet]:
    """
    Adjoins the same multiples of m to both sets of a Type-2 pair
    The extended pair is again isomorphic via the same theta, it may however have become Type-1.
    """
    check_same_order(a, b)
    extension = sorted(set(extension))
    problems = []
    for tau in extension:
        if not 1 <= tau <= a.n // 2:
            problems.append(f"{tau} is outside [1, {a.n // 2}]")
        elif tau % m != 0:
            problems.append(f"{tau} is not a multiple of {m}")
        elif tau in a or tau in b:
            problems.append(f"{tau} already is a jump of the pair")
    if problems:
        raise DomainError(f"invalid extension set {extension}: " + ", ".join(problems))
    verdict = classify_pair(a, b)
    if not isinstance(verdict, Type2):
        raise DomainError(f"{a.dumps()} and {b.dumps()} are not a Type-2 pair: {verdict.dumps()}")
    # the verdict reports the smallest m, another admissible m may relate the pair as well
    if theta_witness(a, b, m) is None and theta_witness(b, a, m) is None:
        raise DomainError(f"{a.dumps()} and {b.dumps()} are not related by a theta with m={m}")
    if not extension:
        return a, b
    return a.union(extension), b.union(extension)


def scale_pair(
    a: ConnectionSet, b: ConnectionSet, k: int
) -> typing.Tuple[ConnectionSet, ConnectionSet, PairClassification]:
    """
    Scales both sets by k. C_kn(kR) consists of k copies of C_n(R),
    so the classification of the original pair carries over to the scaled one.
    """
    check_same_order(a, b)
    return scale(a, k), scale(b, k), classify_pair(a, b)


def core_extensions(n: int, m: int, core: ConnectionSet, t: int) -> typing.List[ExtensionRow]:
    """
    Adjoins every nonempty set of multiples of m to a core of jumps prime to m
    and records the theta_{n,m,t} image of each resulting set.
    Rows are ordered by the number of adjoined jumps, then lexicographically.
    """
    params = ThetaParams(n, m, t)
    if core.n != n:
        raise DomainError(f"core {core.dumps()} is not of order {n}")
    divisible = [r for r in core.jumps if r % m == 0]
    if divisible:
        raise DomainError(f"core jumps {divisible} are multiples of {m}")
    multiples = list(range(m, n // 2 + 1, m))
    rows = []
    for size in range(1, len(multiples) + 1):
        for extension in itertools.combinations(multiples, size):
            r = core.union(extension)
            s = circulant_image(params, r)
            r_orbit = orbit(r)
            if s is None or s == r:
                label = ""
            elif s in r_orbit:
                label = "T1"
            else:
                label = "T2"
            rows.append(ExtensionRow(r, s, list(r_orbit.members), label))
    _LOGGER.info(
        "extended core %s by %d sets of multiples of %d: %d T2, %d T1",
        core.dumps(),
        len(rows),
        m,
        sum(row.label == "T2" for row in rows),
        sum(row.label == "T1" for row in rows),
    )
    return rows
