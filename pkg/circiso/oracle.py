"""
Ground truth independent of the theta and unit machinery:
explicit permutation checks at any order, a backtracking isomorphism search for small orders
and invariant fingerprints
"""

import logging
import math
import typing
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from ordered_set import OrderedSet

from .adam import orbit
from .classification import BACKWARD, Identical, PairClassification, Type1, Type2
from .circulant import ConnectionSet, EdgeSet, degree, realize, spectrum
from .config import DEFAULT_CONFIG, SearchConfig
from .modring import check_order
from .theta import ThetaParams, circulant_image, vertex_permutation
from .util import DomainError

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsoWitness:
    mapping: typing.Tuple[int, ...]
    verified: bool


def unit_permutation(n: int, x: int) -> typing.List[int]:
    """v -> x*v mod n, an isomorphism C_n(R) -> C_n(xR)"""
    if math.gcd(x % n, n) != 1:
        raise DomainError(f"{x} is not a unit modulo {n}")
    return [(x * v) % n for v in range(n)]


def theta_permutation(params: ThetaParams) -> typing.List[int]:
    return vertex_permutation(params)


def scale_permutation(perm: typing.Sequence[int], k: int) -> typing.List[int]:
    """
    Lifts an isomorphism of C_n(R) to C_kn(kR), whose vertex k*q + c is vertex q of the c-th copy
    """
    if k < 1:
        raise DomainError(f"scale factor must be a positive integer, got {k}")
    n = len(perm)
    res = [0] * (k * n)
    for q in range(n):
        for c in range(k):
            res[k * q + c] = k * perm[q] + c
    return res


def verify_permutation(perm: typing.Sequence[int], a: EdgeSet, b: EdgeSet) -> IsoWitness:
    mapping = tuple(perm)
    if a.n != b.n or len(mapping) != a.n or sorted(mapping) != list(range(a.n)):
        return IsoWitness(mapping, False)
    return IsoWitness(mapping, a.relabel(mapping) == b)


def witness_permutation(
    a: ConnectionSet, b: ConnectionSet, verdict: PairClassification
) -> typing.Optional[IsoWitness]:
    """
    The explicit permutation behind a Type-1 or Type-2 verdict, checked against the realized edge sets
    None if the verdict carries no permutation
    """
    if isinstance(verdict, Identical):
        perm = list(range(a.n))
    elif isinstance(verdict, Type1):
        perm = unit_permutation(a.n, verdict.witness_x)
    elif isinstance(verdict, Type2):
        perm = theta_permutation(ThetaParams(a.n, verdict.m, verdict.witness_t))
        if verdict.direction == BACKWARD:
            return verify_permutation(perm, realize(b), realize(a))
    else:
        return None
    return verify_permutation(perm, realize(a), realize(b))


def check_oracle_order(n: int, config: SearchConfig = DEFAULT_CONFIG):
    if n > config.oracle_bound:
        raise DomainError(
            f"brute-force isomorphism search is limited to {config.oracle_bound} vertices, got {n}"
        )


def _common_neighbours(rows: typing.Sequence[int]) -> typing.List[typing.List[int]]:
    return [[bin(ra & rb).count("1") for rb in rows] for ra in rows]


def _search_order(a: EdgeSet) -> typing.List[int]:
    """Breadth-first order, so that every vertex after the first of its component has a mapped neighbour"""
    order = OrderedSet()
    for start in range(a.n):
        if start in order:
            continue
        order.add(start)
        i = len(order) - 1
        while i < len(order):
            for u in a.neighbours(order[i]):
                order.add(u)
            i += 1
    return list(order)


def brute_force_isomorphic(
    a: EdgeSet,
    b: EdgeSet,
    vertex_transitive: bool = False,
    config: SearchConfig = DEFAULT_CONFIG,
) -> typing.Optional[IsoWitness]:
    """
    Backtracking search for a vertex bijection mapping the edges of a onto those of b
    Candidates are tried in ascending order and pruned by degree, adjacency to the vertices mapped
    so far and the number of common neighbours with them.
    If b is vertex transitive the first vertex of a is mapped to 0 only.
    """
    check_oracle_order(max(a.n, b.n), config)
    if a.n != b.n or len(a) != len(b) or sorted(a.degrees()) != sorted(b.degrees()):
        return None
    n = a.n
    adj_a, adj_b = a.adjacency, b.adjacency
    deg_a, deg_b = a.degrees(), b.degrees()
    common_a, common_b = _common_neighbours(adj_a), _common_neighbours(adj_b)
    order = _search_order(a)
    perm = [-1] * n

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        candidates = [0] if depth == 0 and vertex_transitive else range(n)
        for u in candidates:
            if used >> u & 1 or deg_a[v] != deg_b[u]:
                continue
            consistent = True
            for w in order[:depth]:
                pw = perm[w]
                if (adj_a[v] >> w & 1) != (adj_b[u] >> pw & 1) or common_a[v][w] != common_b[u][pw]:
                    consistent = False
                    break
            if not consistent:
                continue
            perm[v] = u
            if extend(depth + 1, used | 1 << u):
                return True
            perm[v] = -1
        return False

    if not extend(0, 0):
        return None
    witness = verify_permutation(perm, a, b)
    if not witness.verified:
        raise RuntimeError("backtracking produced a mapping that does not preserve edges")
    return witness


def fingerprint(c: ConnectionSet, config: SearchConfig = DEFAULT_CONFIG) -> tuple:
    """
    (n, degree, rounded sorted spectrum, sorted triangles per vertex)
    Equal fingerprints are necessary for isomorphism.
    """
    digits = max(0, int(round(-math.log10(config.spectrum_tolerance))))
    # adding 0.0 turns -0.0 into 0.0
    eigenvalues = tuple(float(v) + 0.0 for v in np.round(np.array(spectrum(c)), digits))
    a = realize(c).to_matrix()
    triangles = np.diag(a @ a @ a) // 2
    return c.n, degree(c), eigenvalues, tuple(sorted(int(v) for v in triangles))


@dataclass(frozen=True)
class CrossValidation:
    n: int
    m: int
    # pairs declared isomorphic by unit multiplication or theta that are not isomorphic
    refutations: typing.List[typing.Tuple[ConnectionSet, ConnectionSet]] = field(default_factory=list)
    # isomorphic pairs neither mechanism detects
    misses: typing.List[typing.Tuple[ConnectionSet, ConnectionSet]] = field(default_factory=list)
    # pairs declared isomorphic and confirmed by the search
    confirmed: typing.List[typing.Tuple[ConnectionSet, ConnectionSet]] = field(default_factory=list)

    @property
    def discrepancies(self) -> typing.List[typing.Tuple[str, ConnectionSet, ConnectionSet]]:
        return [("refutation", a, b) for a, b in self.refutations] + [
            ("miss", a, b) for a, b in self.misses
        ]


def _claimed_pairs(sets: typing.List[ConnectionSet], m: int) -> typing.Set[typing.Tuple[ConnectionSet, ConnectionSet]]:
    known = set(sets)
    claimed = set()
    for c in sets:
        related = set(orbit(c).members)
        for t in range(1, c.n // m):
            s = circulant_image(ThetaParams(c.n, m, t), c)
            if s is not None:
                related.add(s)
        for s in related:
            if s != c and s in known:
                claimed.add((min(c, s), max(c, s)))
    return claimed


def cross_validate(n: int, m: int, config: SearchConfig = DEFAULT_CONFIG) -> CrossValidation:
    """
    Compares the verdict of unit multiplication and theta_{n,m,t} with the brute-force search
    over all connection sets of order n with at least min_size jumps
    """
    check_order(n, config)
    check_oracle_order(n, config)
    if m <= 1 or n % (m**3) != 0:
        raise DomainError(f"can not cross-validate order {n} with m={m}, m > 1 and m^3 | n are required")
    jumps = range(1, n // 2 + 1)
    sets = [
        ConnectionSet(n, r)
        for size in range(config.min_size, len(jumps) + 1)
        for r in combinations(jumps, size)
    ]
    claimed = _claimed_pairs(sets, m)
    groups = {}
    for c in sets:
        groups.setdefault(fingerprint(c, config), []).append(c)
    refutations, misses, confirmed = [], [], []
    for a, b in sorted(claimed):
        if fingerprint(a, config) != fingerprint(b, config):
            refutations.append((a, b))
    for members in groups.values():
        for a, b in combinations(sorted(members), 2):
            iso = brute_force_isomorphic(realize(a), realize(b), vertex_transitive=True, config=config)
            if (a, b) in claimed:
                if iso is None:
                    refutations.append((a, b))
                else:
                    confirmed.append((a, b))
            elif iso is not None:
                misses.append((a, b))
    res = CrossValidation(n, m, sorted(refutations), sorted(misses), sorted(confirmed))
    _LOGGER.info(
        "cross-validated %d sets of order %d: %d confirmed, %d refutations, %d misses",
        len(sets),
        n,
        len(confirmed),
        len(refutations),
        len(misses),
    )
    return res
