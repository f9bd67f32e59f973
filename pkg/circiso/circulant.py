import typing
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config import DEFAULT_CONFIG
from .modring import check_modulus, reflexive_reduce
from .util import DomainError, format_jumps, parse_jumps


@dataclass(frozen=True, order=True)
class ConnectionSet:
    """
    The identity of a circulant graph C_n(R): the order n and the reduced jump set R
    Two connection sets are equal iff the graphs coincide after reflexive reduction.
    """

    n: int
    jumps: typing.Tuple[int, ...]

    def __post_init__(self):
        check_modulus(self.n)
        jumps = tuple(self.jumps)
        if list(jumps) != sorted(set(jumps)):
            raise DomainError(f"jumps {jumps} of C_{self.n} must be sorted and duplicate-free")
        for r in jumps:
            if not 1 <= r <= self.n // 2:
                raise DomainError(f"jump {r} of C_{self.n} is outside [1, {self.n // 2}]")
        object.__setattr__(self, "jumps", jumps)

    @classmethod
    def from_values(cls, n: int, values: typing.Iterable[int]) -> "ConnectionSet":
        """Reflexively reduces arbitrary integers into a connection set, rejecting self-loops"""
        reduced = reflexive_reduce(check_modulus(n), values)
        if reduced and reduced[0] == 0:
            raise DomainError(f"jump values {list(values)} contain a multiple of {n} (self-loop)")
        return cls(n, reduced)

    @classmethod
    def parse(cls, n: int, text: str) -> "ConnectionSet":
        return cls.from_values(n, parse_jumps(text))

    def __len__(self):
        return len(self.jumps)

    def __iter__(self):
        return iter(self.jumps)

    def __contains__(self, r: int) -> bool:
        return r in self.jumps

    def union(self, other: typing.Iterable[int]) -> "ConnectionSet":
        return ConnectionSet.from_values(self.n, (*self.jumps, *other))

    def signed(self) -> typing.Tuple[int, ...]:
        """The jumps together with their negatives, i.e. the neighbourhood of vertex 0"""
        return tuple(sorted({r for r in self.jumps} | {self.n - r for r in self.jumps}))

    def dumps(self) -> str:
        return f"C_{self.n}({format_jumps(self.jumps)})"

    def __str__(self):
        return format_jumps(self.jumps)


@dataclass(frozen=True)
class EdgeSet:
    n: int
    edges: typing.FrozenSet[typing.Tuple[int, int]]

    def __post_init__(self):
        for a, b in self.edges:
            if not 0 <= a < b < self.n:
                raise DomainError(f"invalid edge ({a}, {b}) on {self.n} vertices")

    @classmethod
    def from_pairs(cls, n: int, pairs: typing.Iterable[typing.Tuple[int, int]]) -> "EdgeSet":
        edges = set()
        for a, b in pairs:
            if a == b:
                raise DomainError(f"self-pair ({a}, {b})")
            edges.add((a, b) if a < b else (b, a))
        return cls(n, frozenset(edges))

    def __len__(self):
        return len(self.edges)

    @cached_property
    def adjacency(self) -> typing.Tuple[int, ...]:
        """Bit-matrix: bit b of row a is set iff {a, b} is an edge"""
        rows = [0] * self.n
        for a, b in self.edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return tuple(rows)

    def neighbours(self, v: int) -> typing.List[int]:
        row = self.adjacency[v]
        return [u for u in range(self.n) if row >> u & 1]

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def degrees(self) -> typing.List[int]:
        return [bin(row).count("1") for row in self.adjacency]

    def relabel(self, perm: typing.Sequence[int]) -> "EdgeSet":
        return EdgeSet.from_pairs(self.n, ((perm[a], perm[b]) for a, b in self.edges))

    def rotate(self, k: int = 1) -> "EdgeSet":
        return self.relabel([(v + k) % self.n for v in range(self.n)])

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a


def realize(c: ConnectionSet) -> EdgeSet:
    n = c.n
    return EdgeSet.from_pairs(n, ((x, (x + r) % n) for x in range(n) for r in c.jumps))


def degree(c: ConnectionSet) -> int:
    return sum(1 if 2 * r == c.n else 2 for r in c.jumps)


def spectrum(c: ConnectionSet) -> typing.Tuple[float, ...]:
    """
    Eigenvalues of the adjacency matrix, ascending
    lambda_j = sum_{r < n/2} 2 cos(2 pi j r / n) + [n/2 in R] (-1)^j
    """
    n = c.n
    j = np.arange(n, dtype=np.int64)
    lam = np.zeros(n, dtype=np.float64)
    for r in c.jumps:
        if 2 * r == n:
            lam += np.where(j % 2 == 0, 1.0, -1.0)
        else:
            # reduce j*r first so the cosine argument stays small
            lam += 2.0 * np.cos(2.0 * np.pi * ((j * r) % n) / n)
    return tuple(np.sort(lam).tolist())


def cospectral(a: ConnectionSet, b: ConnectionSet, tolerance: typing.Optional[float] = None) -> bool:
    if tolerance is None:
        tolerance = DEFAULT_CONFIG.spectrum_tolerance
    if a.n != b.n:
        return False
    return bool(np.allclose(spectrum(a), spectrum(b), rtol=0.0, atol=tolerance))


def scale(c: ConnectionSet, k: int) -> ConnectionSet:
    """k.C_n(T) = C_kn(kT)"""
    if k < 1:
        raise DomainError(f"scale factor must be a positive integer, got {k}")
    if k == 1:
        return c
    return ConnectionSet.from_values(k * c.n, (k * r for r in c.jumps))
