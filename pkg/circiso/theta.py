"""
The vertex transformation theta_{n,m,t}: x = qm + j is sent to x + j*t*m (mod n)

Each residue class modulo m is rotated by its own multiple of t*m, which maps some circulant graphs
onto circulant graphs that are not reachable by unit multiplication.
"""

import typing
from dataclasses import dataclass

from .circulant import ConnectionSet, EdgeSet, realize
from .modring import check_modulus, reflexive_reduce
from .util import DomainError


@dataclass(frozen=True)
class ThetaParams:
    n: int
    m: int
    t: int

    def __post_init__(self):
        check_modulus(self.n)
        if self.m <= 1:
            raise DomainError(f"theta requires m > 1, got m={self.m}")
        if self.n % (self.m**3) != 0:
            raise DomainError(f"theta requires m^3 | n, but {self.m}^3 does not divide {self.n}")
        if not 0 <= self.t <= self.n // self.m - 1:
            raise DomainError(
                f"t={self.t} outside [0, {self.n // self.m - 1}] for n={self.n}, m={self.m}"
            )

    def dumps(self) -> str:
        return f"theta_{{{self.n},{self.m},{self.t}}}"


@dataclass(frozen=True)
class ThetaImage:
    params: ThetaParams
    source: ConnectionSet
    image_edges: EdgeSet
    circulant_result: typing.Optional[ConnectionSet]

    @property
    def is_circulant(self) -> bool:
        return self.circulant_result is not None

    def dumps(self) -> str:
        target = (
            self.circulant_result.dumps()
            if self.circulant_result is not None
            else "not circulant"
        )
        return f"{self.params.dumps()}({self.source.dumps()}) = {target}"


def vertex_map(params: ThetaParams, x: int) -> int:
    return (x + (x % params.m) * params.t * params.m) % params.n


def vertex_permutation(params: ThetaParams) -> typing.List[int]:
    perm = [vertex_map(params, x) for x in range(params.n)]
    if len(set(perm)) != params.n:
        raise RuntimeError(f"{params.dumps()} is not a bijection on Z_{params.n}")
    return perm


def detect_circulant(edges: EdgeSet) -> typing.Optional[ConnectionSet]:
    """
    Reads the candidate jump set off the neighbourhood of vertex 0
    and accepts it only if it regenerates the whole edge set
    """
    candidate = reflexive_reduce(edges.n, edges.neighbours(0))
    if candidate and candidate[0] == 0:
        raise RuntimeError("edge set contains a self-loop at vertex 0")
    c = ConnectionSet(edges.n, candidate)
    if realize(c) != edges:
        return None
    return c


def apply(params: ThetaParams, c: ConnectionSet) -> ThetaImage:
    if params.n != c.n:
        raise DomainError(f"{params.dumps()} can not be applied to a graph of order {c.n}")
    source_edges = realize(c)
    image_edges = source_edges.relabel(vertex_permutation(params))
    if len(image_edges) != len(source_edges):
        raise RuntimeError(f"{params.dumps()} collapsed edges of {c.dumps()}")
    return ThetaImage(params, c, image_edges, detect_circulant(image_edges))


def jump_shortcut(params: ThetaParams, c: ConnectionSet) -> typing.Tuple[int, ...]:
    """The image of the neighbourhood of vertex 0, reduced. Not a circularity proof"""
    n, m, t = params.n, params.m, params.t
    return reflexive_reduce(n, (s + (s % m) * t * m for s in c.signed()))


def class_differences(params: ThetaParams, c: ConnectionSet) -> typing.List[typing.FrozenSet[int]]:
    """
    For every residue class j modulo m the set of differences theta(x + s) - theta(x), x = j (mod m)
    These only depend on j, the image is circulant iff all of them coincide.
    """
    n, m, t = params.n, params.m, params.t
    signed = c.signed()
    return [
        frozenset((s + (((j + s) % m) - j) * t * m) % n for s in signed)
        for j in range(m)
    ]


def circulant_image(params: ThetaParams, c: ConnectionSet) -> typing.Optional[ConnectionSet]:
    """Exact circularity test of the theta image without building edge sets"""
    if params.n != c.n:
        raise DomainError(f"{params.dumps()} can not be applied to a graph of order {c.n}")
    diffs = class_differences(params, c)
    first = diffs[0]
    if any(d != first for d in diffs[1:]):
        return None
    return ConnectionSet.from_values(params.n, first)
