"""
Exhaustive discovery of Type-2 isomorphic pairs of a given order with respect to a given m
"""

import itertools
import logging
import typing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ordered_set import OrderedSet

from .adam import orbit
from .circulant import ConnectionSet, cospectral, realize
from .classification import BACKWARD, FORWARD, Type2
from .classify import classify_pair
from .config import DEFAULT_CONFIG, SearchConfig
from .modring import check_order
from .oracle import theta_permutation, verify_permutation
from .theta import ThetaParams, circulant_image
from .util import DomainError

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanStats:
    sets_scanned: int = 0
    theta_applications: int = 0
    circulant_hits: int = 0

    def __add__(self, other: "ScanStats") -> "ScanStats":
        return ScanStats(
            self.sets_scanned + other.sets_scanned,
            self.theta_applications + other.theta_applications,
            self.circulant_hits + other.circulant_hits,
        )

    def to_dict(self):
        return {
            "sets_scanned": self.sets_scanned,
            "theta_applications": self.theta_applications,
            "circulant_hits": self.circulant_hits,
        }


@dataclass(frozen=True, order=True)
class EnumeratedPair:
    """A Type-2 pair with r < s and the theta witness reaching one from the other"""

    r: ConnectionSet
    s: ConnectionSet
    m: int
    t: int
    direction: str = FORWARD


@dataclass(frozen=True, order=True)
class IsoClass:
    members: typing.Tuple[ConnectionSet, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, c: ConnectionSet) -> bool:
        return c in self.members


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    m: int
    pairs: typing.List[EnumeratedPair] = field(default_factory=list)
    classes: typing.List[IsoClass] = field(default_factory=list)
    scan_stats: ScanStats = ScanStats()

    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    def class_sizes(self) -> typing.Dict[int, int]:
        sizes = {}
        for c in self.classes:
            sizes[len(c)] = sizes.get(len(c), 0) + 1
        return dict(sorted(sizes.items()))


# Pairs keyed by (r, s), valued by the witness preference (direction rank, m, t)
PairTable = typing.Dict[typing.Tuple[ConnectionSet, ConnectionSet], typing.Tuple[int, int, int]]


def check_scan_parameters(n: int, m: int, config: SearchConfig = DEFAULT_CONFIG):
    check_order(n, config)
    if m <= 1 or n % (m**3) != 0:
        raise DomainError(f"can not scan order {n} with m={m}, m > 1 and m^3 | n are required")


def candidate_cores(
    n: int, m: int, residual_jumps: typing.Optional[int], exhaustive: bool
) -> typing.List[typing.Tuple[int, ...]]:
    """
    The possible sets of residual jumps (jumps not divisible by m) of a scanned connection set
    """
    residuals = [r for r in range(1, n // 2 + 1) if r % m != 0]
    if exhaustive:
        sizes = range(len(residuals) + 1)
    else:
        sizes = [m if residual_jumps is None else residual_jumps]
    return [core for size in sizes for core in itertools.combinations(residuals, size)]


def merge(tables: typing.Iterable[PairTable]) -> PairTable:
    """Keeps the preferred witness of every pair, independent of the order of the tables"""
    res = {}
    for table in tables:
        for key, witness in table.items():
            if key not in res or witness < res[key]:
                res[key] = witness
    return res


def scan_cores(
    n: int, m: int, cores: typing.Sequence[typing.Tuple[int, ...]], min_size: int
) -> typing.Tuple[PairTable, ScanStats]:
    """Scans every core combined with every nonempty set of multiples of m"""
    multiples = list(range(m, n // 2 + 1, m))
    params = [ThetaParams(n, m, t) for t in range(1, n // m)]
    pairs = {}
    scanned = applications = hits = 0
    for core in cores:
        for mask in range(1, 1 << len(multiples)):
            extension = [multiples[i] for i in range(len(multiples)) if mask >> i & 1]
            if len(core) + len(extension) < min_size:
                continue
            r = ConnectionSet(n, tuple(sorted((*core, *extension))))
            scanned += 1
            r_orbit = None
            for p in params:
                applications += 1
                s = circulant_image(p, r)
                if s is None or s == r:
                    continue
                hits += 1
                if r_orbit is None:
                    r_orbit = orbit(r)
                if s in r_orbit:
                    continue
                if r < s:
                    key, witness = (r, s), (0, m, p.t)
                else:
                    key, witness = (s, r), (1, m, p.t)
                if key not in pairs or witness < pairs[key]:
                    pairs[key] = witness
    _LOGGER.debug(
        "scanned %d cores of order %d: %d sets, %d pairs", len(cores), n, scanned, len(pairs)
    )
    return pairs, ScanStats(scanned, applications, hits)


def _scan_chunk(args) -> typing.Tuple[PairTable, ScanStats]:
    return scan_cores(*args)


def classes(pairs: typing.Iterable[EnumeratedPair]) -> typing.List[IsoClass]:
    """Connected components of the pair graph, i.e. the transitive closure of the Type-2 relation"""
    parent = {}

    def find(c: ConnectionSet) -> ConnectionSet:
        parent.setdefault(c, c)
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for pair in pairs:
        a, b = find(pair.r), find(pair.s)
        if a != b:
            parent[max(a, b)] = min(a, b)
    components = {}
    for c in parent:
        components.setdefault(find(c), OrderedSet()).add(c)
    return sorted(IsoClass(tuple(sorted(members))) for members in components.values())


def enumerate_type2(
    n: int,
    m: int,
    min_size: typing.Optional[int] = None,
    residual_jumps: typing.Optional[int] = None,
    exhaustive: typing.Optional[bool] = None,
    workers: typing.Optional[int] = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> EnumerationReport:
    """
    Finds all Type-2 pairs of order n with respect to m among connection sets with at least min_size jumps
    and at least one multiple of m. Unless exhaustive, only sets with exactly residual_jumps jumps
    not divisible by m (default m) are scanned.
    """
    config = config.update(
        min_size=min_size, residual_jumps=residual_jumps, exhaustive=exhaustive, workers=workers
    )
    check_scan_parameters(n, m, config)
    if config.workers < 1:
        raise DomainError(f"at least one worker is required, got {config.workers}")
    cores = candidate_cores(n, m, config.residual_jumps, config.exhaustive)
    if config.workers == 1 or len(cores) < 2:
        tables = [scan_cores(n, m, cores, config.min_size)]
    else:
        chunks = [cores[i :: config.workers] for i in range(config.workers)]
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            tables = list(
                executor.map(_scan_chunk, [(n, m, chunk, config.min_size) for chunk in chunks])
            )
    table = merge(t for t, _ in tables)
    stats = sum((s for _, s in tables), ScanStats())
    pairs = sorted(
        EnumeratedPair(r, s, pm, pt, FORWARD if rank == 0 else BACKWARD)
        for (r, s), (rank, pm, pt) in table.items()
    )
    report = EnumerationReport(n, m, pairs, classes(pairs), stats)
    _LOGGER.info(
        "order %d, m=%d: %d sets scanned, %d theta applications, %d circulant hits, %d pairs in %d classes",
        n,
        m,
        stats.sets_scanned,
        stats.theta_applications,
        stats.circulant_hits,
        report.pair_count,
        len(report.classes),
    )
    return report


def recheck(report: EnumerationReport, config: SearchConfig = DEFAULT_CONFIG) -> typing.List[str]:
    """
    Independently re-verifies every reported pair: classification, explicit theta permutation
    on the realized edge sets and equality of spectra. Returns the failures found.
    """
    problems = []
    for pair in report.pairs:
        name = f"{pair.r.dumps()} / {pair.s.dumps()}"
        verdict = classify_pair(pair.r, pair.s)
        if not isinstance(verdict, Type2):
            problems.append(f"{name} classifies as {verdict.dumps()}")
            continue
        source, target = (pair.r, pair.s) if pair.direction == FORWARD else (pair.s, pair.r)
        perm = theta_permutation(ThetaParams(report.n, pair.m, pair.t))
        if not verify_permutation(perm, realize(source), realize(target)).verified:
            problems.append(f"{name}: theta permutation m={pair.m} t={pair.t} does not map edges")
        if source in orbit(target):
            problems.append(f"{name}: sets lie in the same orbit")
        if not cospectral(pair.r, pair.s, config.spectrum_tolerance):
            problems.append(f"{name}: spectra differ")
    return problems
