"""
Checking transcribed T1/T2 tables against the classifier

Fixture files are tab separated with the columns n, R, S, label and source, '#' starts a comment.
Transcription slips are listed in an errata file; a corrected row only counts once the corrected
pair classifies as stated and its witness permutation maps edges onto edges.
"""

import logging
import os
import typing
from dataclasses import dataclass, field
from pathlib import Path

from .circulant import ConnectionSet
from .classification import PairClassification
from .classify import classify_pair
from .oracle import witness_permutation
from .util import DomainError, FixtureError

_LOGGER = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).parent / "data"
ERRATA_FILE = FIXTURE_DIR / "errata.tsv"
FIXTURE_FILES = [
    FIXTURE_DIR / "base_pairs.tsv",
    FIXTURE_DIR / "unit_seven_pairs.tsv",
    FIXTURE_DIR / "core_1_15.tsv",
    FIXTURE_DIR / "core_3_13.tsv",
]

LABELS = ("T1", "T2")


@dataclass(frozen=True)
class FixturePair:
    n: int
    r: ConnectionSet
    s: ConnectionSet
    expected_label: str
    source: str
    line: int = 0


@dataclass(frozen=True)
class Erratum:
    file: str
    source: str
    corrected_s: str
    label: str
    witness: str
    reason: str
    line: int = 0


@dataclass(frozen=True)
class FixtureMismatch:
    pair: FixturePair
    verdict: PairClassification
    reason: str

    def dumps(self) -> str:
        return (
            f"line {self.pair.line} ({self.pair.source}): {self.pair.r.dumps()} / {self.pair.s.dumps()} "
            f"expected {self.pair.expected_label}, got {self.verdict.dumps()}: {self.reason}"
        )


@dataclass(frozen=True)
class FixtureReport:
    path: str
    rows: int = 0
    matches: int = 0
    mismatches: typing.List[FixtureMismatch] = field(default_factory=list)
    errata_applied: typing.List[Erratum] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _rows(path: typing.Union[str, os.PathLike]) -> typing.Iterator[typing.Tuple[int, typing.List[str]]]:
    try:
        f = open(path, encoding="utf-8")
    except OSError as e:
        raise FixtureError(str(path), [(0, e.strerror or str(e))]) from e
    with f:
        for number, line in enumerate(f, start=1):
            line = line.split("#", 1)[0].strip()
            if line:
                yield number, [col.strip() for col in line.split("\t")]


def parse_fixture(path: typing.Union[str, os.PathLike]) -> typing.List[FixturePair]:
    pairs, problems = [], []
    for number, cols in _rows(path):
        if len(cols) != 5:
            problems.append((number, f"expected 5 tab separated columns, found {len(cols)}"))
            continue
        n, r, s, label, source = cols
        try:
            order = int(n)
            pairs.append(
                FixturePair(
                    order, ConnectionSet.parse(order, r), ConnectionSet.parse(order, s), label, source, number
                )
            )
        except ValueError as e:
            problems.append((number, str(e)))
            continue
        if label not in LABELS:
            problems.append((number, f"label {label!r} is neither T1 nor T2"))
    if problems:
        raise FixtureError(str(path), problems)
    if not pairs:
        _LOGGER.warning("fixture file %s contains no rows", path)
    return pairs


def parse_errata(path: typing.Union[str, os.PathLike] = ERRATA_FILE) -> typing.Dict[typing.Tuple[str, str], Erratum]:
    errata, problems = {}, []
    for number, cols in _rows(path):
        if len(cols) != 6:
            problems.append((number, f"expected 6 tab separated columns, found {len(cols)}"))
            continue
        erratum = Erratum(*cols, line=number)
        if (erratum.file, erratum.source) in errata:
            problems.append((number, f"duplicate erratum for {erratum.file} {erratum.source}"))
        errata[(erratum.file, erratum.source)] = erratum
    if problems:
        raise FixtureError(str(path), problems)
    return errata


def _witness_problem(pair: FixturePair, s: ConnectionSet, verdict: PairClassification) -> typing.Optional[str]:
    witness = witness_permutation(pair.r, s, verdict)
    if witness is None or not witness.verified:
        return "witness permutation does not map edges onto edges"
    return None


def _witness_text(verdict: PairClassification) -> str:
    d = verdict.to_dict()
    if "x" in d:
        return f"x={d['x']}"
    if "t" in d:
        return f"m={d['m']},t={d['t']}"
    return ""


def _check_erratum(pair: FixturePair, erratum: Erratum) -> typing.Optional[str]:
    try:
        corrected = ConnectionSet.parse(pair.n, erratum.corrected_s)
    except DomainError as e:
        return f"erratum line {erratum.line}: {e}"
    verdict = classify_pair(pair.r, corrected)
    if verdict.label != erratum.label:
        return f"erratum line {erratum.line}: corrected pair classifies as {verdict.dumps()}"
    if _witness_text(verdict) != erratum.witness:
        return f"erratum line {erratum.line}: witness {_witness_text(verdict)} instead of {erratum.witness}"
    return _witness_problem(pair, corrected, verdict)


def verify_fixture(
    path: typing.Union[str, os.PathLike],
    errata: typing.Optional[typing.Dict[typing.Tuple[str, str], Erratum]] = None,
) -> FixtureReport:
    """Re-classifies every row of a fixture file and compares the labels"""
    if errata is None:
        errata = parse_errata()
    name = os.path.basename(path)
    pairs = parse_fixture(path)
    matches = 0
    mismatches, applied = [], []
    for pair in pairs:
        verdict = classify_pair(pair.r, pair.s)
        if verdict.label == pair.expected_label:
            problem = _witness_problem(pair, pair.s, verdict)
            if problem is None:
                matches += 1
            else:
                mismatches.append(FixtureMismatch(pair, verdict, problem))
            continue
        erratum = errata.get((name, pair.source))
        if erratum is None:
            mismatches.append(FixtureMismatch(pair, verdict, "label differs"))
            continue
        problem = _check_erratum(pair, erratum)
        if problem is not None:
            mismatches.append(FixtureMismatch(pair, verdict, problem))
            continue
        _LOGGER.warning(
            "%s %s: using corrected S %s (%s)", name, pair.source, erratum.corrected_s, erratum.reason
        )
        applied.append(erratum)
    return FixtureReport(str(path), len(pairs), matches, mismatches, applied)


def verify_fixtures(
    paths: typing.Optional[typing.Sequence[typing.Union[str, os.PathLike]]] = None,
    errata_path: typing.Union[str, os.PathLike] = ERRATA_FILE,
) -> typing.List[FixtureReport]:
    errata = parse_errata(errata_path)
    return [verify_fixture(p, errata) for p in (paths or FIXTURE_FILES)]
