import logging

import pytest

from circiso.classification import Type1, Type2
from circiso.classify import classify_pair
from circiso.fixtures import (
    ERRATA_FILE,
    FIXTURE_DIR,
    FIXTURE_FILES,
    parse_errata,
    parse_fixture,
    verify_fixture,
    verify_fixtures,
)
from circiso.util import FixtureError


def test_packaged_fixtures():
    reports = {r.path: r for r in verify_fixtures()}
    assert all(r.ok for r in reports.values())
    base = reports[str(FIXTURE_DIR / "base_pairs.tsv")]
    assert (base.rows, base.matches, base.errata_applied) == (16, 16, [])
    unit = reports[str(FIXTURE_DIR / "unit_seven_pairs.tsv")]
    assert (unit.rows, unit.matches) == (30, 30)
    for name, prefix in [("core_1_15.tsv", "a"), ("core_3_13.tsv", "b")]:
        core = reports[str(FIXTURE_DIR / name)]
        assert (core.rows, core.matches) == (255, 251)
        assert sorted(e.source for e in core.errata_applied) == [f"{prefix}:{i}" for i in (135, 164, 165, 166)]


def test_core_tables_type2_rows():
    rows = [p for name in ("core_1_15.tsv", "core_3_13.tsv") for p in parse_fixture(FIXTURE_DIR / name)]
    assert sum(p.expected_label == "T2" for p in rows) == 384


def test_witnesses():
    for pair in parse_fixture(FIXTURE_DIR / "base_pairs.tsv"):
        verdict = classify_pair(pair.r, pair.s)
        if pair.expected_label == "T2":
            assert (verdict.m, verdict.witness_t) == (2, 4)
        else:
            assert verdict == Type1(7)
    for pair in parse_fixture(FIXTURE_DIR / "unit_seven_pairs.tsv"):
        assert classify_pair(pair.r, pair.s) == Type1(7)


def test_errata_corrections_classify():
    errata = parse_errata()
    assert len(errata) == 8
    for (name, source), erratum in errata.items():
        pair = next(p for p in parse_fixture(FIXTURE_DIR / name) if p.source == source)
        assert not isinstance(classify_pair(pair.r, pair.s), Type2)
        assert erratum.label == "T2" and erratum.witness == "m=2,t=4"


def test_empty_fixture(tmp_path, caplog):
    path = tmp_path / "empty.tsv"
    path.write_text("# n\tR\tS\tlabel\tsource\n\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        report = verify_fixture(path)
    assert report.rows == 0 and report.ok
    assert "contains no rows" in caplog.text


def test_malformed_fixture(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("32\t1,2\n32\t1,2,15\t2,7,9\tT3\tq\n32\t1,x\t2\tT1\tr\n", encoding="utf-8")
    with pytest.raises(FixtureError) as e:
        parse_fixture(path)
    assert [line for line, _ in e.value.problems] == [1, 2, 3]
    assert "line 2" in str(e.value)


def test_wrong_label(tmp_path):
    path = tmp_path / "wrong.tsv"
    path.write_text("32\t1,2,15\t2,7,9\tT1\tw:1\n32\t1,4,15\t4,7,9\tT1\tw:2\n", encoding="utf-8")
    report = verify_fixture(path)
    assert not report.ok
    assert (report.rows, report.matches) == (2, 1)
    assert report.mismatches[0].pair.source == "w:1"
    assert "label differs" in report.mismatches[0].dumps()


def test_bad_erratum(tmp_path):
    path = tmp_path / "typo.tsv"
    path.write_text("32\t1,2,15\t2,7,11\tT2\tz:1\n32\t1,2,15\t2,7,13\tT2\tz:2\n", encoding="utf-8")
    errata = tmp_path / "errata.tsv"
    errata.write_text(
        "typo.tsv\tz:1\t2,7,9\tT2\tm=2,t=4\tjump 9 printed as 11\n"
        "typo.tsv\tz:2\t2,7,15\tT2\tm=2,t=4\twrong correction\n",
        encoding="utf-8",
    )
    (report,) = verify_fixtures([path], errata)
    assert [e.source for e in report.errata_applied] == ["z:1"]
    assert [m.pair.source for m in report.mismatches] == ["z:2"]


def test_duplicate_erratum(tmp_path):
    errata = tmp_path / "errata.tsv"
    errata.write_text("a.tsv\tx:1\t1\tT1\tx=3\tr\na.tsv\tx:1\t1\tT1\tx=3\tr\n", encoding="utf-8")
    with pytest.raises(FixtureError):
        parse_errata(errata)


def test_fixture_file_list():
    assert ERRATA_FILE.exists()
    assert all(p.exists() for p in FIXTURE_FILES)


def test_missing_files(tmp_path):
    missing = tmp_path / "missing.tsv"
    with pytest.raises(FixtureError) as e:
        parse_fixture(missing)
    assert e.value.path == str(missing)
    assert e.value.problems[0][0] == 0
    with pytest.raises(FixtureError):
        parse_errata(missing)
    with pytest.raises(FixtureError):
        verify_fixtures(errata_path=missing)
