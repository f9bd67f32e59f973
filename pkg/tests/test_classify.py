import pytest
from hypothesis import given, settings, strategies as st

from circiso.adam import multiply
from circiso.circulant import ConnectionSet, cospectral, realize
from circiso.classification import (
    BACKWARD,
    FORWARD,
    Identical,
    NotIsomorphicByTheseMethods,
    Type1,
    Type2,
    classification_from_dict,
)
from circiso.classify import (
    Type2Partner,
    classify_pair,
    core_extensions,
    extend_pair,
    scale_pair,
    type2_partners,
)
from circiso.fixtures import FIXTURE_DIR, parse_fixture
from circiso.modring import units
from circiso.oracle import scale_permutation, theta_permutation, verify_permutation, witness_permutation
from circiso.theta import ThetaParams, circulant_image
from circiso.util import DomainError

from .strategies import theta_cases


def cs(n, *jumps):
    return ConnectionSet(n, tuple(sorted(jumps)))


def test_classify_examples():
    assert classify_pair(cs(32, 1, 2, 15), cs(32, 2, 7, 9)) == Type2(2, 4, True, FORWARD)
    assert classify_pair(cs(32, 1, 4, 15), cs(32, 4, 7, 9)) == Type1(7)
    assert classify_pair(cs(32, 1, 2, 15), cs(32, 1, 2, 15)) == Identical()
    assert classify_pair(cs(32, 2, 3, 13), cs(32, 2, 5, 11)) == Type2(2, 4, True, FORWARD)
    assert classify_pair(cs(32, 1, 2, 3), cs(32, 1, 2, 15)) == NotIsomorphicByTheseMethods()
    assert classify_pair(cs(32, 1, 2, 3), cs(32, 1, 2)) == NotIsomorphicByTheseMethods()
    with pytest.raises(DomainError):
        classify_pair(cs(32, 1, 2, 15), cs(16, 1, 2, 7))


def test_classify_labels_and_dumps():
    verdict = classify_pair(cs(32, 1, 2, 15), cs(32, 2, 7, 9))
    assert verdict.label == "T2"
    assert verdict.dumps() == "Type2 m=2 t=4"
    assert classify_pair(cs(32, 1, 4, 15), cs(32, 4, 7, 9)).dumps() == "Type1 x=7"
    assert Identical().label == ""
    assert not NotIsomorphicByTheseMethods().isomorphic
    for v in [Identical(), Type1(7), Type2(2, 4, True, BACKWARD), NotIsomorphicByTheseMethods()]:
        assert classification_from_dict(v.to_dict()) == v


def test_classify_type1_ignores_size_bound():
    assert classify_pair(cs(8, 1), cs(8, 3)) == Type1(3)


def test_classify_symmetric():
    pairs = [
        (cs(32, 1, 2, 15), cs(32, 2, 7, 9)),
        (cs(32, 1, 4, 15), cs(32, 4, 7, 9)),
        (cs(32, 2, 3, 13), cs(32, 2, 5, 11)),
        (cs(32, 1, 2, 3), cs(32, 1, 2, 15)),
    ]
    for a, b in pairs:
        assert classify_pair(a, b).tag == classify_pair(b, a).tag


def test_classify_reverse_pair_has_forward_witness():
    # theta_{n,m,n/m-t} inverts theta_{n,m,t}
    verdict = classify_pair(cs(32, 2, 7, 9), cs(32, 1, 2, 15))
    assert verdict == Type2(2, 4, True, FORWARD)
    assert witness_permutation(cs(32, 2, 7, 9), cs(32, 1, 2, 15), verdict).verified
    backward = Type2(2, 4, True, BACKWARD)
    assert witness_permutation(cs(32, 1, 2, 15), cs(32, 2, 7, 9), backward).verified


@settings(max_examples=100)
@given(theta_cases(min_size=3), st.data())
def test_classify_soundness(case, data):
    n, m, t, a = case
    x = data.draw(st.sampled_from(units(n).units))
    candidates = [multiply(a, x)]
    image = circulant_image(ThetaParams(n, m, t), a)
    # theta verdicts need a jump divisible by m
    if image is not None and any(r % m == 0 for r in a):
        candidates.append(image)
    for b in candidates:
        verdict = classify_pair(a, b)
        assert verdict.isomorphic
        assert classify_pair(b, a).tag == verdict.tag
        witness = witness_permutation(a, b, verdict)
        assert witness is not None and witness.verified
        assert cospectral(a, b)
        if isinstance(verdict, Type1):
            assert multiply(a, verdict.witness_x) == b
        if isinstance(verdict, Type2):
            assert all(multiply(a, u) != b for u in units(n))


def test_type2_partners_examples():
    assert type2_partners(cs(32, 1, 2, 15)) == [Type2Partner(2, 4, cs(32, 2, 7, 9))]
    assert type2_partners(cs(32, 1, 4, 15)) == []
    assert type2_partners(cs(32, 1, 3, 5)) == []
    with pytest.raises(DomainError):
        type2_partners(cs(32, 1, 2))


def test_extend_pair_examples():
    a, b = cs(32, 1, 2, 15), cs(32, 2, 7, 9)
    ea, eb = extend_pair(a, b, 2, {4})
    assert (ea, eb) == (cs(32, 1, 2, 4, 15), cs(32, 2, 4, 7, 9))
    assert isinstance(classify_pair(ea, eb), Type2)
    assert extend_pair(a, b, 2, set()) == (a, b)
    ea, eb = extend_pair(cs(32, 1, 14, 15), cs(32, 7, 9, 14), 2, [2])
    assert (ea, eb) == (cs(32, 1, 2, 14, 15), cs(32, 2, 7, 9, 14))
    assert isinstance(classify_pair(ea, eb), Type1)


def test_extend_pair_errors():
    a, b = cs(32, 1, 2, 15), cs(32, 2, 7, 9)
    for extension in [{3}, {2}, {18}, {4, 5}]:
        with pytest.raises(DomainError):
            extend_pair(a, b, 2, extension)
    with pytest.raises(DomainError):
        extend_pair(cs(32, 1, 2, 3), cs(32, 1, 2, 15), 2, {4})
    # theta_{32,2,8} relates this pair, but so does the unit 17
    a, b = cs(32, 1, 2, 3), cs(32, 2, 13, 15)
    assert circulant_image(ThetaParams(32, 2, 8), a) == b
    assert isinstance(classify_pair(a, b), Type1)
    with pytest.raises(DomainError):
        extend_pair(a, b, 2, {4})


def test_scale_pair():
    a, b = cs(32, 1, 2, 15), cs(32, 2, 7, 9)
    sa, sb, verdict = scale_pair(a, b, 2)
    assert (sa, sb) == (cs(64, 2, 4, 30), cs(64, 4, 14, 18))
    assert verdict == Type2(2, 4, True, FORWARD)
    lifted = scale_permutation(theta_permutation(ThetaParams(32, 2, 4)), 2)
    assert verify_permutation(lifted, realize(sa), realize(sb)).verified
    lifted = scale_permutation(theta_permutation(ThetaParams(32, 2, 4)), 3)
    assert verify_permutation(lifted, realize(cs(96, 3, 6, 45)), realize(cs(96, 6, 21, 27))).verified
    with pytest.raises(DomainError):
        scale_pair(a, b, 0)


def test_core_extensions_counts():
    rows = core_extensions(32, 2, cs(32, 1, 15), 4)
    assert len(rows) == 255
    assert sum(row.label == "T2" for row in rows) == 192
    assert sum(row.label == "T1" for row in rows) == 63
    assert rows[0].r == cs(32, 1, 2, 15) and rows[0].s == cs(32, 2, 7, 9)
    assert cs(32, 2, 7, 9) not in rows[0].orbit
    rows = core_extensions(32, 2, cs(32, 3, 13), 4)
    assert sum(row.label == "T2" for row in rows) == 192


def test_core_extensions_reproduce_tables():
    errata_rows = {"a:135", "a:164", "a:165", "a:166", "b:135", "b:164", "b:165", "b:166"}
    for core, name in [(cs(32, 1, 15), "core_1_15.tsv"), (cs(32, 3, 13), "core_3_13.tsv")]:
        rows = core_extensions(32, 2, core, 4)
        fixture = parse_fixture(FIXTURE_DIR / name)
        assert len(rows) == len(fixture)
        for row, pair in zip(rows, fixture):
            assert row.r == pair.r
            assert row.label == pair.expected_label
            if pair.source not in errata_rows:
                assert row.s == pair.s


def test_core_extensions_errors():
    with pytest.raises(DomainError):
        core_extensions(32, 2, cs(32, 1, 2), 4)
    with pytest.raises(DomainError):
        core_extensions(32, 2, cs(16, 1, 7), 4)
    with pytest.raises(DomainError):
        core_extensions(32, 2, cs(32, 1, 15), 16)
