import math

import pytest
from hypothesis import given, strategies as st

from circiso.modring import check_modulus, check_order, reflexive_reduce, units, valid_type2_moduli
from circiso.util import DomainError, trial_divisors


def euler_phi(n):
    res, rest, p = n, n, 2
    while p * p <= rest:
        if rest % p == 0:
            res -= res // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        res -= res // rest
    return res


def test_reflexive_reduce_examples():
    assert reflexive_reduce(32, [9, 2, 23, 25, 30, 7]) == (2, 7, 9)
    assert reflexive_reduce(32, [16]) == (16,)
    assert reflexive_reduce(27, [26, 24, 19]) == (1, 3, 8)


def test_reflexive_reduce_keeps_zero():
    assert reflexive_reduce(8, [8, 3, -3]) == (0, 3)


@given(st.integers(min_value=3, max_value=200), st.lists(st.integers(min_value=-1000, max_value=1000)))
def test_reflexive_reduce_idempotent(n, values):
    once = reflexive_reduce(n, values)
    assert reflexive_reduce(n, once) == once
    assert all(0 <= r <= n // 2 for r in once)


@given(
    st.integers(min_value=3, max_value=200),
    st.integers(min_value=-1000, max_value=1000),
    st.integers(min_value=-5, max_value=5),
)
def test_reflexive_reduce_equivalences(n, v, k):
    assert reflexive_reduce(n, [v]) == reflexive_reduce(n, [n - v]) == reflexive_reduce(n, [v + k * n])


def test_units_examples():
    assert units(32).units == tuple(range(1, 32, 2))
    assert len(units(27)) == 18
    assert units(24).units == (1, 5, 7, 11, 13, 17, 19, 23)
    assert 7 in units(32)
    assert 2 not in units(32)
    assert units(32).reflexive_representatives() == (1, 3, 5, 7, 9, 11, 13, 15)


@given(st.integers(min_value=3, max_value=500))
def test_units_complete(n):
    group = units(n)
    assert len(group) == euler_phi(n)
    assert list(group) == sorted(set(group))
    assert all(math.gcd(x, n) == 1 for x in group)


def test_valid_type2_moduli_examples():
    assert valid_type2_moduli(32, [1, 2, 15]) == [2]
    assert valid_type2_moduli(32, [1, 3, 15]) == []
    assert valid_type2_moduli(27, [1, 3, 8, 10]) == [3]
    assert valid_type2_moduli(64, [4]) == [2, 4]
    assert valid_type2_moduli(64, [2]) == [2]


@given(
    st.integers(min_value=3, max_value=300),
    st.lists(st.integers(min_value=1, max_value=150), min_size=1),
)
def test_valid_type2_moduli_divide(n, jumps):
    for m in valid_type2_moduli(n, jumps):
        assert m in trial_divisors(n)
        assert n % m**3 == 0
        assert any(math.gcd(n, r) % m == 0 for r in jumps)


def test_check_order():
    assert check_order(3) == 3
    for bad in [2, 0, -5, 2**21, True, 3.0]:
        with pytest.raises(DomainError):
            check_order(bad)


def test_check_modulus_ignores_max_order():
    assert check_modulus(2**21) == 2**21
    for bad in [2, 0, True, 3.0]:
        with pytest.raises(DomainError):
            check_modulus(bad)
