import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rslab.errors import ArgumentError, ResourceError
from rslab.fields import (
    RATIONALS,
    NumberField,
    brun_titchmarsh_margin,
    kronecker,
    prime_count,
    primes_in_norm_range,
    quadratic,
    rational_primes,
)


def euler_criterion(a: int, p: int) -> int:
    """Brute Legendre symbol (a|p) for odd primes, the oracle for kronecker()."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def test_rational_primes_small():
    assert rational_primes(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_rational_range_2_10():
    ideals = primes_in_norm_range(RATIONALS, 2, 10)
    assert [q.norm for q in ideals] == [2, 3, 5, 7]
    assert all(q.f == 1 and not q.ramified for q in ideals)


def test_gaussian_range_2_10():
    # d = -1: disc = -4; 2 ramifies, p = 1 mod 4 splits, p = 3 mod 4 inert
    ideals = primes_in_norm_range(quadratic(-1), 2, 10)
    assert [(q.norm, q.ramified) for q in ideals] == [
        (2, True),
        (5, False),
        (5, False),
        (9, False),
    ]


def test_invalid_range_rejected():
    with pytest.raises(ArgumentError):
        primes_in_norm_range(RATIONALS, 10, 2)
    with pytest.raises(ArgumentError):
        primes_in_norm_range(RATIONALS, 0, 10)


def test_capacity_enforced():
    with pytest.raises(ResourceError, match="capacity"):
        primes_in_norm_range(RATIONALS, 2, 10**9)
    with pytest.raises(ResourceError):
        prime_count(RATIONALS, 2e8)


def test_bad_quadratic_fields_rejected():
    for d in (0, 1, 4, 12, -8):
        with pytest.raises(ArgumentError):
            NumberField(d)


def test_prime_count_values():
    assert prime_count(RATIONALS, 10) == 4
    assert prime_count(RATIONALS, 0) == 0
    assert prime_count(RATIONALS, 1.5) == 0
    # frozen from two independent sieves (this module's and sympy.primepi)
    assert prime_count(RATIONALS, 10**5) == 9592


def test_prime_count_matches_list_length():
    for field in (RATIONALS, quadratic(-1), quadratic(5)):
        for lo, hi in ((2, 50), (10, 500), (100, 1000)):
            n = len(primes_in_norm_range(field, lo, hi))
            assert n == prime_count(field, hi) - prime_count(field, lo - 1)


@pytest.mark.parametrize("d", [-1, -3, 5, 13, -7, 10])
def test_splitting_against_euler_criterion(d):
    field = quadratic(d)
    disc = field.discriminant
    ideals = primes_in_norm_range(field, 2, 2000)
    by_p: dict[int, list] = {}
    for q in ideals:
        by_p.setdefault(q.p, []).append(q)
    for p in (int(p) for p in rational_primes(2000)):
        if disc % p == 0:
            if p in by_p:
                assert len(by_p[p]) == 1 and by_p[p][0].ramified
            continue
        sym = euler_criterion(disc, p) if p != 2 else kronecker(disc, 2)
        if sym == 1:
            assert len(by_p[p]) == 2 and all(q.norm == p for q in by_p[p])
        else:
            group = by_p.get(p, [])
            assert all(q.norm == p * p for q in group)
            assert len(group) == (1 if p * p <= 2000 else 0)


@given(
    st.integers(min_value=-300, max_value=300),
    st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]),
)
def test_kronecker_matches_euler_criterion(a, p):
    assert kronecker(a, p) == euler_criterion(a, p)


def test_kronecker_at_two():
    # (a|2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
    assert kronecker(4, 2) == 0
    assert kronecker(7, 2) == 1
    assert kronecker(17, 2) == 1
    assert kronecker(3, 2) == -1
    assert kronecker(-3, 2) == -1  # -3 = 5 mod 8, and 2 is inert in Q(sqrt(-3))
    assert kronecker(-7, 2) == 1  # -7 = 1 mod 8


def test_brun_titchmarsh_examples():
    r = brun_titchmarsh_margin(RATIONALS, 10**6, 10**4)
    # count frozen from two independent sieves; the bound is 4*y/log(y)
    assert r["count"] == 753
    assert r["bound"] == pytest.approx(4342.9448, rel=1e-6)
    assert r["satisfied"]

    r = brun_titchmarsh_margin(RATIONALS, 100, 2)
    assert r["count"] == 1  # 101 is the only prime in (100, 102]
    assert r["bound"] == pytest.approx(8 / math.log(2), rel=1e-12)
    assert r["satisfied"]

    with pytest.raises(ArgumentError):
        brun_titchmarsh_margin(RATIONALS, 10, 20)
    with pytest.raises(ArgumentError):
        brun_titchmarsh_margin(RATIONALS, 100, 1.5)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=2, max_value=10**5),
    st.integers(min_value=2, max_value=10**5),
)
def test_brun_titchmarsh_always_satisfied(x, y):
    if y > x:
        x, y = y, x
    for field in (RATIONALS, quadratic(-1)):
        assert brun_titchmarsh_margin(field, x, y)["satisfied"]


def test_quadratic_partition():
    # for p not dividing disc, exactly one of split/inert holds; totals match
    field = quadratic(-1)
    x = 3000
    ideals = primes_in_norm_range(field, 2, x)
    brute = 0
    for p in (int(p) for p in rational_primes(x)):
        if field.discriminant % p == 0:
            brute += 1
        elif kronecker(field.discriminant, p) == 1:
            brute += 2
        elif p * p <= x:
            brute += 1
    assert len(ideals) == brute == prime_count(field, x)
