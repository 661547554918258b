from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from modrep.modp import binomial_mod_p, digits_base_p, digitwise_le, digitwise_zero_or_eq


@pytest.mark.parametrize("a,b,p,want", [
    (6, 3, 2, 0),
    (7, 3, 2, 1),
    (17, 0, 5, 1),
    (5, 9, 3, 0),
])
def test_binomial_examples(a, b, p, want):
    assert binomial_mod_p(a, b, p) == want


def test_binomial_against_exact_spread():
    for p in (2, 3, 5, 7):
        for a in range(0, 120):
            for b in range(0, a + 1):
                assert binomial_mod_p(a, b, p) == comb(a, b) % p


def test_digits():
    assert digits_base_p(0, 3) == []
    assert digits_base_p(7, 2) == [1, 1, 1]
    assert digits_base_p(6, 3) == [0, 2]


@pytest.mark.parametrize("a,b,p,want", [
    (1, 6, 3, False),
    (0, 17, 5, True),
    (2, 6, 3, False),
    (3, 6, 3, True),
])
def test_digitwise_le(a, b, p, want):
    assert digitwise_le(a, b, p) is want


@pytest.mark.parametrize("a,b,p,want", [
    (2, 7, 2, True),
    (1, 6, 3, False),
    (3, 7, 2, True),
    (2, 5, 3, True),
])
def test_digitwise_zero_or_eq(a, b, p, want):
    assert digitwise_zero_or_eq(a, b, p) is want


@given(st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=500, deadline=None)
def test_le_iff_nonzero_binomial(a, b, p):
    # Kummer/Lucas: a is digitwise below b exactly when C(b, a) is nonzero mod p
    assert digitwise_le(a, b, p) == (binomial_mod_p(b, a, p) != 0)


@given(st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=500, deadline=None)
def test_zero_or_eq_implies_le(a, b, p):
    if digitwise_zero_or_eq(a, b, p):
        assert digitwise_le(a, b, p)
