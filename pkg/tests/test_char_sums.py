import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from salie_lab import (
    ShiftParams,
    f_eval,
    f_eval_salie,
    f_values,
    kloosterman,
    legendre,
    make_field,
    salie_closed,
    salie_direct,
    u_sum,
)
from salie_lab.errors import SharedFactor, SharedFactorM
from salie_lab.oracle import oracle_f

from .conftest import SMALL_PRIMES


def _salie_descending(q, t):
    """Independent loop: z descending, Legendre symbol by Euler, phases from math."""
    re = im = 0.0
    terms = []
    for z in range(q - 1, 0, -1):
        chi = 1 if pow(z, (q - 1) // 2, q) == 1 else -1
        ang = 2 * math.pi * ((t * z + pow(z, q - 2, q)) % q) / q
        terms.append((chi * math.cos(ang), chi * math.sin(ang)))
    re = math.fsum(x for x, _ in terms)
    im = math.fsum(y for _, y in terms)
    return complex(re, im)


def test_shift_params():
    ctx = make_field(11)
    s = ShiftParams.create(ctx, 1, 1, 3)
    assert 2 * s.mu % 11 == 3
    assert s.eta == s.mu * s.mu % 11
    with pytest.raises(SharedFactor):
        ShiftParams.create(ctx, 11, 1, 1)
    with pytest.raises(SharedFactor):
        ShiftParams.create(ctx, 1, 1, 22)


def test_salie_q5_t1():
    ctx = make_field(5)
    expected = 2 * math.sqrt(5) * math.cos(4 * math.pi / 5)  # -3.6180339887...
    assert abs(salie_direct(ctx, 1) - expected) < 1e-12
    assert abs(salie_closed(ctx, 1) - expected) < 1e-12
    assert abs(expected + 3.618) < 1e-3


def test_salie_vanishes_on_nonresidues():
    ctx = make_field(7)
    for t in (3, 5, 6):
        assert legendre(ctx, t) == -1
        assert abs(salie_direct(ctx, t)) <= 1e-9
        assert abs(salie_closed(ctx, t)) == 0


def test_salie_t0_matches_reversed_loop():
    ctx = make_field(5)
    assert abs(salie_direct(ctx, 0) - _salie_descending(5, 0)) < 1e-12


def test_salie_closed_t0_raises():
    with pytest.raises(SharedFactor):
        salie_closed(make_field(5), 0)


@pytest.mark.parametrize("q", [3, 5, 7, 11, 13, 101, 103, 499, 2003])
def test_salie_closed_agrees_with_direct(q):
    ctx = make_field(q)
    for t in range(1, q):
        d = salie_direct(ctx, t)
        assert abs(d - salie_closed(ctx, t)) <= 1e-8 * math.sqrt(q)
        assert abs(d) <= 2 * math.sqrt(q) + 1e-6
    for t in range(0, q, max(1, q // 20)):
        assert abs(salie_direct(ctx, t) - _salie_descending(q, t)) <= 1e-10 * q


def test_salie_without_tables():
    ctx = make_field(103, use_tables=False)
    for t in (1, 2, 50):
        assert abs(salie_direct(ctx, t) - salie_direct(make_field(103), t)) < 1e-10


def test_kloosterman_small_cases():
    # q = 3, t = 1: e_3(2) + e_3(1) = 2 cos(2 pi / 3) = -1
    assert abs(kloosterman(make_field(3), 1) - (-1)) < 1e-12
    # q = 5, t = 1: 2 + e_5(2) + e_5(3) = 2 + 2 cos(4 pi / 5)
    k5 = kloosterman(make_field(5), 1)
    assert abs(k5 - (2 + 2 * math.cos(4 * math.pi / 5))) < 1e-12
    assert abs(k5) <= 2 * math.sqrt(5)


@pytest.mark.parametrize("q", [7, 101, 1009, 2003])
def test_kloosterman_real_and_weil(q):
    ctx = make_field(q)
    for t in range(1, q, max(1, q // 50)):
        k = kloosterman(ctx, t)
        assert abs(k.imag) <= 1e-9
        assert abs(k) <= 2 * math.sqrt(q) + 1e-6
        brute = sum(complex(math.cos(a), math.sin(a)) for a in
                    (2 * math.pi * ((t * z + pow(z, q - 2, q)) % q) / q for z in range(1, q)))
        assert abs(k - brute) < 1e-9


def test_f_eval_cases():
    ctx = make_field(11)
    s = ShiftParams.create(ctx, 1, 1, 1)
    # a n + b = 0 at n = 10: single root x = 0
    assert f_eval(ctx, s, 10) == 1
    # n = 1: 2 is a non-residue mod 11
    assert legendre(ctx, 2) == -1 and f_eval(ctx, s, 1) == 0
    # n = 2: 3 = 5^2 = 6^2
    assert abs(f_eval(ctx, s, 2) - 2 * math.cos(2 * math.pi * 5 / 11)) < 1e-12


def test_f_matches_oracle_everywhere(q101, shift101):
    vec = f_values(q101, shift101, np.arange(101))
    for n in range(101):
        o = oracle_f(q101, shift101, n)
        assert abs(f_eval(q101, shift101, n) - o) < 1e-12
        assert abs(vec[n] - o) < 1e-12


def test_f_values_without_tables(shift101):
    bare = make_field(101, use_tables=False)
    n = np.arange(300)
    assert np.allclose(f_values(bare, shift101, n), f_values(make_field(101), shift101, n), atol=1e-12)


@given(st.integers(0, 10**9), st.integers(0, 10**6))
def test_f_periodic_and_bounded(n, k):
    ctx = make_field(1009)
    s = ShiftParams.create(ctx, 17, 4, 9)
    v = f_eval(ctx, s, n)
    assert v == f_eval(ctx, s, n + 1009 * k)
    assert abs(v) <= 2


def test_f_eval_salie_examples():
    ctx = make_field(11)
    s = ShiftParams.create(ctx, 1, 1, 1)
    assert abs(f_eval_salie(ctx, s, 2, 3) - f_eval(ctx, s, 6)) < 1e-9
    # m n = 1: a m n + b = 2, a non-residue
    assert abs(f_eval_salie(ctx, s, 1, 1)) < 1e-12 and f_eval(ctx, s, 1) == 0
    with pytest.raises(SharedFactor):
        f_eval_salie(ctx, s, 2, 5)


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**6), st.integers(0, 10**6),
       st.integers(1, 10**6), st.integers(1, 1000), st.integers(1, 1000))
def test_reduction_identity(q, a, b, lam, m, n):
    ctx = make_field(q)
    if a % q == 0 or lam % q == 0 or (a * m * n + b) % q == 0:
        return
    s = ShiftParams.create(ctx, a, b, lam)
    assert abs(f_eval_salie(ctx, s, m, n) - f_eval(ctx, s, m * n)) <= 1e-9


def test_u_sum_examples(q101, shift101):
    assert abs(u_sum(q101, shift101, 2, 101)) <= 1e-8
    assert abs(u_sum(q101, shift101, 2, 1) - f_eval(q101, shift101, 2)) < 1e-15
    # frozen from the scanning oracle: sum_{n <= 50} oracle_f(2n)
    expected = sum(oracle_f(q101, shift101, 2 * n) for n in range(1, 51))
    assert abs(expected - (-0.13746272618993083)) < 1e-12
    assert abs(u_sum(q101, shift101, 2, 50) - expected) < 1e-12
    assert u_sum(q101, shift101, 2, 50.9) == u_sum(q101, shift101, 2, 50)


def test_u_sum_errors(q101, shift101):
    with pytest.raises(SharedFactorM):
        u_sum(q101, shift101, 202, 10)
    with pytest.raises(ValueError):
        u_sum(q101, shift101, 1, 0.5)


@given(st.sampled_from(SMALL_PRIMES[1:]), st.integers(1, 10**6), st.integers(0, 10**6),
       st.integers(1, 10**6), st.integers(1, 10**6), st.integers(1, 3))
def test_complete_sums_vanish(q, a, b, lam, m, k):
    ctx = make_field(q)
    if a % q == 0 or lam % q == 0 or m % q == 0:
        return
    s = ShiftParams.create(ctx, a, b, lam)
    assert abs(u_sum(ctx, s, m, k * q)) <= 1e-8 * q
