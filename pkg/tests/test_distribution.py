import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from salie_lab import (
    ShiftParams,
    count_interval,
    discrepancy_direct,
    erdos_turan_bound,
    karatsuba_ratio,
    legendre,
    make_field,
    s_prime_sum,
    sieve,
    sqrt_shifted_primes,
)
from salie_lab.distribution import RootMultiset
from salie_lab.errors import EmptyMultiset, EmptySpectrum, NoPrimes
from salie_lab.oracle import oracle_discrepancy


@pytest.fixture
def toy():
    return sqrt_shifted_primes(make_field(11), 1, 0, 7)


def test_toy_multiset(toy):
    # squares mod 11: {1, 3, 4, 5, 9}; p = 3 -> {5, 6}, p = 5 -> {4, 7}
    assert list(toy.roots) == [4, 5, 6, 7]
    assert toy.total == 4


def test_empty_and_tally():
    ctx = make_field(11)
    assert sqrt_shifted_primes(ctx, 1, 0, 1.5).total == 0
    R = sqrt_shifted_primes(ctx, 3, 2, 500)
    primes = sieve(500).primes
    tally = sum(1 if (3 * p + 2) % 11 == 0 else 1 + legendre(ctx, (3 * int(p) + 2) % 11)
                for p in primes)
    assert R.total == tally
    assert all(any((x * x - 3 * p - 2) % 11 == 0 for p in primes) for x in R.roots)


def test_zero_residue_single_root():
    ctx = make_field(11)
    R = sqrt_shifted_primes(ctx, 1, 9, 2)  # 2 + 9 = 11 = 0
    assert list(R.roots) == [0]


def test_without_tables_matches():
    a = sqrt_shifted_primes(make_field(1009), 5, 7, 3000)
    b = sqrt_shifted_primes(make_field(1009, use_tables=False), 5, 7, 3000)
    assert np.array_equal(a.roots, b.roots)


def test_count_interval(toy):
    assert count_interval(toy, 0) == 0
    assert count_interval(toy, 11) == toy.total
    assert count_interval(toy, 6) == 2
    assert count_interval(toy, 5.5) == 2
    with pytest.raises(ValueError):
        count_interval(toy, 12)


def test_discrepancy_single_point():
    q, x0 = 101, 37
    R = RootMultiset(np.array([x0]), (q, 1, 0, 2))
    expected = max(x0 / q, 1 - (x0 + 1) / q)
    assert discrepancy_direct(R) == pytest.approx(expected)
    assert discrepancy_direct(R) == pytest.approx(oracle_discrepancy([x0], q))


def test_discrepancy_uniform():
    q = 101
    R = RootMultiset(np.arange(q), (q, 1, 0, 2))
    assert discrepancy_direct(R) <= 1


def test_discrepancy_toy_and_errors(toy):
    assert discrepancy_direct(toy) == pytest.approx(oracle_discrepancy(toy.roots, 11))
    with pytest.raises(EmptyMultiset):
        discrepancy_direct(RootMultiset(np.zeros(0, dtype=np.int64), (11, 1, 0, 1)))


@given(st.sampled_from([11, 101, 1009, 9973]), st.integers(1, 10**6), st.integers(0, 10**6),
       st.integers(2, 20_000))
def test_discrepancy_sweep_matches_scan(q, a, b, P):
    if a % q == 0:
        return
    R = sqrt_shifted_primes(make_field(q), a, b, P)
    if R.total == 0:
        return
    assert discrepancy_direct(R) == pytest.approx(oracle_discrepancy(R.roots, q), abs=1e-9)
    # roots come in +-x pairs
    counts = np.bincount(R.roots, minlength=q)
    assert np.array_equal(counts[1:], counts[1:][::-1])


def test_erdos_turan_formula():
    assert erdos_turan_bound(np.zeros(5), 100, 5) == pytest.approx(3 * 100 / 6)
    assert erdos_turan_bound([4 + 3j], 10, 1) == pytest.approx(3 * (10 / 2 + 5))
    with pytest.raises(EmptySpectrum):
        erdos_turan_bound([], 10, 0)


@pytest.mark.parametrize("q, a, b, P", [(101, 1, 1, 2000), (1009, 3, 17, 5000), (1009, 1, 0, 800)])
def test_erdos_turan_majorises(q, a, b, P):
    ctx = make_field(q)
    R = sqrt_shifted_primes(ctx, a, b, P)
    H = math.ceil(math.sqrt(q))
    spectrum = [s_prime_sum(ctx, ShiftParams.create(ctx, a, b, lam), P) for lam in range(1, H + 1)]
    bound = erdos_turan_bound(spectrum, R.total, H)
    assert discrepancy_direct(R) <= bound
    for Hbox in range(0, q + 1, 7):
        assert abs(count_interval(R, Hbox) - Hbox / q * R.total) <= bound
    # optimising H_max never does worse than H_max = 1
    best = min(erdos_turan_bound(spectrum, R.total, h) for h in range(1, H + 1))
    assert best <= erdos_turan_bound(spectrum, R.total, 1)


def test_karatsuba_ratio(toy):
    assert karatsuba_ratio(toy) == 1.0
    with pytest.raises(NoPrimes):
        karatsuba_ratio(sqrt_shifted_primes(make_field(11), 1, 0, 1))
    q = 10007
    P = math.ceil(q**0.8)
    R = sqrt_shifted_primes(make_field(q), 1, 1, P)
    assert 0.85 <= karatsuba_ratio(R, sieve(P)) <= 1.15
