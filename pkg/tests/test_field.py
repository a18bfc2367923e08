import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from salie_lab.errors import EvenModulus, ModulusTooLarge, NotPrime, ZeroInverse
from salie_lab.field import (
    TABLE_THRESHOLD,
    eq_phase,
    euler_criterion,
    inv,
    is_prime,
    legendre,
    make_field,
    sqrt_mod,
    tonelli_shanks,
)

from .conftest import SMALL_PRIMES


def test_make_field_eps():
    assert make_field(5).eps_q == 1
    assert make_field(7).eps_q == 1j


@pytest.mark.parametrize("q, exc", [(9, NotPrime), (1, NotPrime), (8, EvenModulus),
                                    ((1 << 62) + 1, ModulusTooLarge)])
def test_make_field_errors(q, exc):
    with pytest.raises(exc):
        make_field(q)


def test_large_prime_accepted():
    ctx = make_field(2**61 - 1)
    assert not ctx.has_tables
    assert ctx.sqrt_table is None


def test_is_prime_matches_trial_division():
    trial = [n for n in range(2, 5000) if all(n % d for d in range(2, math.isqrt(n) + 1))]
    assert [n for n in range(5000) if is_prime(n)] == trial
    # strong pseudoprimes to several bases
    assert not is_prime(3215031751)
    assert not is_prime(3825123056546413051)


def test_legendre_examples():
    ctx = make_field(7)
    assert legendre(ctx, 0) == 0
    assert legendre(ctx, 2) == 1
    assert legendre(ctx, 3) == -1


@pytest.mark.parametrize("q", SMALL_PRIMES[:40])
def test_legendre_euler_reciprocity_agree(q):
    ctx = make_field(q)
    squares = {x * x % q for x in range(1, q)}
    for t in range(q):
        expected = 0 if t == 0 else (1 if t in squares else -1)
        assert legendre(ctx, t) == euler_criterion(t, q) == expected


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**6), st.integers(1, 10**6))
def test_legendre_multiplicative(q, u, v):
    ctx = make_field(q)
    u, v = u % q, v % q
    assert legendre(ctx, u * v % q) == legendre(ctx, u) * legendre(ctx, v)


def test_inv():
    ctx = make_field(7)
    assert inv(ctx, 1) == 1
    assert inv(ctx, 3) == 5
    with pytest.raises(ZeroInverse):
        inv(ctx, 0)


def test_sqrt_mod_examples():
    ctx = make_field(7)
    assert sqrt_mod(ctx, 0) == [0]
    assert sqrt_mod(ctx, 2) == [3, 4]
    assert sqrt_mod(ctx, 3) == []


def test_sqrt_mod_exhaustive_up_to_1e4():
    # both the table path and Tonelli-Shanks against full enumeration
    for q in [p for p in range(3, 10_000) if is_prime(p)][::7] + [9973]:
        tabled, bare = make_field(q), make_field(q, use_tables=False)
        roots: dict[int, list[int]] = {}
        for x in range(q):
            roots.setdefault(x * x % q, []).append(x)
        for t in range(q):
            expected = roots.get(t, [])
            assert sqrt_mod(tabled, t) == expected
            assert sqrt_mod(bare, t) == expected
            count = len(expected)
            assert count == (1 if t == 0 else 1 + legendre(tabled, t))


@given(st.integers(1, 2**40))
def test_tonelli_shanks_large_prime(t):
    # 2^61 - 1 takes the q = 3 mod 4 shortcut; 998244353 = 1 mod 2^23 the full loop
    for mod in (2**61 - 1, 1000000009, 998244353):
        assert is_prime(mod)
        x = tonelli_shanks(t, mod)
        if euler_criterion(t, mod) == -1:
            assert x is None
        else:
            assert x * x % mod == t % mod


def test_sqrt_table_entries():
    ctx = make_field(1009)
    table = ctx.sqrt_table
    for t, x in enumerate(table):
        if x >= 0:
            assert x * x % 1009 == t


def test_eq_phase_examples():
    ctx = make_field(5)
    assert eq_phase(ctx, 0) == 1 + 0j
    w = eq_phase(ctx, 1)
    assert abs(w - complex(math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5))) < 1e-15
    with pytest.raises(ValueError):
        eq_phase(ctx, 5)


@pytest.mark.parametrize("q", [5, 101, 65537, 1000003])
def test_eq_phase_unit_and_table_agrees(q):
    tabled, bare = make_field(q), make_field(q, use_tables=False)
    for z in range(0, q, max(1, q // 500)):
        w = eq_phase(tabled, z)
        assert abs(w.real**2 + w.imag**2 - 1) <= 1e-12
        assert abs(w - eq_phase(bare, z)) <= 1e-12
        assert abs(w - cmath.exp(2j * math.pi * z / q)) <= 1e-12


@given(st.sampled_from([101, 1009, 10007]), st.integers(0, 10**9), st.integers(0, 10**9))
def test_eq_phase_additive(q, z1, z2):
    ctx = make_field(q)
    z1, z2 = z1 % q, z2 % q
    assert abs(eq_phase(ctx, z1) * eq_phase(ctx, z2) - eq_phase(ctx, (z1 + z2) % q)) <= 1e-10


def test_table_threshold_value():
    assert TABLE_THRESHOLD == 2**24
