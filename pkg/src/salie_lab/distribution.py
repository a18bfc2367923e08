"""Square roots of shifted primes: the multiset R_{a,b}(P), box counts and discrepancy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyMultiset, EmptySpectrum, NoPrimes, SharedFactor
from .field import FieldCtx, sqrt_mod
from .primes import PrimeTables, _tables_for
from .summation import fsum_real

ET_CONSTANT = 3.0


@dataclass(frozen=True)
class RootMultiset:
    roots: np.ndarray  # sorted, with multiplicity
    source: tuple  # (q, a, b, P)

    @property
    def total(self) -> int:
        return len(self.roots)

    @property
    def q(self) -> int:
        return self.source[0]


def sqrt_shifted_primes(ctx: FieldCtx, a: int, b: int, P: float,
                        tables: PrimeTables | None = None) -> RootMultiset:
    """All x in F_q with x^2 = a p + b (mod q) for primes p <= P, sorted with multiplicity."""
    q = ctx.q
    if a % q == 0:
        raise SharedFactor("gcd(a, q) must be 1")
    P = math.floor(P)
    if P < 2:
        return RootMultiset(np.zeros(0, dtype=np.int64), (q, a, b, P))
    primes = _tables_for(P, tables).primes
    primes = primes[primes <= P]
    t = (a % q * (primes % q) + b % q) % q
    if ctx.has_tables:
        r = ctx.sqrt_table[t]
        zero = t == 0
        pos = (r > 0) & ~zero
        roots = np.concatenate([np.zeros(np.count_nonzero(zero), dtype=np.int64),
                                r[pos], q - r[pos]])
    else:
        roots = np.array([x for v in t for x in sqrt_mod(ctx, int(v))], dtype=np.int64)
    roots.sort()
    return RootMultiset(roots, (q, a, b, P))


def count_interval(R: RootMultiset, H: float) -> int:
    """Number of roots (with multiplicity) in [0, H)."""
    if not 0 <= H <= R.q:
        raise ValueError("need 0 <= H <= q")
    return int(np.searchsorted(R.roots, math.ceil(H), side="left"))


def discrepancy_direct(R: RootMultiset) -> float:
    """max over integer H in [0, q] of |N(H) - H * total / q|."""
    if R.total == 0:
        raise EmptyMultiset("no roots")
    q, total = R.q, R.total
    values, counts = np.unique(R.roots, return_counts=True)
    before = np.cumsum(counts) - counts
    through = before + counts
    # extremes sit just before a jump (H = x) or just after it (H = x + 1)
    d1 = np.abs(before - values * total / q)
    d2 = np.abs(through - (values + 1) * total / q)
    return float(max(d1.max(), d2.max()))


def erdos_turan_bound(s_values, total: int, H_max: int) -> float:
    """3 (total / (H_max + 1) + sum_{lam <= H_max} |S_lam| / lam).

    ``s_values[k]`` holds S_{a,b,lam}(P) for lam = k + 1.
    """
    if H_max < 1:
        raise EmptySpectrum("H_max must be >= 1")
    s = np.abs(np.asarray(s_values, dtype=np.complex128)[:H_max])
    if len(s) < H_max:
        raise ValueError("need one exponential sum per frequency 1..H_max")
    spectral = fsum_real(s / np.arange(1, H_max + 1))
    return ET_CONSTANT * (total / (H_max + 1) + spectral)


def karatsuba_ratio(R: RootMultiset, tables: PrimeTables | None = None) -> float:
    """#R_{a,b}(P) / pi(P)."""
    P = R.source[3]
    if P < 2:
        raise NoPrimes("pi(P) = 0")
    if tables is not None and tables.limit < P:
        raise ValueError("tables do not reach P")
    n_primes = _tables_for(P, tables).pi(P)
    if n_primes == 0:
        raise NoPrimes("pi(P) = 0")
    return R.total / n_primes
