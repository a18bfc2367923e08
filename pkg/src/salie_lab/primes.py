"""Prime-side machinery: von Mangoldt/Moebius tables, sums over primes, Vaughan and
Heath-Brown decompositions, and the piecewise bounds for prime sums.

Arrays indexed by n carry a dummy entry at index 0, so ``lam[n]`` is Lambda(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bilinear import Calibration
from .char_sums import ShiftParams, f_values
from .errors import DepthTooLarge, HypothesisFail, LimitTooLarge
from .field import FieldCtx
from .summation import fsum_complex, fsum_real

MAX_LIMIT = 10**9
DENSE_LIMIT = 10**7
SEGMENT = 1 << 22


def _small_primes(limit: int) -> np.ndarray:
    """Primes <= limit by a plain Eratosthenes sieve."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return np.flatnonzero(flags).astype(np.int64)


def segment_tables(lo: int, hi: int, base: np.ndarray):
    """Lambda(n), mu(n) and a prime mask for lo <= n < hi.

    ``base`` must contain every prime p with p*p < hi.
    """
    n = np.arange(lo, hi, dtype=np.int64)
    rem = n.copy()
    mu = np.ones(hi - lo, dtype=np.int8)
    lam = np.zeros(hi - lo)
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        logp = math.log(p)
        start = -(-lo // p) * p
        mu[start - lo::p] *= -1
        rem[start - lo::p] //= p
        pk = p * p
        while pk < hi:
            start = -(-lo // pk) * pk
            mu[start - lo::pk] = 0
            rem[start - lo::pk] //= p
            pk *= p
        pk = p
        while pk < hi:
            if pk >= lo:
                lam[pk - lo] = logp
            pk *= p
    # what is left of n after removing small primes is 1 or one large prime
    large = rem > 1
    mu[large] *= -1
    is_prime = (rem == n) & (n > 1)
    is_prime |= np.isin(n, base[base * base < hi])
    lam[(rem == n) & (n > 1)] = np.log(n[(rem == n) & (n > 1)])
    return lam, mu, is_prime


@dataclass(frozen=True)
class PrimeTables:
    """Sieved tables up to ``limit``; dense arrays exist only up to DENSE_LIMIT."""

    limit: int
    primes: np.ndarray
    lambda_vals: np.ndarray | None = field(repr=False, default=None)
    moebius_vals: np.ndarray | None = field(repr=False, default=None)

    @property
    def pi_P(self) -> int:
        return len(self.primes)

    def pi(self, x: float) -> int:
        return int(np.searchsorted(self.primes, math.floor(x), side="right"))

    def segments(self, block: int = SEGMENT):
        """Yield (lo, Lambda, mu) for consecutive blocks of [1, limit]."""
        base = _small_primes(math.isqrt(self.limit) + 1)
        for lo in range(1, self.limit + 1, block):
            hi = min(lo + block, self.limit + 1)
            lam, mu, _ = segment_tables(lo, hi, base)
            yield lo, lam, mu


def sieve(P: int) -> PrimeTables:
    P = int(P)
    if P < 2:
        raise ValueError("sieve limit must be >= 2")
    if P > MAX_LIMIT:
        raise LimitTooLarge(f"limit {P} exceeds {MAX_LIMIT}")
    base = _small_primes(math.isqrt(P) + 1)
    if P <= DENSE_LIMIT:
        lam, mu, is_prime = segment_tables(0, P + 1, base)
        lam[0], mu[0], is_prime[0] = 0.0, 0, False
        for arr in (lam, mu):
            arr.setflags(write=False)
        return PrimeTables(P, np.flatnonzero(is_prime).astype(np.int64), lam, mu)
    chunks = []
    for lo in range(2, P + 1, SEGMENT):
        hi = min(lo + SEGMENT, P + 1)
        _, _, is_prime = segment_tables(lo, hi, base)
        chunks.append(np.flatnonzero(is_prime) + lo)
    return PrimeTables(P, np.concatenate(chunks).astype(np.int64))


@lru_cache(maxsize=8)
def cached_sieve(P: int) -> PrimeTables:
    return sieve(P)


def _tables_for(P: int, tables: PrimeTables | None) -> PrimeTables:
    if tables is not None and tables.limit >= P:
        return tables
    return cached_sieve(P)


def s_prime_sum(ctx: FieldCtx, s: ShiftParams, P: float,
                tables: PrimeTables | None = None) -> complex:
    """S_{a,b,lam}(P) = sum over primes p <= P of f(p)."""
    P = math.floor(P)
    if P < 2:
        return 0j
    primes = _tables_for(P, tables).primes
    primes = primes[primes <= P]
    return complex(fsum_real(f_values(ctx, s, primes)))


def s_lambda_sum(ctx: FieldCtx, s: ShiftParams, P: float,
                 tables: PrimeTables | None = None) -> complex:
    """sum_{n <= P} Lambda(n) f(n)."""
    P = math.floor(P)
    if P < 2:
        return 0j
    t = _tables_for(P, tables)
    if t.lambda_vals is not None:
        lam = t.lambda_vals[:P + 1]
        n = np.flatnonzero(lam)
        return complex(fsum_real(lam[n] * f_values(ctx, s, n)))
    parts = []
    for lo, lam, _ in t.segments():
        keep = np.flatnonzero(lam[: max(0, P + 1 - lo)])
        parts.append(fsum_real(lam[keep] * f_values(ctx, s, keep + lo)))
    return complex(fsum_real(parts))


# ---------------------------------------------------------------------------
# Vaughan


def _dirichlet(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Dirichlet convolution of two arrays indexed 0..P (index 0 ignored)."""
    P = len(a) - 1
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros(P + 1)
    for d in np.flatnonzero(a[1:]) + 1:
        k = P // d
        out[d::d][:k] += a[d] * b[1:k + 1]
    return out


def _divisor_sum(a: np.ndarray) -> np.ndarray:
    """n -> sum_{d | n} a[d]."""
    P = len(a) - 1
    out = np.zeros(P + 1)
    for d in np.flatnonzero(a[1:]) + 1:
        out[d::d] += a[d]
    return out


def _check_uv(P: float, U: float, V: float) -> None:
    if min(U, V) <= 1:
        raise HypothesisFail("need U, V > 1")
    if U * V > P:
        raise HypothesisFail("need U V <= P")


@dataclass(frozen=True)
class VaughanTerms:
    """The four majorant terms of the Vaughan lemma, and the exact parts they bound.

    ``parts`` are the four pieces of the exact identity applied to f; they sum
    to sum_{n <= P} Lambda(n) f(n).  By construction |parts[0]| = sigma1,
    |parts[1]| <= sigma3, |parts[2]| <= sigma2 and parts[3] = -sigma4.
    """

    sigma1: float
    sigma2: float
    sigma3: float
    sigma4: complex
    params: tuple
    parts: tuple = ()

    @property
    def majorant(self) -> float:
        return self.sigma1 + self.sigma2 + self.sigma3 + abs(self.sigma4)

    @property
    def recombined(self) -> complex:
        return fsum_complex(np.array(self.parts, dtype=np.complex128))


def _truncated_moebius(mu: np.ndarray, V: float) -> np.ndarray:
    out = np.zeros(len(mu))
    k = min(math.floor(V), len(mu) - 1)
    out[1:k + 1] = mu[1:k + 1]
    return out


def vaughan_decompose(ctx: FieldCtx, s: ShiftParams, P: float, U: float, V: float,
                      tables: PrimeTables | None = None) -> VaughanTerms:
    """Vaughan terms for the shifted-root kernel f."""
    _check_uv(P, U, V)
    F = f_values(ctx, s, np.arange(math.floor(P) + 1))
    return vaughan_terms(F, P, U, V, tables)


def vaughan_terms(F: np.ndarray, P: float, U: float, V: float,
                  tables: PrimeTables | None = None) -> VaughanTerms:
    """Vaughan terms for an arbitrary real function given as F[0..P]."""
    _check_uv(P, U, V)
    P = math.floor(P)
    t = _tables_for(P, tables)
    if t.lambda_vals is None:
        raise LimitTooLarge("Vaughan decomposition needs dense tables")
    lam = np.array(t.lambda_vals[:P + 1])
    mu = t.moebius_vals[:P + 1].astype(np.float64)
    F = np.array(F[:P + 1], dtype=np.float64)
    F[0] = 0.0
    Ui, Vi, UVi = math.floor(U), math.floor(V), math.floor(U * V)

    a1 = fsum_real(lam[1:Ui + 1] * F[1:Ui + 1])
    sigma1 = abs(a1)

    log_uv, log_p = math.log(U * V), math.log(P)
    col_sums = np.array([fsum_real(F[m::m]) for m in range(1, UVi + 1)])
    sigma2 = fsum_real(np.abs(col_sums)) * log_uv

    sup3 = []
    for m in range(1, Vi + 1):
        col = F[m::m]
        # sum_{w < n <= P/m} = total - prefix(w), w = 0..P//m
        prefix = np.concatenate([[0.0], np.cumsum(col)])
        sup3.append(float(np.abs(prefix[-1] - prefix).max()))
    sigma3 = fsum_real(sup3) * log_p

    mu_v = _truncated_moebius(mu, V)
    c = _divisor_sum(mu_v)
    rows4 = []
    for m in np.flatnonzero(lam[Ui + 1:P // (Vi + 1) + 1]) + Ui + 1:
        n = np.arange(Vi + 1, P // m + 1)
        rows4.append(lam[m] * fsum_real(c[n] * F[m * n]))
    sigma4 = fsum_real(rows4)

    # exact identity pieces
    logs = np.log(np.maximum(np.arange(P + 1), 1))
    a2_rows = []
    for d in range(1, Vi + 1):
        if mu_v[d]:
            k = np.arange(1, P // d + 1)
            a2_rows.append(mu_v[d] * fsum_real(logs[k] * F[d * k]))
    a2 = fsum_real(a2_rows)
    lam_u = np.zeros(P + 1)
    lam_u[1:Ui + 1] = lam[1:Ui + 1]
    coef3 = _dirichlet(mu_v, lam_u)
    a3 = -fsum_real(coef3[1:UVi + 1] * col_sums)
    return VaughanTerms(sigma1, sigma2, sigma3, complex(sigma4), (P, U, V),
                        (complex(a1), complex(a2), complex(a3), complex(-sigma4)))


def vaughan_parts(P: float, U: float, V: float, tables: PrimeTables | None = None):
    """Arithmetic functions a1..a4 (arrays over 0..P) with Lambda = a1 + a2 + a3 + a4."""
    _check_uv(P, U, V)
    P = math.floor(P)
    t = _tables_for(P, tables)
    lam = np.array(t.lambda_vals[:P + 1])
    mu = t.moebius_vals[:P + 1].astype(np.float64)
    Ui = math.floor(U)
    logs = np.log(np.maximum(np.arange(P + 1), 1))
    logs[0] = 0.0

    a1 = np.zeros(P + 1)
    a1[1:Ui + 1] = lam[1:Ui + 1]
    mu_v = _truncated_moebius(mu, V)
    a2 = _dirichlet(mu_v, logs)
    a3 = -_divisor_sum(_dirichlet(mu_v, a1))
    lam_big = lam.copy()
    lam_big[:Ui + 1] = 0.0
    c = _divisor_sum(mu_v)
    c[:2] = 0.0
    a4 = -_dirichlet(lam_big, c)
    return lam, (a1, a2, a3, a4)


def vaughan_identity_check(P: float, U: float, V: float,
                           tables: PrimeTables | None = None) -> float:
    """max_n |Lambda(n) - (a1 + a2 + a3 + a4)(n)| over 1 <= n <= P."""
    lam, parts = vaughan_parts(P, U, V, tables)
    total = parts[0] + parts[1] + parts[2] + parts[3]
    return float(np.abs(lam[1:] - total[1:]).max())


# ---------------------------------------------------------------------------
# Heath-Brown


def _root_floor(P: int, J: int) -> int:
    """Largest integer z with z**J <= P."""
    z = int(round(P ** (1.0 / J)))
    while z ** J > P:
        z -= 1
    while (z + 1) ** J <= P:
        z += 1
    return z


def heath_brown_parts(P: int, J: int, tables: PrimeTables | None = None):
    """Lambda and the J signed convolution terms of the Heath-Brown identity on 0..P."""
    if not 1 <= J <= 4:
        raise DepthTooLarge(f"depth J={J} outside 1..4")
    P = int(P)
    if P > 10**6:
        raise LimitTooLarge("Heath-Brown check limited to P <= 10^6")
    t = _tables_for(P, tables)
    lam = np.array(t.lambda_vals[:P + 1])
    mu_z = _truncated_moebius(t.moebius_vals[:P + 1].astype(np.float64), _root_floor(P, J))
    log_conv = np.log(np.maximum(np.arange(P + 1), 1))
    log_conv[0] = 0.0
    mu_pow = mu_z
    terms = []
    for j in range(1, J + 1):
        if j > 1:
            mu_pow = _dirichlet(mu_pow, mu_z)
            log_conv = _divisor_sum(log_conv)
        sign = -((-1) ** j) * math.comb(J, j)
        terms.append(sign * _dirichlet(mu_pow, log_conv))
    return lam, terms


def heath_brown_decompose(P: int, J: int, tables: PrimeTables | None = None) -> float:
    """max_n |Lambda(n) - HB_J(n)| over 1 <= n <= P."""
    lam, terms = heath_brown_parts(P, J, tables)
    total = np.sum(terms, axis=0)
    return float(np.abs(lam[1:] - total[1:]).max())


# ---------------------------------------------------------------------------
# bounds for prime sums

_REL = 1e-12


def _le_power(P: float, q: int, num: int, den: int) -> bool:
    """P <= q**(num/den), exact for integer P, otherwise with a 1e-12 log tolerance."""
    if isinstance(P, (int, np.integer)):
        return int(P) ** den <= int(q) ** num
    return math.log(P) <= (num / den) * math.log(q) * (1 + _REL)


def _trivial(P: float, tables: PrimeTables | None) -> float:
    Pi = math.floor(P)
    if Pi < 2:
        return 0.0
    return 2.0 * _tables_for(Pi, tables).pi(Pi)


def bound_s_prime(P: float, q: int, cal: Calibration,
                  tables: PrimeTables | None = None) -> tuple[float, str]:
    """Combined piecewise bound for |S_{a,b,lam}(P)| and its regime label."""
    if P < 2:
        raise ValueError("P must be >= 2")
    cal_f = cal.factor(P)
    if _le_power(P, q, 3, 4):
        return _trivial(P, tables), "trivial"
    if _le_power(P, q, 3, 2):
        return P ** (7 / 9) * q ** (1 / 6) * cal_f, "P^(7/9) q^(1/6)"
    if _le_power(P, q, 2, 1):
        return P ** (5 / 6) * q ** (1 / 12) * cal_f, "P^(5/6) q^(1/12)"
    return P * q ** -0.25 * cal_f, "P q^(-1/4)"


def bound_s_prime_vaughan(P: float, q: int, cal: Calibration,
                          tables: PrimeTables | None = None) -> tuple[float, str]:
    """The five-regime bound obtained from the Vaughan identity alone."""
    if P < 2:
        raise ValueError("P must be >= 2")
    cal_f = cal.factor(P)
    if _le_power(P, q, 9, 10):
        return _trivial(P, tables), "trivial"
    if _le_power(P, q, 9, 8):
        return P ** (13 / 18) * q ** 0.25 * cal_f, "P^(13/18) q^(1/4)"
    if _le_power(P, q, 5, 4):
        return P ** (5 / 6) * q ** (1 / 8) * cal_f, "P^(5/6) q^(1/8)"
    if _le_power(P, q, 3, 2):
        return P ** (2 / 3) * q ** (1 / 3) * cal_f, "P^(2/3) q^(1/3)"
    if _le_power(P, q, 2, 1):
        return P ** (5 / 6) * q ** (1 / 12) * cal_f, "P^(5/6) q^(1/12)"
    return P * q ** -0.25 * cal_f, "P q^(-1/4)"
