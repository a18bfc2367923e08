"""Brute-force references.

Nothing here touches the sum kernels: square roots are found by scanning all of
F_q, phases come straight from ``cmath.exp`` and loops are written out.  Only
desk-scale inputs are accepted.
"""

from __future__ import annotations

import cmath
import math

from .errors import OracleTooLarge
from .field import FieldCtx

ORACLE_MAX_Q = 10**6
ORACLE_MAX_TERMS = 10**7


def oracle_f(ctx: FieldCtx, s, n: int) -> complex:
    """sum over x in F_q with x^2 = a n + b of e_q(lam x), by scanning every x."""
    q = ctx.q
    if q > ORACLE_MAX_Q:
        raise OracleTooLarge(f"q={q} too large for the scanning oracle")
    target = (s.a * n + s.b) % q
    total = 0j
    for x in range(q):
        if x * x % q == target:
            total += cmath.exp(2j * math.pi * (s.lam * x % q) / q)
    return total


class _Memo:
    """oracle_f values memoised by residue of a n + b."""

    def __init__(self, ctx, s):
        self.ctx, self.s, self.cache = ctx, s, {}

    def __call__(self, n: int) -> complex:
        key = n % self.ctx.q
        if key not in self.cache:
            self.cache[key] = oracle_f(self.ctx, self.s, key)
        return self.cache[key]


def oracle_bilinear(ctx: FieldCtx, s, alpha, beta, M: float, N: float,
                    row_lengths=None) -> complex:
    """sum_{m <= M} sum_{n <= N} alpha_m beta_n f(mn) as a literal double loop.

    With ``row_lengths`` the inner loop for row m stops at row_lengths[m-1]
    (beta = 1 gives the Type-I sum V).  ``alpha``/``beta`` are 1-indexed
    sequences given as 0-based Python sequences (or WeightSeq).
    """
    M, N = math.floor(M), math.floor(N)
    if M * N > ORACLE_MAX_TERMS:
        raise OracleTooLarge("M*N exceeds 10^7")
    a = getattr(alpha, "values", alpha)
    b = getattr(beta, "values", beta)
    f = _Memo(ctx, s)
    total = 0j
    for m in range(1, M + 1):
        n_stop = N if row_lengths is None else math.floor(row_lengths[m - 1])
        for n in range(1, n_stop + 1):
            total += complex(a[m - 1]) * complex(b[n - 1]) * f(m * n)
    return total


def oracle_hyperbolic(ctx: FieldCtx, s, alpha, beta, P: float, U: float, V: float) -> complex:
    """T over mn <= P, m >= U, n >= V, enumerated by the product k = mn ascending."""
    P = math.floor(P)
    if P > ORACLE_MAX_TERMS:
        raise OracleTooLarge("P exceeds 10^7")
    a = getattr(alpha, "values", alpha)
    b = getattr(beta, "values", beta)
    f = _Memo(ctx, s)
    total = 0j
    for k in range(1, P + 1):
        fk = None
        for m in range(1, math.isqrt(k) + 1):
            if k % m:
                continue
            for mm, nn in {(m, k // m), (k // m, m)}:
                if mm >= U and nn >= V:
                    if fk is None:
                        fk = f(k)
                    total += complex(a[mm - 1]) * complex(b[nn - 1]) * fk
    return total


def oracle_lambda(n: int) -> float:
    """von Mangoldt function by trial division."""
    if n > 10**8:
        raise OracleTooLarge("n > 10^8")
    if n < 2:
        return 0.0
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return math.log(p) if n == 1 else 0.0
    return math.log(n)


def oracle_moebius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def oracle_discrepancy(roots, q: int) -> float:
    """max over every integer H in [0, q] of |#{x < H} - H total / q|, by an O(q) scan."""
    counts = [0] * q
    for x in roots:
        counts[int(x)] += 1
    total = len(roots)
    best, running = 0.0, 0
    for H in range(q + 1):
        best = max(best, abs(running - H * total / q))
        if H < q:
            running += counts[H]
    return best
