"""Single-parameter sums: Salie, Kloosterman, the shifted-root kernel f(n), U(m, N).

The kernel ``f(n) = sum_{x^2 = a n + b} e_q(lam x)`` is always real: its roots
come in pairs ``+-x``.  For tabled moduli it is read off a per-(q, lam) table
``g[t] = sum_{x^2 = t} cos(2 pi lam x / q)`` at ``t = a n + b``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SharedFactor, SharedFactorM
from .field import FieldCtx, eq_phase, eq_phase_direct, inv, legendre, sqrt_mod
from .summation import BLOCK, fsum_blocks, fsum_complex


@dataclass(frozen=True)
class ShiftParams:
    """The shift triple (a, b, lam) with mu = lam/2 and eta = mu^2 mod q."""

    a: int
    b: int
    lam: int
    mu: int
    eta: int

    @classmethod
    def create(cls, ctx: FieldCtx, a: int, b: int, lam: int) -> ShiftParams:
        q = ctx.q
        a, b, lam = a % q, b % q, lam % q
        if a == 0 or lam == 0:
            raise SharedFactor(f"gcd(a*lam, q) != 1 for a={a}, lam={lam}, q={q}")
        mu = lam * pow(2, -1, q) % q
        return cls(a, b, lam, mu, mu * mu % q)


def salie_direct(ctx: FieldCtx, t: int) -> complex:
    """S(t; q) by summing over all z in F_q^*, ascending."""
    q = ctx.q
    t %= q
    if ctx.has_tables:
        z = np.arange(1, q, dtype=np.int64)
        chi = ctx.legendre_table[z].astype(np.float64)
        k = (t * z + ctx.inv_table[z]) % q
        return fsum_complex(chi * ctx.cos_table[k] + 1j * (chi * ctx.sin_table[k]))
    return fsum_complex(
        legendre(ctx, z) * eq_phase_direct(q, t * z + inv(ctx, z)) for z in range(1, q)
    )


def salie_closed(ctx: FieldCtx, t: int) -> complex:
    """S(t; q) = eps_q sqrt(q) sum_{x^2 = t} e_q(2x), for gcd(t, q) = 1."""
    q = ctx.q
    t %= q
    if t == 0:
        raise SharedFactor("closed form needs gcd(t, q) = 1")
    roots = sqrt_mod(ctx, t)
    return ctx.eps_q * math.sqrt(q) * sum((eq_phase(ctx, 2 * x % q) for x in roots), 0j)


def kloosterman(ctx: FieldCtx, t: int) -> complex:
    q = ctx.q
    t %= q
    if ctx.has_tables:
        z = np.arange(1, q, dtype=np.int64)
        k = (t * z + ctx.inv_table[z]) % q
        return fsum_complex(ctx.cos_table[k] + 1j * ctx.sin_table[k])
    return fsum_complex(eq_phase_direct(q, t * z + inv(ctx, z)) for z in range(1, q))


@lru_cache(maxsize=32)
def _root_table(ctx: FieldCtx, lam: int) -> np.ndarray:
    q = ctx.q
    x = np.arange(1, (q + 1) // 2, dtype=np.int64)
    g = np.zeros(q)
    g[x * x % q] = 2.0 * ctx.cos_table[lam * x % q]
    g[0] = 1.0
    return g


def root_table(ctx: FieldCtx, s: ShiftParams) -> np.ndarray | None:
    """g[t] = sum over x^2 = t of e_q(lam x) (real), or None above the table threshold."""
    if not ctx.has_tables:
        return None
    return _root_table(ctx, s.lam)


def _f_scalar(ctx: FieldCtx, s: ShiftParams, n: int) -> float:
    q = ctx.q
    roots = sqrt_mod(ctx, (s.a * (n % q) + s.b) % q)
    if not roots:
        return 0.0
    if roots == [0]:
        return 1.0
    return 2.0 * math.cos(2 * math.pi * (s.lam * roots[0] % q) / q)


def f_values(ctx: FieldCtx, s: ShiftParams, n) -> np.ndarray:
    """Vectorised f(n) for an integer array n >= 0."""
    n = np.asarray(n, dtype=np.int64)
    g = root_table(ctx, s)
    if g is None:
        flat = [_f_scalar(ctx, s, int(k)) for k in n.ravel()]
        return np.array(flat, dtype=np.float64).reshape(n.shape)
    q = ctx.q
    return g[(s.a * (n % q) + s.b) % q]


def f_eval(ctx: FieldCtx, s: ShiftParams, n: int) -> complex:
    """f(n) = sum over x^2 = a n + b (mod q) of e_q(lam x)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    q = ctx.q
    t = (s.a * n + s.b) % q
    return sum((eq_phase(ctx, s.lam * x % q) for x in sqrt_mod(ctx, t)), 0j)


def f_eval_salie(ctx: FieldCtx, s: ShiftParams, m: int, n: int) -> complex:
    """f(mn) rewritten through the Salie closed form at mu^2 (a m n + b)."""
    q = ctx.q
    arg = (s.a * m * n + s.b) % q
    if arg == 0:
        raise SharedFactor(f"a*m*n + b == 0 (mod {q})")
    value = salie_closed(ctx, s.eta * arg % q)
    return value / (ctx.eps_q * math.sqrt(q))


def iter_blocks(start: int, stop: int, block: int = BLOCK):
    """Contiguous integer ranges [lo, hi) covering [start, stop)."""
    for lo in range(start, stop, block):
        yield np.arange(lo, min(lo + block, stop), dtype=np.int64)


def u_sum(ctx: FieldCtx, s: ShiftParams, m: int, N: float) -> complex:
    """U(m, N) = sum_{1 <= n <= N} f(mn)."""
    if m % ctx.q == 0:
        raise SharedFactorM(f"gcd(m, q) > 1 for m={m}")
    if N < 1:
        raise ValueError("N must be >= 1")
    stop = math.floor(N) + 1
    m = m % ctx.q
    return fsum_blocks(f_values(ctx, s, m * n) for n in iter_blocks(1, stop))
