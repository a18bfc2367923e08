"""Prime-field substrate: Legendre symbols, square roots and phases e_q(z).

Residues are plain Python ints in ``range(q)``.  Products are exact (Python
integers), so no Montgomery form is needed for moduli below 2**62.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import EvenModulus, ModulusTooLarge, NotPrime, ZeroInverse

MAX_MODULUS = 1 << 62
TABLE_THRESHOLD = 1 << 24

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def euler_criterion(t: int, q: int) -> int:
    t %= q
    if t == 0:
        return 0
    return 1 if pow(t, (q - 1) // 2, q) == 1 else -1


def jacobi(t: int, n: int) -> int:
    """Jacobi symbol (t/n) for odd n > 0, by quadratic reciprocity."""
    t %= n
    result = 1
    while t:
        while t % 2 == 0:
            t //= 2
            if n % 8 in (3, 5):
                result = -result
        t, n = n, t
        if t % 4 == 3 and n % 4 == 3:
            result = -result
        t %= n
    return result if n == 1 else 0


def tonelli_shanks(t: int, q: int) -> int | None:
    """Return one square root of t modulo the odd prime q, or None."""
    t %= q
    if t == 0:
        return 0
    if pow(t, (q - 1) // 2, q) != 1:
        return None
    if q % 4 == 3:
        return pow(t, (q + 1) // 4, q)
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1
    x = pow(t, (s + 1) // 2, q)
    b = pow(t, s, q)
    g = pow(z, s, q)
    r = e
    while b != 1:
        m, bb = 0, b
        while bb != 1:
            bb = bb * bb % q
            m += 1
        gs = pow(g, 1 << (r - m - 1), q)
        g = gs * gs % q
        x = x * gs % q
        b = b * g % q
        r = m
    return x


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """An odd prime modulus with lazily built quadratic and phase tables.

    ``sqrt_table`` maps each residue to its smaller square root (``-1`` for
    non-residues); it exists only for ``q <= TABLE_THRESHOLD``.
    """

    q: int
    eps_q: complex = field(init=False)
    use_tables: bool = True

    def __post_init__(self):
        object.__setattr__(self, "eps_q", 1 + 0j if self.q % 4 == 1 else 1j)

    def __hash__(self):
        return hash(self.q)

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.q == self.q

    def __repr__(self):
        return f"FieldCtx(q={self.q})"

    @property
    def has_tables(self) -> bool:
        return self.use_tables and self.q <= TABLE_THRESHOLD

    @cached_property
    def sqrt_table(self) -> np.ndarray | None:
        if not self.has_tables:
            return None
        q = self.q
        x = np.arange((q + 1) // 2, dtype=np.int64)
        table = np.full(q, -1, dtype=np.int64)
        table[x * x % q] = x
        return table

    @cached_property
    def legendre_table(self) -> np.ndarray | None:
        """(t/q) for t in range(q), as int8."""
        table = self.sqrt_table
        if table is None:
            return None
        out = np.where(table >= 0, 1, -1).astype(np.int8)
        out[0] = 0
        return out

    @cached_property
    def inv_table(self) -> np.ndarray | None:
        """z**-1 mod q for z in range(q); entry 0 is 0 by convention."""
        if not self.has_tables:
            return None
        return powmod_vec(np.arange(self.q, dtype=np.int64), self.q - 2, self.q)

    @cached_property
    def cos_table(self) -> np.ndarray | None:
        """cos(2 pi k / q) for k in range(q)."""
        if not self.has_tables:
            return None
        return np.cos(2.0 * np.pi * np.arange(self.q, dtype=np.float64) / self.q)

    @cached_property
    def sin_table(self) -> np.ndarray | None:
        if not self.has_tables:
            return None
        return np.sin(2.0 * np.pi * np.arange(self.q, dtype=np.float64) / self.q)


def powmod_vec(base: np.ndarray, exponent: int, q: int) -> np.ndarray:
    """Elementwise base**exponent mod q; requires q < 2**31."""
    result = np.ones_like(base)
    b = base % q
    while exponent:
        if exponent & 1:
            result = result * b % q
        b = b * b % q
        exponent >>= 1
    return result


def make_field(q: int, use_tables: bool = True) -> FieldCtx:
    q = int(q)
    if q % 2 == 0:
        raise EvenModulus(f"modulus must be odd, got {q}")
    if q >= MAX_MODULUS:
        raise ModulusTooLarge(f"modulus {q} exceeds 2**62")
    if q < 3 or not is_prime(q):
        raise NotPrime(f"{q} is not an odd prime")
    return FieldCtx(q, use_tables=use_tables)


def _check_residue(ctx: FieldCtx, z: int) -> int:
    if not 0 <= z < ctx.q:
        raise ValueError(f"residue {z} outside [0, {ctx.q})")
    return z


def legendre(ctx: FieldCtx, t: int) -> int:
    """Legendre symbol (t/q) computed by reciprocity."""
    _check_residue(ctx, t)
    return jacobi(t, ctx.q)


def inv(ctx: FieldCtx, z: int) -> int:
    _check_residue(ctx, z)
    if z == 0:
        raise ZeroInverse("0 has no inverse")
    return pow(z, -1, ctx.q)


def sqrt_mod(ctx: FieldCtx, t: int) -> list[int]:
    """All x in [0, q) with x*x == t (mod q), ascending."""
    _check_residue(ctx, t)
    if t == 0:
        return [0]
    table = ctx.sqrt_table
    if table is not None:
        x = int(table[t])
        if x < 0:
            return []
    else:
        x = tonelli_shanks(t, ctx.q)
        if x is None:
            return []
    return sorted((x, ctx.q - x))


def eq_phase(ctx: FieldCtx, z: int) -> complex:
    """e_q(z) = exp(2 pi i z / q)."""
    _check_residue(ctx, z)
    if ctx.has_tables:
        return complex(ctx.cos_table[z], ctx.sin_table[z])
    return eq_phase_direct(ctx.q, z)


def eq_phase_direct(q: int, z: int) -> complex:
    return cmath.exp(2j * math.pi * (z % q) / q)
