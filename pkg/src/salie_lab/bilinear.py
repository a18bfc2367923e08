"""Bilinear families V, smoothed V, W, T and the Salie form of V, plus bound evaluators.

Weight vectors are indexed from 1: ``alpha.values[0]`` is alpha_1.  Every sum
reduces rows with compensated accumulators and combines rows with an exactly
rounded sum, so results do not depend on blocking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .char_sums import ShiftParams, f_values, root_table, salie_closed
from .errors import (
    ConditionFail,
    DegenerateTerm,
    HypothesisFail,
    LengthMismatch,
    UnboundedWeights,
)
from .field import FieldCtx
from .summation import ComplexKahanVector, KahanVector, fsum_complex, fsum_real

ROW_BLOCK = 512


@dataclass(frozen=True)
class WeightSeq:
    values: np.ndarray
    l1: float = field(init=False)
    l2: float = field(init=False)
    linf: float = field(init=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        mod = np.abs(v)
        object.__setattr__(self, "l1", fsum_real(mod))
        object.__setattr__(self, "l2", math.sqrt(fsum_real(mod * mod)))
        object.__setattr__(self, "linf", float(mod.max()) if len(v) else 0.0)

    def __len__(self):
        return len(self.values)

    @classmethod
    def constant(cls, length: int, value: complex = 1.0) -> WeightSeq:
        return cls(np.full(length, value, dtype=np.complex128))

    @classmethod
    def random_unit(cls, length: int, rng: np.random.Generator) -> WeightSeq:
        """Unit-modulus weights with uniform phase; norms are M, sqrt(M), 1."""
        phase = rng.random(length)
        return cls(np.exp(2j * np.pi * phase))


@dataclass(frozen=True)
class LengthSeq:
    """Per-row lengths N_m (1 <= N_m <= cap)."""

    per_m: np.ndarray
    cap: float

    def __post_init__(self):
        per_m = np.asarray(self.per_m, dtype=np.float64)
        object.__setattr__(self, "per_m", per_m)
        if len(per_m) and (per_m.min() < 1 or per_m.max() > self.cap):
            raise ValueError("lengths must satisfy 1 <= N_m <= N")

    def __len__(self):
        return len(self.per_m)

    @classmethod
    def constant(cls, M: int, N: float) -> LengthSeq:
        return cls(np.full(M, float(N)), float(N))


def _smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for u <= 0, 1 for u >= 1."""
    u = np.clip(u, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore"):
        h0 = np.where(u > 0, np.exp(-1.0 / np.where(u > 0, u, 1.0)), 0.0)
        h1 = np.where(u < 1, np.exp(-1.0 / np.where(u < 1, 1.0 - u, 1.0)), 0.0)
    return h0 / (h0 + h1)


@dataclass(frozen=True)
class SmoothFamily:
    """Plateau windows phi_m: 1 on [delta N_m, (1 - delta) N_m], smooth shoulders, support [0, N_m].

    ``deriv_consts[j]`` is the sampled sup of |phi^(j)| * N_m^j (the same for every m,
    since each phi_m is a rescaling of one profile).
    """

    lengths: LengthSeq
    delta: float = 0.125
    deriv_consts: tuple = field(init=False)

    def __post_init__(self):
        if not 0 < self.delta < 0.5:
            raise ValueError("delta must lie in (0, 1/2)")
        object.__setattr__(self, "deriv_consts", self._measure())

    def profile(self, u: np.ndarray) -> np.ndarray:
        """The window on the unit interval (phi_m(x) = profile(x / N_m))."""
        u = np.asarray(u, dtype=np.float64)
        d = self.delta
        return _smooth_step(u / d) * _smooth_step((1.0 - u) / d)

    def __call__(self, m: int, x) -> np.ndarray:
        return self.profile(np.asarray(x, dtype=np.float64) / self.lengths.per_m[m - 1])

    def _measure(self, samples: int = 10_000) -> tuple:
        # 1e4 points on each shoulder, derivatives by centred differences
        d = self.delta
        u = np.concatenate([np.linspace(0.0, d, samples), np.linspace(1.0 - d, 1.0, samples)])
        h = d / (samples - 1)
        c0 = float(np.abs(self.profile(u)).max())
        d1 = (self.profile(u + h) - self.profile(u - h)) / (2 * h)
        d2 = (self.profile(u + h) - 2 * self.profile(u) + self.profile(u - h)) / (h * h)
        return (c0, float(np.abs(d1).max()), float(np.abs(d2).max()))

    def check_constants(self, declared: tuple) -> bool:
        return all(m <= c for m, c in zip(self.deriv_consts, declared))


@dataclass(frozen=True)
class Calibration:
    """Stand-in for q^{o(1)} factors: C * (log X)^kappa."""

    C: float = 10.0
    kappa: float = 0.0

    def factor(self, x: float) -> float:
        if self.kappa == 0:
            return self.C
        return self.C * math.log(x) ** self.kappa


def _row_sums(ctx: FieldCtx, s: ShiftParams, ms: np.ndarray, length: int,
              weights: np.ndarray | None = None, row_len: np.ndarray | None = None) -> np.ndarray:
    """r_m = sum_{n <= len_m} w_n f(m n) for each m in ms, compensated along n."""
    q = ctx.q
    g = root_table(ctx, s)
    complex_w = weights is not None and np.iscomplexobj(weights)
    acc = ComplexKahanVector(len(ms)) if complex_w else KahanVector(len(ms))
    am = (s.a * (ms % q)) % q
    for n in range(1, length + 1):
        if g is not None:
            col = g[(am * (n % q) + s.b) % q]
        else:
            col = f_values(ctx, s, ms * n)
        if row_len is not None:
            col = np.where(n <= row_len, col, 0.0)
        if weights is not None:
            col = weights[n - 1] * col
        acc.add(col)
    return acc.result()


def _row_sums_by_row(ctx: FieldCtx, s: ShiftParams, ms: np.ndarray, lens: np.ndarray) -> np.ndarray:
    """Per-row exact sums; used when rows are long and few."""
    out = np.empty(len(ms))
    for i, (m, n_max) in enumerate(zip(ms, lens)):
        n = np.arange(1, int(n_max) + 1, dtype=np.int64)
        out[i] = fsum_real(f_values(ctx, s, int(m) * n))
    return out


def v_sum(ctx: FieldCtx, s: ShiftParams, alpha: WeightSeq, lens: LengthSeq) -> complex:
    """V = sum_{m <= M} alpha_m sum_{n <= N_m} f(mn)."""
    if len(alpha) != len(lens):
        raise LengthMismatch(f"alpha has {len(alpha)} entries, lengths {len(lens)}")
    M = len(alpha)
    if M == 0:
        return 0j
    ms = np.arange(1, M + 1, dtype=np.int64)
    n_int = np.floor(lens.per_m).astype(np.int64)
    rows = _row_sums_blocked(ctx, s, ms, n_int)
    return fsum_complex(alpha.values * rows)


def _row_sums_blocked(ctx, s, ms, n_int):
    # few long rows: one exact sum per row; otherwise sweep columns
    if len(ms) < 8:
        return _row_sums_by_row(ctx, s, ms, n_int)
    out = np.empty(len(ms))
    for lo in range(0, len(ms), ROW_BLOCK):
        sl = slice(lo, lo + ROW_BLOCK)
        out[sl] = _row_sums(ctx, s, ms[sl], int(n_int[sl].max()), row_len=n_int[sl])
    return out


def v_sum_salie_form(ctx: FieldCtx, s: ShiftParams, alpha: WeightSeq, lens: LengthSeq) -> complex:
    """The Salie form sum_m alpha_m sum_{n <= N_m} S(mu^2 (a m n + b); q) = eps_q sqrt(q) V."""
    if len(alpha) != len(lens):
        raise LengthMismatch(f"alpha has {len(alpha)} entries, lengths {len(lens)}")
    q = ctx.q
    total = []
    for m in range(1, len(alpha) + 1):
        row = []
        for n in range(1, math.floor(lens.per_m[m - 1]) + 1):
            arg = (s.a * m * n + s.b) % q
            if arg == 0:
                raise DegenerateTerm(m, n)
            row.append(salie_closed(ctx, s.eta * arg % q))
        total.append(alpha.values[m - 1] * fsum_complex(row))
    return fsum_complex(total)


def v_sum_smooth(ctx: FieldCtx, s: ShiftParams, alpha: WeightSeq, fam: SmoothFamily,
                 weight_bound: float = 1.0) -> complex:
    """sum_m alpha_m sum_{n in Z} phi_m(n) f(mn); support truncates n to [1, ceil(N_m)]."""
    if len(alpha) != len(fam.lengths):
        raise LengthMismatch("alpha and family lengths differ")
    if alpha.linf > weight_bound:
        raise UnboundedWeights(f"max |alpha_m| = {alpha.linf} exceeds {weight_bound}")
    rows = []
    for m in range(1, len(alpha) + 1):
        n = np.arange(1, math.ceil(fam.lengths.per_m[m - 1]) + 1, dtype=np.int64)
        rows.append(fsum_real(fam(m, n) * f_values(ctx, s, m * n)))
    return fsum_complex(alpha.values * np.array(rows))


def w_sum(ctx: FieldCtx, s: ShiftParams, alpha: WeightSeq, beta: WeightSeq,
          M: float, N: float) -> complex:
    """W = sum_{m <= M} sum_{n <= N} alpha_m beta_n f(mn)."""
    M, N = math.floor(M), math.floor(N)
    if len(alpha) < M or len(beta) < N:
        raise LengthMismatch("weights shorter than summation ranges")
    if M == 0 or N == 0:
        return 0j
    ms = np.arange(1, M + 1, dtype=np.int64)
    b = beta.values[:N]
    rows = np.empty(M, dtype=np.complex128)
    for lo in range(0, M, ROW_BLOCK):
        rows[lo:lo + ROW_BLOCK] = _row_sums(ctx, s, ms[lo:lo + ROW_BLOCK], N, weights=b)
    return fsum_complex(alpha.values[:M] * rows)


def t_sum_hyperbolic(ctx: FieldCtx, s: ShiftParams, alpha: WeightSeq, beta: WeightSeq,
                     P: float, U: float, V: float) -> complex:
    """T = sum over mn <= P, m >= U, n >= V of alpha_m beta_n f(mn); m outer, n inner, ascending."""
    if min(P, U, V) < 1:
        raise ValueError("P, U, V must be >= 1")
    m_lo, n_lo = math.ceil(U), math.ceil(V)
    m_hi = math.floor(P / n_lo)
    if m_hi < m_lo:
        return 0j
    n_hi = math.floor(P / m_lo)
    if len(alpha) < m_hi or len(beta) < n_hi:
        raise LengthMismatch("weights shorter than the hyperbolic domain")
    rows = []
    for m in range(m_lo, m_hi + 1):
        n = np.arange(n_lo, math.floor(P / m) + 1, dtype=np.int64)
        row = fsum_complex(beta.values[n - 1] * f_values(ctx, s, m * n))
        rows.append(alpha.values[m - 1] * row)
    return fsum_complex(rows)


# ---------------------------------------------------------------------------
# bound evaluators


def bound_thm_smooth(q: float, N: float, cal: Calibration) -> float:
    """C sqrt(q) log q (independent of N)."""
    return cal.C * math.sqrt(q) * math.log(q)


def bound_thm_bilinear_I(q: float, M: float, N: float, l1: float, l2: float,
                         cal: Calibration) -> float:
    if M > q:
        raise ConditionFail("M <= q")
    if M * N > q ** 1.5:
        raise ConditionFail("MN <= q^(3/2)")
    if M > N * N:
        raise ConditionFail("M <= N^2")
    return math.sqrt(l1 * l2) * M ** (1 / 12) * N ** (7 / 12) * q ** 0.25 * cal.factor(q)


def bound_thm_bilinear_I_smooth(q: float, M: float, N: float, r: int, cal: Calibration,
                                cap: float = 1.0) -> float:
    """Two-term bound for smoothed Type-I sums; requires M N <= cap * q."""
    if r < 2 or int(r) != r:
        raise ValueError("r must be an integer >= 2")
    if M * N > cap * q:
        raise HypothesisFail(f"MN = {M * N} exceeds {cap} * q")
    e = 1 / (2 * r)
    first = M ** (1.5 - e) * N ** (0.5 + e)
    second = M ** (1 - e) * N ** e * q ** (0.5 - e / 2)
    return (first + second) * cal.factor(q)


def bound_thm_bilinear_II(q: float, M: float, N: float, l2: float, linf: float,
                          cal: Calibration) -> float:
    shape = (math.sqrt(M * N) + math.sqrt(M) * N * q ** -0.25
             + N * q ** 0.25 * math.sqrt(math.log(q)))
    return l2 * linf * shape * cal.factor(q)


def bound_cor_hyperbolic(q: float, P: float, U: float, V: float, cal: Calibration) -> float:
    shape = P / math.sqrt(V) + P * q ** -0.25 + P * q ** 0.25 / math.sqrt(U)
    return shape * cal.factor(P * q)
