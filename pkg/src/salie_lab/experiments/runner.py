"""Execute an ExperimentSpec over its parameter grid and collect a BoundReport."""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .. import __version__
from ..bilinear import (
    Calibration,
    LengthSeq,
    WeightSeq,
    bound_cor_hyperbolic,
    bound_thm_bilinear_I,
    bound_thm_bilinear_II,
    t_sum_hyperbolic,
    v_sum,
    w_sum,
)
from ..char_sums import ShiftParams, salie_closed, salie_direct
from ..distribution import (
    ET_CONSTANT,
    discrepancy_direct,
    erdos_turan_bound,
    karatsuba_ratio,
    sqrt_shifted_primes,
)
from ..errors import ConditionFail, ResourceExceeded, SpecParse
from ..field import legendre, make_field
from ..primes import (
    bound_s_prime,
    cached_sieve,
    heath_brown_decompose,
    s_prime_sum,
    vaughan_identity_check,
)
from .spec import ExperimentSpec, parse_random_shifts, resolve

IDENTITY_TOL = 1e-9
COLUMNS = ("q", "a", "b", "lambda", "M", "N", "P", "U", "V",
           "measured_abs", "bound_rhs", "ratio", "regime", "seed", "wall_ms")


@dataclass
class BoundReport:
    spec: ExperimentSpec
    records: list[dict] = field(default_factory=list)
    version: str = __version__

    @property
    def seed(self) -> int:
        return self.spec.seed

    @property
    def ok(self) -> bool:
        return all(r.get("hard_ok", True) for r in self.records)

    @property
    def summary(self) -> dict:
        ratios = [(r["ratio"], i) for i, r in enumerate(self.records) if r.get("ratio") is not None]
        if not ratios:
            return {"max_ratio": None, "argmax": None, "points": len(self.records), "ok": self.ok}
        best, idx = max(ratios)
        point = {k: self.records[idx].get(k) for k in COLUMNS[:9]}
        return {"max_ratio": best, "argmax": point, "points": len(self.records), "ok": self.ok}


@dataclass(frozen=True)
class Point:
    index: int
    params: dict
    cost: float


def _need(spec: ExperimentSpec, *names: str) -> None:
    for name in names:
        if not getattr(spec, name):
            raise SpecParse(f"kind {spec.kind!r} needs field {'lambda' if name == 'lam' else name!r}")


def _shifts(spec: ExperimentSpec, q: int) -> list[tuple[int, int, int]]:
    if spec.shifts:
        count, seed = parse_random_shifts(spec.shifts)
        rng = np.random.default_rng([seed, q])
        draws = rng.integers(1, q, size=(count, 3))
        return [tuple(int(v) for v in row) for row in draws]
    a = [int(resolve(v, q)) for v in spec.a] or [1]
    b = [int(resolve(v, q)) for v in spec.b] or [1]
    lam = [int(resolve(v, q)) for v in spec.lam] or [1]
    return list(product(a, b, lam))


def _grid(spec: ExperimentSpec, name: str, q: int) -> list[float]:
    return [resolve(v, q) for v in getattr(spec, name)]


def build_points(spec: ExperimentSpec) -> list[Point]:
    kind = spec.kind
    raw: list[tuple[dict, float]] = []
    if kind in ("vaughan-check", "hb-check"):
        _need(spec, "P")
        for P in _grid(spec, "P", 0):
            if kind == "vaughan-check":
                _need(spec, "U", "V")
                for U, V in product(_grid(spec, "U", 0), _grid(spec, "V", 0)):
                    raw.append(({"P": P, "U": U, "V": V}, P * math.log(P)))
            else:
                for J in (spec.J or ["1", "2", "3"]):
                    raw.append(({"P": P, "J": int(J)}, int(J) * P * math.log(P)))
    else:
        _need(spec, "q")
        for q in spec.q:
            if kind == "salie-verify":
                raw.append(({"q": q}, float(q) * q))
                continue
            for a, b, lam in _shifts(spec, q):
                base = {"q": q, "a": a, "b": b, "lambda": lam}
                raw.extend(_sized_points(spec, q, base))
    points = [Point(i, p, c) for i, (p, c) in enumerate(raw)]
    total = sum(p.cost for p in points)
    if total > spec.budget:
        raise ResourceExceeded(f"predicted work {total:.3g} exceeds budget {spec.budget:.3g}")
    return points


def _sized_points(spec, q, base):
    kind = spec.kind
    out = []
    if kind in ("bilinear-sweep", "type2-sweep"):
        _need(spec, "M", "N")
        for M, N in product(_grid(spec, "M", q), _grid(spec, "N", q)):
            for draw in range(spec.seeds):
                out.append(({**base, "M": M, "N": N, "draw": draw}, M * N))
    elif kind == "hyperbolic-sweep":
        _need(spec, "P", "U", "V")
        for P, U, V in product(_grid(spec, "P", q), _grid(spec, "U", q), _grid(spec, "V", q)):
            for draw in range(spec.seeds):
                out.append(({**base, "P": P, "U": U, "V": V, "draw": draw}, P * math.log(P + 1)))
    elif kind in ("prime-sum", "distribution"):
        _need(spec, "P")
        for P in _grid(spec, "P", q):
            out.append(({**base, "P": P}, P))
    elif kind == "discrepancy":
        _need(spec, "P")
        hmaxes = _grid(spec, "hmax", q) if spec.hmax else [float(math.ceil(math.sqrt(q)))]
        for P, H in product(_grid(spec, "P", q), hmaxes):
            out.append(({**base, "P": P, "hmax": int(H)}, P * (H + 1)))
    return out


def _rng(spec: ExperimentSpec, point: Point) -> np.random.Generator:
    return np.random.default_rng([spec.seed, point.index])


def _record(point: Point, measured: float, rhs: float | None, regime: str,
            hard_ok: bool = True) -> dict:
    rec = {k: point.params.get(k) for k in COLUMNS[:9]}
    rec["measured_abs"] = float(measured)
    rec["bound_rhs"] = None if rhs is None else float(rhs)
    rec["ratio"] = None if rhs is None or rhs == 0 else float(measured) / float(rhs)
    rec["regime"] = regime
    rec["hard_ok"] = hard_ok
    return rec


def evaluate(spec: ExperimentSpec, point: Point) -> dict:
    p = point.params
    cal = Calibration(spec.cal_c, spec.cal_kappa)
    kind = spec.kind

    if kind == "vaughan-check":
        defect = vaughan_identity_check(p["P"], p["U"], p["V"])
        return _record(point, defect, IDENTITY_TOL, "identity", defect <= IDENTITY_TOL)
    if kind == "hb-check":
        defect = heath_brown_decompose(int(p["P"]), p["J"])
        return _record(point, defect, IDENTITY_TOL, f"identity J={p['J']}", defect <= IDENTITY_TOL)

    ctx = make_field(p["q"])
    q = ctx.q
    if kind == "salie-verify":
        worst, worst_nonres = 0.0, 0.0
        for t in range(1, q):
            direct = salie_direct(ctx, t)
            worst = max(worst, abs(direct - salie_closed(ctx, t)))
            if legendre(ctx, t) == -1:
                worst_nonres = max(worst_nonres, abs(direct))
        tol = 1e-8 * math.sqrt(q)
        ok = worst <= tol and worst_nonres <= IDENTITY_TOL
        return _record(point, worst, tol, "identity", ok)

    s = ShiftParams.create(ctx, p["a"], p["b"], p["lambda"])
    if kind in ("bilinear-sweep", "type2-sweep"):
        M, N = math.floor(p["M"]), math.floor(p["N"])
        rng = _rng(spec, point)
        alpha = WeightSeq.random_unit(M, rng)
        if kind == "bilinear-sweep":
            value = v_sum(ctx, s, alpha, LengthSeq.constant(M, N))
            try:
                rhs = bound_thm_bilinear_I(q, M, N, alpha.l1, alpha.l2, cal)
                regime = "thm-bilinear-I"
            except ConditionFail as exc:
                rhs, regime = None, f"condition-fail: {exc.condition}"
        else:
            beta = WeightSeq.random_unit(N, rng)
            value = w_sum(ctx, s, alpha, beta, M, N)
            rhs = bound_thm_bilinear_II(q, M, N, alpha.l2, beta.linf, cal)
            regime = "thm-bilinear-II"
        return _record(point, abs(value), rhs, regime)
    if kind == "hyperbolic-sweep":
        P, U, V = p["P"], p["U"], p["V"]
        rng = _rng(spec, point)
        alpha = WeightSeq.random_unit(max(1, math.floor(P / math.ceil(V))), rng)
        beta = WeightSeq.random_unit(max(1, math.floor(P / math.ceil(U))), rng)
        value = t_sum_hyperbolic(ctx, s, alpha, beta, P, U, V)
        return _record(point, abs(value), bound_cor_hyperbolic(q, P, U, V, cal), "cor-hyperbolic")
    if kind == "prime-sum":
        P = p["P"]
        tables = cached_sieve(max(2, math.floor(P)))
        value = s_prime_sum(ctx, s, P, tables)
        rhs, regime = bound_s_prime(P, q, cal, tables)
        return _record(point, abs(value), rhs, regime)
    if kind == "distribution":
        P = p["P"]
        tables = cached_sieve(max(2, math.floor(P)))
        R = sqrt_shifted_primes(ctx, p["a"], p["b"], P, tables)
        return _record(point, R.total, tables.pi(P), "karatsuba")
    if kind == "discrepancy":
        P, H = p["P"], p["hmax"]
        tables = cached_sieve(max(2, math.floor(P)))
        R = sqrt_shifted_primes(ctx, p["a"], p["b"], P, tables)
        spectrum = [s_prime_sum(ctx, ShiftParams.create(ctx, p["a"], p["b"], lam), P, tables)
                    for lam in range(1, H + 1)]
        bound = erdos_turan_bound(spectrum, R.total, H)
        return _record(point, discrepancy_direct(R), bound, f"erdos-turan C={ET_CONSTANT:g}")
    raise SpecParse(f"unhandled kind {kind!r}")


def _timed(spec: ExperimentSpec, point: Point) -> dict:
    start = time.perf_counter()
    rec = evaluate(spec, point)
    rec["seed"] = spec.seed
    rec["wall_ms"] = (time.perf_counter() - start) * 1e3
    return rec


def run(spec: ExperimentSpec, threads: int = 1) -> BoundReport:
    """Run every grid point; records keep grid order whatever the thread count."""
    points = build_points(spec)
    if threads <= 1:
        records = [_timed(spec, pt) for pt in points]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda pt: _timed(spec, pt), points))
    return BoundReport(spec, records)
