"""
Sums of f over primes
=====================

S(P) sums f(p) over primes p <= P.  Each term has size at most 2, so the
trivial bound is 2 pi(P); the measured sums are far smaller.
"""

import math

import numpy as np

from salie_lab import Calibration, ShiftParams, bound_s_prime, make_field, s_prime_sum, sieve

q = 10007
ctx = make_field(q)
cal = Calibration()
tables = sieve(math.ceil(q ** 1.5))
rng = np.random.default_rng(5)
shifts = [ShiftParams.create(ctx, *(int(v) for v in rng.integers(1, q, 3))) for _ in range(10)]

for e in (0.7, 0.8, 0.9, 1.0, 1.2, 1.5):
    P = math.ceil(q ** e)
    rhs, regime = bound_s_prime(P, q, cal, tables)
    S = np.array([abs(s_prime_sum(ctx, s, P, tables)) for s in shifts])
    print(f"P = q^{e:<4} pi(P)={tables.pi(P):7d}  max|S|={S.max():9.2f}  "
          f"max|S|/pi={S.max() / tables.pi(P):.4f}  bound={rhs:12.1f}  [{regime}]")
