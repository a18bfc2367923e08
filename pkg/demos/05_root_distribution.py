"""
Square roots of shifted primes
==============================

Collect every x mod q with x^2 = a p + b for primes p <= P.  There are about
pi(P) of them, and they spread evenly over [0, q).
"""

import math

import numpy as np

from salie_lab import (ShiftParams, count_interval, discrepancy_direct, erdos_turan_bound,
                       karatsuba_ratio, make_field, s_prime_sum, sieve, sqrt_shifted_primes)

q = 10007
ctx = make_field(q)
P = math.ceil(q ** 0.8)
tables = sieve(P)
a, b = 17, 4242
R = sqrt_shifted_primes(ctx, a, b, P, tables)
print(f"P={P} pi(P)={tables.pi_P} roots={R.total} ratio={karatsuba_ratio(R, tables):.4f}")

# Counts in initial intervals [0, H) against the expected share H/q.
for H in (q // 10, q // 4, q // 2, 3 * q // 4):
    print(f"H={H:5d}  count={count_interval(R, H):4d}  expected={H / q * R.total:7.1f}")

# Histogram over ten equal bins.
hist, _ = np.histogram(R.roots, bins=10, range=(0, q))
print("bins:", hist)

D = discrepancy_direct(R)
Hmax = math.ceil(math.sqrt(q))
spectrum = [s_prime_sum(ctx, ShiftParams.create(ctx, a, b, lam), P, tables) for lam in range(1, Hmax + 1)]
print(f"discrepancy={D:.2f} ({D / R.total:.3%} of total)  Erdos-Turan bound={erdos_turan_bound(spectrum, R.total, Hmax):.1f}")
