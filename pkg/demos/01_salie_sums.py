"""
Salie sums and the kernel f
===========================

A Salie sum is a Kloosterman sum twisted by the Legendre symbol.  Unlike the
plain Kloosterman sum it has an explicit value: zero at non-residues, and a
sum of two cosines at residues.
"""

import numpy as np

from salie_lab import f_eval, f_eval_salie, kloosterman, make_field, salie_closed, salie_direct
from salie_lab import ShiftParams, legendre, u_sum

ctx = make_field(1019)   # 1019 = 3 mod 4, so eps_q = i
print(ctx, "eps_q =", ctx.eps_q)

# Direct summation over z against the closed form, for a few t.
for t in (1, 2, 3, 5, 7):
    direct = salie_direct(ctx, t)
    print(f"t={t:2d}  (t/q)={legendre(ctx, t):+d}  direct={direct:.6f}  closed={salie_closed(ctx, t):.6f}")

# Kloosterman sums have no closed form, but obey the same square-root bound.
K = np.array([kloosterman(ctx, t) for t in range(1, 50)])
print("max |K(t)| / 2 sqrt(q) over t < 50:", np.abs(K).max() / (2 * np.sqrt(ctx.q)))

# The kernel: f(n) sums e_q(lam x) over square roots x of a n + b.
# Roots come in pairs +-x, so f is real.
s = ShiftParams.create(ctx, 3, 5, 7)
vals = np.array([f_eval(ctx, s, n) for n in range(1, 21)])
print("f(1..20) =", np.round(vals.real, 4))
print("largest imaginary part:", np.abs(vals.imag).max())

# The same value read through the Salie closed form at m n.
m, n = 12, 34
print("f(mn) direct:", f_eval(ctx, s, m * n), " through Salie:", f_eval_salie(ctx, s, m, n))

# Summed over a full period in n the kernel cancels completely.
print("sum over n <= q of f(2n):", u_sum(ctx, s, 2, ctx.q))
print("partial sum, n <= q/3:   ", u_sum(ctx, s, 2, ctx.q / 3))
