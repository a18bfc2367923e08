"""
Vaughan and Heath-Brown identities, checked numerically
=======================================================

Both identities split Lambda(n) into Dirichlet convolutions.  Here we rebuild
Lambda from the parts and look at the defect, then split a prime sum into the
four Vaughan pieces.
"""

from salie_lab import ShiftParams, heath_brown_decompose, make_field, vaughan_decompose
from salie_lab import vaughan_identity_check

for P, U, V in [(10**3, 10, 10), (10**4, 2, 100), (10**5, 30, 30)]:
    print(f"Vaughan P={P} U={U} V={V}: defect {vaughan_identity_check(P, U, V):.2e}")

for J in (1, 2, 3, 4):
    print(f"Heath-Brown P=10^5 J={J}: defect {heath_brown_decompose(10**5, J):.2e}")

ctx = make_field(1009)
s = ShiftParams.create(ctx, 1, 1, 1)
terms = vaughan_decompose(ctx, s, 20_000, 20, 20)
print("sigma1..4:", [round(abs(x), 2) for x in (terms.sigma1, terms.sigma2, terms.sigma3, terms.sigma4)])
print("parts recombined:", terms.recombined, " majorant:", terms.majorant)
