"""Cauchy residuals and Pieri coefficients with their independent oracles.

Run: python3 docs/examples/cauchy_and_pieri.py
"""

from shifted_kpq import identities as ids

# Sum over lam of GQ_lam(x) gp_lam(y) minus the product kernel, truncated at degree 5.
res = ids.verify_cauchy("QP", 2, 2, 5)
print(res.to_json())

# Ribbon counts for nu/lam = (8,5,3,1)/(5,4,1).
lam, nu = (5, 4, 1), (8, 5, 3, 1)
print("Q-ribbon tableaux:", ids.ribbon_tableaux_count(nu, lam))
print("c-ribbons:", ids.pieri_coeff("chat", lam, nu))

# Coefficient by n, computed from ribbons and from an explicit product expansion.
small_lam, small_nu = (2, 1), (4, 2, 1)
for n in range(2, 7):
    a = ids.pieri_coeff("chat", small_lam, small_nu, n)
    b = ids.pieri_coeff_oracle("chat", small_lam, small_nu, n)
    print(f"n={n}: ribbons {a}, product expansion {b}")
