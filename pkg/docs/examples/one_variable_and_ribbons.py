"""One-variable bar tableau functions and the ribbon product formula.

Run: python3 docs/examples/one_variable_and_ribbons.py
"""

from shifted_kpq import genfun_one_var
from shifted_kpq.genfun import ribbon_closed_form
from shifted_kpq.shapes import ribbon_params

# In one variable t the one-row functions factor completely.
for n in range(1, 6):
    print(f"jp_{n}(t) =", genfun_one_var("jp", (n,)))
    print(f"jq_{n}(t) =", genfun_one_var("jq", (n,)))

# A shifted ribbon and its combinatorial parameters.
Lam, Psi = (8, 5, 3, 1), (5, 4, 1)
p = ribbon_params(Lam, Psi)
print(f"\nribbon {Lam}/{Psi}: scc={p.scc} mcc={p.mcc} fb={p.fb} res={p.res}")

# The closed form agrees with the sum over bar tableaux.
direct = genfun_one_var("jq", Lam, Psi)
closed = ribbon_closed_form("jq", Lam, Psi)
print("jq by summation:  ", direct)
print("jq closed form:   ", closed)
print("equal:", direct == closed)
