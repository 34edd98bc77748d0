"""Walk one bar tableau through swap, weight reversal and unswap.

Run: python3 docs/examples/bender_knuth_tour.py
"""

from shifted_kpq import bender_knuth as bk
from shifted_kpq.shapes import shifted_diagram
from shifted_kpq.tableaux import enumerate_tableaux, weight_vector

shape = shifted_diagram((4, 2))
tableaux = list(enumerate_tableaux(shape, "BT_Q", 2))
print(f"{len(tableaux)} semistandard bar tableaux of shape (4,2) on letters 1, 2")

T = tableaux[len(tableaux) // 2]
print("\nT:\n" + T.pretty(), "\nweight", weight_vector(T, 2))

trace = []
S = bk.swap_all(T, trace)
print(f"\nsorted after {len(trace)} swap steps:\n" + S.pretty())

cases = []
R = bk.reverse_weight(S, cases)
print("\nweight reversed, rules used", cases, ":\n" + R.pretty())

U = bk.unswap_all(R)
print("\ntau(T):\n" + U.pretty(), "\nweight", weight_vector(U, 2))
print("tau is an involution here:", bk.tau(U, 1) == T)

# The same check over every tableau of the shape.
print("all involutive:", all(bk.tau(bk.tau(t, 1), 1) == t for t in tableaux))
