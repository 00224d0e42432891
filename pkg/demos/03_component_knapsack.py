"""
Choosing components with a knapsack
===================================

An extremal graph splits into stars and factor-critical components.  A
component with matching number ``i`` adds ``g(d, i)`` edges over ``i``
stars, so choosing components is an unbounded knapsack of capacity ``m``.
"""

from tfextremal.formulas import f_triangle, resolve_Zd
from tfextremal.knapsack import check_optimum_structure, f_via_model1, solve_model2

# d = 4: components with nu = 4 (A_4, surplus 1) and nu = 5 (B_4, surplus 2).
for m in range(4, 16):
    sol = solve_model2(4, m, {4: 1, 5: 2})
    print(m, sol.counts, sol.objective, 4 * m + sol.objective, f_triangle(4, m).value)

# The same recursion, with the surplus table taken from the closed forms.
print(f_via_model1(6, 13))

# With the conjectured surplus i - d + 1 below Z(d), optima use at most one
# component smaller than the top size.
for d in range(7, 12):
    z = resolve_Zd(d, assume_conjecture=True).value
    u = {i: (i - d + 1 if i < z else d // 2) for i in range(d, z + 1)}
    ok = all(check_optimum_structure(solve_model2(d, m, u), d) for m in range(d, 61))
    print(d, z, ok)
