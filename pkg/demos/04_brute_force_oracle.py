"""
Exhaustive checks on small cases
================================

The enumerator produces one graph per isomorphism class.  Searching all
triangle-free graphs within the vertex bound gives the extremal size
directly, independent of any formula.
"""

import time

from tfextremal.formulas import f_triangle
from tfextremal.oracle.enumerate import EnumFilter, Regular, enumerate_graphs
from tfextremal.oracle.search import (
    brute_force_component_f,
    brute_force_f,
    oracle_f_via_components,
    search_Zd,
    vertex_bound,
)

for d, m in [(1, 4), (2, 3), (3, 2), (3, 3)]:
    t = time.perf_counter()
    r = brute_force_f(d, m)
    print(f"({d},{m}) bound={vertex_bound(d, m)} brute={r.best_edges} formula={f_triangle(d, m).value} "
          f"exhaustive={r.exhaustive} {time.perf_counter() - t:.2f}s")

print("component f(4,4):", brute_force_component_f(4, 4).best_edges)
print("recursion f(3,4):", oracle_f_via_components(3, 4))

# Smallest matching number of a 4-regular triangle-free factor-critical graph.
print(search_Zd(4, 6))

# Connected 4-regular triangle-free graphs on 11 vertices.
for g in enumerate_graphs(EnumFilter(11, 4, connected=True, degree_profile=Regular(4))):
    print(g.edges())
