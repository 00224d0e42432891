"""
Building and checking extremal witnesses
========================================

Every triangle-free building block here is a blow-up of the 5-cycle: each
cycle vertex becomes an independent bag and adjacent bags are joined, minus
some regular bipartite pieces.  Each graph is re-checked before use.
"""

from tfextremal.constructions import (
    BlowUpSpec,
    Bd_spec,
    assemble_general_witness,
    assemble_triangle_free_witness,
    construct_Ad,
    construct_Bd,
    realize_blowup,
)
from tfextremal.formats import graph6_encode, to_dot
from tfextremal.graph import is_factor_critical, matching_number, verify_membership

# The 5-cycle itself, and a bag-size pattern with d^2+1 edges on 2d+1 vertices.
print(realize_blowup(BlowUpSpec((1, 1, 1, 1, 1))))
for d in range(2, 7):
    a = construct_Ad(d)
    print(f"A_{d}: n={a.n} edges={a.num_edges} nu={matching_number(a)} factor-critical={is_factor_critical(a)}")

# (Almost) d-regular factor-critical blocks.  Odd d sometimes needs an extra
# path-plus-matching deletion from the (d+1)-regular block.
for d in range(2, 10):
    spec = Bd_spec(d)
    b = construct_Bd(d)
    print(f"B_{d}: bags={spec.sizes} removals={spec.removals} extra={len(spec.extra_removed)} "
          f"n={b.n} edges={b.num_edges} nu={matching_number(b)}")

# Full witness for (d, m): copies of the top block, then A_d or stars.
w = assemble_triangle_free_witness(4, 9)
print(w.parts, w.claimed_edges, w.status)
print(verify_membership(w.graph, 4, 9))
print(graph6_encode(w.graph))

# Without the triangle-free condition cliques do better.
g = assemble_general_witness(4, 9)
print("general:", g.parts, g.claimed_edges)
print(to_dot(construct_Ad(2)))
