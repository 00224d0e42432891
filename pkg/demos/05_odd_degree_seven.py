"""
A smaller block for degree seven
================================

For odd d the top component size Z(d) is only bracketed.  A restricted
search over 5-cycle blow-ups finds an almost 7-regular factor-critical graph
on 19 vertices, so Z(7) <= 9.
"""

from tfextremal.constructions import BlowUpSpec, realize_blowup
from tfextremal.formats import graph6_encode
from tfextremal.formulas import f_triangle, resolve_Zd
from tfextremal.graph import is_factor_critical, is_triangle_free, matching_number
from tfextremal.oracle.search import search_Zd_blowup

found = search_Zd_blowup(7, 10)
print({nu: (g.n if g else None) for nu, g in found.items() if nu >= 7})

g = found[9]
print(graph6_encode(g), sorted(set(g.degrees())), matching_number(g), is_factor_critical(g), is_triangle_free(g))

# The same bag pattern for every odd d gives nu = 3(d-1)/2.
for d in range(3, 16, 2):
    a, b = (d - 1) // 2, d - 1
    h = realize_blowup(BlowUpSpec((1, a, b, b, a), (0, 0, (d - 3) // 2, 0, 0)))
    print(d, h.n, matching_number(h), is_factor_critical(h), resolve_Zd(d))

# With Z(7) <= 9 the value for m = 9..13 follows: 7m + 3.
print([f_triangle(7, m).value for m in range(9, 14)])
