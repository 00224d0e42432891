"""
Closed forms for the extremal size
==================================

How many edges can a triangle-free graph have when every degree is at most
``d`` and no matching is larger than ``m``?  Where the answer is proven it is
a single number; elsewhere it comes with a status so nothing unproven is
printed as fact.
"""

from tfextremal.formulas import f_gen, f_triangle, h_triangle, in_proven_domain, resolve_Zd

# A pure star forest always gives d*m edges.  The surplus over that comes
# from odd components with a near-perfect matching.
for d, m in [(2, 5), (4, 9), (6, 13), (3, 3)]:
    v = f_triangle(d, m)
    print(f"f({d},{m}) = {v.value:3d}  [{v.status}; {v.case}]")

# Z(d) sets the size of the best component.  It is known exactly for even d
# and small d; for odd d >= 7 only an interval is known.
for d in range(2, 12):
    print(d, resolve_Zd(d), resolve_Zd(d, assume_conjecture=True))

# Outside the proven region the value is a range over the admissible Z(d),
# unless conjectures are assumed.
print(f_triangle(9, 30))
print(f_triangle(9, 30, assume_conjectures=True))

# Cost of forbidding triangles: compare with unrestricted graphs.
print(" d\\m" + "".join(f"{m:4d}" for m in range(1, 13)))
for d in range(1, 8):
    cells = []
    for m in range(1, 13):
        cells.append(f"{h_triangle(d, m):4d}" if in_proven_domain(d, m) else "   .")
    print(f"{d:4d}" + "".join(cells))

print("general graphs, d=5 m=11:", f_gen(5, 11).value, "triangle-free:", f_triangle(5, 11).value)
