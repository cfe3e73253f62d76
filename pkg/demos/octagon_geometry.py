"""Realizing an octagon of lattice classes and taking its convex hulls.

The component with the fully generic distance pattern of type 12121212
realizes as eight lattice classes over the rationals.  Its min-convex and
max-convex hulls each add three vertices, their intersection adds exactly
one, and the induced complex on the intersection is a wheel of eight
triangles around that center.
"""

import random

from sl3webs import (
    QQ,
    conv,
    distance,
    enumerate_diagrams,
    induced_complex,
    maxconv,
    minconv,
    realize_polygon,
)

word = (1, 2, 1, 2, 1, 2, 1, 2)
diagrams = enumerate_diagrams(word)
# component 8 is the one whose dual web is the wheel
poly = realize_polygon(diagrams[8], random.Random(1), field=QQ)
P = list(poly.classes)

print("pairwise distances of the realized octagon:")
for i, x in enumerate(P):
    row = ["     ."] * (i + 1)
    row += [str(distance(x, y)) for y in P[i + 1 :]]
    print("  " + "  ".join(f"{c:>9}" for c in row))

mn = minconv(P)
mx = maxconv(P)
hull = conv(P)
print()
print(f"min hull size {len(mn)} (the polygon plus {len(mn) - 8})")
print(f"max hull size {len(mx)} (the polygon plus {len(mx) - 8})")
print(f"their intersection adds {len(hull) - 8} vertex")

cx = induced_complex(hull)
v, e, t = cx.counts()
print(f"induced complex: {v} vertices, {e} edges, {t} triangles")
center = [x for x in hull if x not in P][0]
spokes = sum(1 for pair in cx.edges if center in (cx.vertices[pair[0]], cx.vertices[pair[1]]))
print(f"the extra vertex sits on {spokes} spokes: an eight-triangle wheel")
