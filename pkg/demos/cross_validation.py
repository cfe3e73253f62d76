"""Checking the two constructions against each other.

Every component of a type word yields a web twice over: combinatorially,
by reducing its growth diagram and replaying the moves into a diskoid; and
geometrically, by realizing the component as a generic polygon of lattice
classes and reading the triangles of its convex hull.  Both must agree.
"""

import random

from sl3webs import (
    GF,
    cross_validate,
    dim_inv,
    distance,
    enumerate_diagrams,
    realize_polygon,
)

for text in ("1212", "121212"):
    word = tuple(int(c) for c in text)
    print(f"type {text} ({dim_inv(word)} components)")
    for k, d in enumerate(enumerate_diagrams(word)):
        ok = cross_validate(d, random.Random(k))
        print(f"  component {k}: {'agree' if ok else 'MISMATCH'}")

# realization works over any prime field as well as over the rationals;
# small primes make collisions with special position more likely, so the
# realizer retries until the distance matrix is exactly right.
print()
word = (1, 2, 1, 2, 1, 2)
d = enumerate_diagrams(word)[0]
for p in (101, 10007):
    poly = realize_polygon(d, random.Random(0), field=GF(p))
    closing = distance(poly.classes[-1], poly.classes[0])
    print(f"realized over F_{p}; closing edge distance {closing}")
