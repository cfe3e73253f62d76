"""Evaluating elliptic webs against the non-elliptic basis.

The reduction engine rewrites circles to a factor of 3, bigons to a factor
of -2, and squares to the sum of the two reconnections, until every term
is non-elliptic.  The result does not depend on the rewrite order.
"""

import random

from sl3webs import Web, empty_web, reduce_web, web_from_edges

def show(name, combo):
    parts = []
    for web, coeff in combo:
        if web.n_edges == 0 and not web.free_loops:
            parts.append(f"{coeff} * (empty)")
        else:
            parts.append(f"{coeff} * ({web.n_edges} edges)")
    print(f"{name}  ->  {' + '.join(parts) if parts else '0'}")

# a free circle is worth 3
show("circle", reduce_web(Web((), (), (), free_loops=1)))

# a theta (two vertices, three parallel strands) is a closed bigon
theta = web_from_edges(
    [(0, 1), (0, 1), (0, 1)],
    boundary=(),
    rotations={0: [0, 1, 2], 1: [2, 1, 0]},
)
show("theta ", reduce_web(theta))

# the square web of type 1212 smooths to both strand pairings
square = web_from_edges(
    [(0, 4), (5, 1), (2, 6), (7, 3), (5, 4), (5, 6), (7, 6), (7, 4)],
    boundary=(0, 1, 2, 3),
    rotations={4: [0, 4, 7], 5: [1, 5, 4], 6: [2, 6, 5], 7: [3, 7, 6]},
)
show("square", reduce_web(square))

# rewrite order does not matter
print()
orders_agree = all(
    reduce_web(square, random.Random(k)) == reduce_web(square) for k in range(10)
)
print("ten random rewrite orders all agree:", orders_agree)

# a basis web evaluates to itself
strand = web_from_edges([(0, 1)], boundary=(0, 1))
print("a bare strand is already reduced:", list(reduce_web(strand)) == [(strand, 1)])
print("the empty web evaluates to itself:", list(reduce_web(empty_web())) == [(empty_web(), 1)])
