"""Reduction of growth diagrams to dual diskoids, and geometric realization.

A diagram of length n describes the pairwise distances of a closed fan of
n lattice classes.  Three local moves shrink it: a U-turn removal drops a
vertex whose neighbors coincide, a sharp-corner removal drops a vertex
whose neighbors are adjacent, and an elbow move replaces a corner vertex
by the opposite corner of its unit rhombus.  Reducing all the way to a
2-gon and replaying the moves backwards assembles the diskoid that the
convex hull of any generic realization triangulates; dualizing it gives a
non-elliptic web.

The other direction is geometric: ``realize_polygon`` builds actual
lattice classes matching the diagram, sampling each step inside the
residue stratum that keeps the prescribed distance to an anchor vertex,
and ``cross_validate`` checks the hull of the realization against the
combinatorial diskoid, vertex by vertex.
"""

import random

from .building import (
    OMEGA1,
    OMEGA2,
    ZERO_WEIGHT,
    LatticeClass,
    _sample_coeff,
    class_from_generators,
    distance,
    dual_weight,
    lattice_dual,
    lattice_meet,
    random_step,
    step_to_line,
    steps,
)
from .errors import NoDoubleElbow, PreconditionViolated, RealizationFailed
from .growth import complete_from_row, partition
from .hulls import induced_complex, path_hull_fastpath
from .series import GF, invert_upper_triangular, solve_upper_triangular
from .webs import Diskoid, dualize

__all__ = [
    "ElbowMove",
    "MoveLog",
    "RealizedPolygon",
    "SharpCornerRemoval",
    "UTurnRemoval",
    "apply_move",
    "basis_webs",
    "conditioned_step",
    "cross_validate",
    "diskoid_from_diagram",
    "elbow_move",
    "find_double_elbow",
    "find_sharp",
    "find_uturn",
    "realize_polygon",
    "reduce_to_base",
    "remove_sharp",
    "remove_uturn",
]


def _pad3(p):
    return tuple(p) + (0,) * (3 - len(p))


def _weight(p):
    """Dominant weight of a partition entry: subtract the full columns."""
    a, b, c = _pad3(p)
    return (a - c, b - c, 0)


def _letter_weight(letter):
    return OMEGA1 if letter == 1 else OMEGA2


# -- finding and applying moves ----------------------------------------------


def find_uturn(d):
    """Smallest position i whose second neighbor coincides with vertex i."""
    for i in range(1, d.n + 1):
        if _weight(d.entry(i, i + 2)) == ZERO_WEIGHT:
            return i
    return None


def find_sharp(d):
    """Smallest position i whose second neighbor is adjacent to vertex i."""
    for i in range(1, d.n + 1):
        if _weight(d.entry(i, i + 2)) in (OMEGA1, OMEGA2):
            return i
    return None


def _gamma_steps(d, i, m):
    """Geodesic step count from vertex i to vertex i+m, cyclically."""
    r = m % d.n
    if r == 0:
        return 0
    return steps(_weight(d.entry(i, i + r)))


def find_double_elbow(d):
    """A pair (i, a): elbows at i and i+a-3 bracketing a straight run.

    Vertices i+1 and i+a-2 are the two corners; the far corner bends back
    toward vertex i, detected by the step counts to vertices i+a-1 and
    i+a-2 being equal.  Scans elbow sites from the basepoint and returns
    the first that closes up.  Assumes the diagram has no U-turn and no
    sharp corner; under that hypothesis a double elbow always exists, so
    :class:`NoDoubleElbow` is defensive.
    """
    w = d.word
    n = d.n
    elbows = [i for i in range(1, n + 1) if w[i - 1] != w[i % n]]
    for i in elbows:
        k = next(j for j in range(i + 1, i + n) if w[(j - 1) % n] != w[j % n])
        a = k - i + 3
        if _gamma_steps(d, i, a - 1) == _gamma_steps(d, i, a - 2):
            return (i, a)
    raise NoDoubleElbow(f"no double elbow in diagram of type {''.join(map(str, w))}")


class UTurnRemoval:
    __slots__ = ("index",)

    def __init__(self, index):
        self.index = int(index)

    def __eq__(self, other):
        return type(other) is type(self) and other.index == self.index

    def __hash__(self):
        return hash((type(self).__name__, self.index))

    def __repr__(self):
        return f"{type(self).__name__}({self.index})"


class SharpCornerRemoval(UTurnRemoval):
    __slots__ = ()


class ElbowMove(UTurnRemoval):
    __slots__ = ()


class MoveLog:
    """Ordered list of reduction moves, each indexed in its own diagram state.

    The log is the reduction certificate: replaying it forward from the
    diagram it was computed from must land on the base 2-gon.
    """

    __slots__ = ("moves",)

    def __init__(self, moves=()):
        self.moves = tuple(moves)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __getitem__(self, k):
        return self.moves[k]

    def __eq__(self, other):
        return isinstance(other, MoveLog) and other.moves == self.moves

    def __repr__(self):
        return f"MoveLog({list(self.moves)!r})"

    def replay(self, diagram):
        """Apply the recorded moves in order and return the final diagram."""
        for move in self.moves:
            diagram = apply_move(diagram, move)
        return diagram


def apply_move(d, move):
    if isinstance(move, ElbowMove):
        return elbow_move(d, move.index)
    if isinstance(move, SharpCornerRemoval):
        return remove_sharp(d, move.index)
    if isinstance(move, UTurnRemoval):
        return remove_uturn(d, move.index)
    raise TypeError(f"not a move: {move!r}")


def _minus_column(p):
    a, b, c = _pad3(p)
    if c < 1:
        raise PreconditionViolated(f"{p!r} has no full column to remove")
    return partition((a - 1, b - 1, c - 1))


def remove_uturn(d, i):
    """Drop vertex i+1, identifying vertices i and i+2.

    INPUT:

    - ``d`` -- growth diagram with a U-turn at ``i``
    - ``i`` -- position found by :func:`find_uturn`

    OUTPUT: the diagram of the polygon with the two edges at vertex i+1
    removed, based at the identified vertex; its length is n-2.  The first
    row is the old row of vertex i from its second neighbor on, with the
    full column the merged triangle contributes removed from every entry.
    """
    if d.n <= 2:
        raise PreconditionViolated("cannot remove a U-turn from a 2-gon")
    if _weight(d.entry(i, i + 2)) != ZERO_WEIGHT:
        raise PreconditionViolated(f"no U-turn at position {i}")
    based = d.rebase(i)
    row = based.first_row
    return complete_from_row([_minus_column(p) for p in row[2:]])


def remove_sharp(d, i):
    """Drop vertex i+1, connecting vertices i and i+2 directly.

    The two are adjacent, so the old distances from vertex i shift over;
    the result is based at vertex i and has length n-1.  When the corner
    edges are both of type 2 the new type-1 edge carries three boxes fewer,
    so the full column recorded in gamma_{i,i+2} is stripped from every
    shifted entry.
    """
    if _weight(d.entry(i, i + 2)) not in (OMEGA1, OMEGA2):
        raise PreconditionViolated(f"no sharp corner at position {i}")
    based = d.rebase(i)
    row = based.first_row
    c = _pad3(row[2])[2]
    shifted = [partition(tuple(x - c for x in _pad3(p))) for p in row[2:]]
    return complete_from_row([()] + shifted)


def elbow_move(d, i):
    """Replace the corner vertex i+1 by the opposite corner of its rhombus.

    The distance from vertex i to the new corner is the flip of the old
    one between the two fundamental weights; all other vertices keep their
    distances, so the new diagram is completed from the modified first row
    of the diagram rebased at i.  Raises
    :class:`~sl3webs.errors.LocalRuleViolation` if the completion breaks
    down, which the rhombus geometry rules out.
    """
    based = d.rebase(i)
    w1, w2 = based.word[0], based.word[1]
    if w1 == w2:
        raise PreconditionViolated(f"edges at positions {i}, {i + 1} have equal type")
    if _weight(based.entry(1, 3)) == ZERO_WEIGHT:
        raise PreconditionViolated(f"vertices {i}, {i + 2} coincide, not an elbow")
    row = list(based.first_row)
    row[1] = (1, 1) if row[1] == (1,) else (1,)
    return complete_from_row(row)


# -- the reduction driver -----------------------------------------------------


def reduce_to_base(d):
    """Reduce a diagram to a 2-gon, recording every move.

    INPUT:

    - ``d`` -- any valid growth diagram

    OUTPUT: pair (base, log) where ``base`` is a 2-gon diagram and ``log``
    a :class:`MoveLog` with ``log.replay(d) == base``.

    U-turns and sharp corners are removed as soon as they exist.  When
    neither does, a double elbow is located and its leading corner flipped;
    each flip advances the corner one step along the straight run, so the
    next flip always sits at position 2 of the rebased output.  A removable
    configuration must appear before the corner reaches the far elbow; the
    loop bound is defensive.
    """
    moves = []
    cur = d
    while cur.n > 2:
        i = find_uturn(cur)
        if i is not None:
            moves.append(UTurnRemoval(i))
            cur = remove_uturn(cur, i)
            continue
        i = find_sharp(cur)
        if i is not None:
            moves.append(SharpCornerRemoval(i))
            cur = remove_sharp(cur, i)
            continue
        site, a = find_double_elbow(cur)
        for _ in range(a):
            moves.append(ElbowMove(site))
            cur = elbow_move(cur, site)
            if find_uturn(cur) is not None or find_sharp(cur) is not None:
                break
            site = 2
        else:
            raise AssertionError("elbow run did not produce a removable corner")
    return cur, MoveLog(moves)


# -- rebuilding the diskoid ---------------------------------------------------


def _arrow(u, v, letter):
    """The directed edge for a boundary step of the given type."""
    return (u, v) if letter == 1 else (v, u)


def diskoid_from_diagram(d):
    """The triangulated diskoid whose boundary distances realize ``d``.

    Reduces the diagram to a 2-gon and replays the move log backwards.
    Undoing a sharp-corner removal glues a triangle onto a boundary edge;
    undoing a U-turn removal splits off a pendant edge; undoing an elbow
    move pushes the boundary corner out by one rhombus, keeping the old
    corner as an interior vertex under two new triangles.  Walk positions
    are kept aligned with diagram positions throughout, so the result's
    boundary walk starts at the basepoint of ``d``.
    """
    base, log = reduce_to_base(d)
    states = [d]
    cur = d
    for move in log:
        cur = apply_move(cur, move)
        states.append(cur)
    if cur != base:
        raise AssertionError("move log replay does not reach the base diagram")

    n_vertices = 2
    arrows = [_arrow(0, 1, base.word[0])]
    triangles = []
    walk = [0, 1]

    for move, before in zip(reversed(log.moves), reversed(states[:-1])):
        i = move.index
        w = before.word
        here = w[i - 1]
        after = w[i % before.n]
        if isinstance(move, ElbowMove):
            v_old = n_vertices
            n_vertices += 1
            v_new = walk[1]
            arrows.append(_arrow(walk[0], v_old, here))
            arrows.append(_arrow(v_old, walk[2], after))
            arrows.append(_arrow(v_old, v_new, 1) if here == 1 else _arrow(v_new, v_old, 1))
            triangles.append((walk[0], v_old, v_new))
            triangles.append((v_old, walk[2], v_new))
            new_walk = [walk[0], v_old] + walk[2:]
        elif isinstance(move, SharpCornerRemoval):
            v2 = n_vertices
            n_vertices += 1
            arrows.append(_arrow(walk[0], v2, here))
            arrows.append(_arrow(v2, walk[1], after))
            triangles.append((walk[0], v2, walk[1]))
            new_walk = [walk[0], v2] + walk[1:]
        else:
            v2 = n_vertices
            n_vertices += 1
            arrows.append(_arrow(walk[0], v2, here))
            new_walk = [walk[0], v2, walk[0]] + walk[1:]
        r = (1 - i) % len(new_walk)
        walk = new_walk[r:] + new_walk[:r]

    return Diskoid(n_vertices, arrows, triangles, walk)


def basis_webs(word):
    """The non-elliptic webs of the given type, one per growth diagram.

    Order follows :func:`~sl3webs.growth.enumerate_diagrams`, so indices
    are reproducible.
    """
    from .growth import enumerate_diagrams

    return [dualize(diskoid_from_diagram(g)) for g in enumerate_diagrams(word)]


# -- residue linear algebra ---------------------------------------------------


def _echelon(field, vectors):
    """Row echelon basis of a span of residue vectors, as (pivot, row) pairs."""
    rows = []
    for v in vectors:
        v = [field.normalize(c) for c in v]
        for p, r in rows:
            c = v[p]
            if c != 0:
                v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, r)]
        piv = next((j for j, c in enumerate(v) if c != 0), None)
        if piv is None:
            continue
        inv = field.inv(v[piv])
        rows.append((piv, [field.mul(inv, c) for c in v]))
        rows.sort()
    return rows


def _in_span(field, rows, v):
    v = [field.normalize(c) for c in v]
    for p, r in rows:
        c = v[p]
        if c != 0:
            v = [field.sub(a, field.mul(c, b)) for a, b in zip(v, r)]
    return all(c == 0 for c in v)


def _residue_vector(x, column):
    coords = solve_upper_triangular(x.basis, column)
    return [s.coeff(0) for s in coords]


def _residue_strata(x, anchor):
    """Residue filtration of x by the scaled copies of the anchor lattice.

    The subspace at stage a is spanned by residues of the intersection
    with the anchor scaled by t^a; it shrinks from everything to zero as a
    grows.  Returns the jumps as (basis, sub_basis) pairs: lines inside
    one stage but not the next land at the same distance from the anchor,
    because the common stabilizer of the two lattices surjects onto the
    parabolic of the filtration.
    """
    field = x.field
    lo = (invert_upper_triangular(anchor.basis) * x.basis).minval()
    hi = 1 - (invert_upper_triangular(x.basis) * anchor.basis).minval()
    stages = []
    for a in range(lo, hi + 1):
        meet = lattice_meet(x.basis, anchor.basis.shift(a))
        rows = _echelon(field, [_residue_vector(x, col) for col in meet.columns()])
        stages.append(rows)
    if len(stages[0]) != 3 or stages[-1]:
        raise AssertionError("residue filtration bounds are wrong")
    return [
        (stages[k], stages[k + 1])
        for k in range(len(stages) - 1)
        if len(stages[k]) > len(stages[k + 1])
    ]


def _stratum_sample(field, rng, big, small, tries=64):
    for _ in range(tries):
        coeffs = [_sample_coeff(field, rng) for _ in big]
        v = [field.normalize(0)] * 3
        for c, (_p, r) in zip(coeffs, big):
            if c != 0:
                v = [field.add(a, field.mul(c, b)) for a, b in zip(v, r)]
        if any(c != 0 for c in v) and not _in_span(field, small, v):
            return v
    return None


def _conditioned_line(x, anchor, target, rng):
    strata = _residue_strata(x, anchor)
    matches = []
    for big, small in strata:
        rep = next(r for _p, r in big if not _in_span(x.field, small, r))
        if distance(anchor, step_to_line(x, rep)) == target:
            matches.append((big, small))
    if not matches:
        return None
    big, small = matches[rng.randrange(len(matches))] if len(matches) > 1 else matches[0]
    v = _stratum_sample(x.field, rng, big, small)
    if v is None:
        return None
    y = step_to_line(x, v)
    if distance(anchor, y) != target:
        raise AssertionError("stratum sample moved off its orbit")
    return y


def _dual_class(x):
    return class_from_generators(lattice_dual(x.basis).columns(), x.field)


def conditioned_step(x, letter, anchor, target, rng):
    """A random neighbor of ``x`` at a prescribed distance from an anchor.

    INPUT:

    - ``x`` -- the class to step from
    - ``letter`` -- 1 or 2, the type of the step
    - ``anchor``, ``target`` -- the constraint d(anchor, result) = target
    - ``rng`` -- source of randomness

    OUTPUT: a class y with d(x, y) the letter's weight and
    d(anchor, y) = target, sampled uniformly over a residue stratum
    compatible with the target, or None when no stratum is.  Steps of type
    2 are reduced to type 1 on the dual lattices, which reverse distances.
    """
    if letter == 2:
        yd = _conditioned_line(_dual_class(x), _dual_class(anchor), dual_weight(target), rng)
        return None if yd is None else _dual_class(yd)
    return _conditioned_line(x, anchor, target, rng)


# -- realizing a polygon ------------------------------------------------------


class RealizedPolygon:
    """Lattice classes realizing a growth diagram, checked on construction.

    ``classes[p]`` is the class of polygon vertex p+1; every pairwise
    distance must normalize to the corresponding diagram entry.
    """

    __slots__ = ("classes", "diagram")

    def __init__(self, classes, diagram):
        self.classes = tuple(classes)
        self.diagram = diagram
        n = diagram.n
        if len(self.classes) != n:
            raise PreconditionViolated(f"{len(self.classes)} classes for a {n}-gon")
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                got = distance(self.classes[i - 1], self.classes[j - 1])
                want = _weight(diagram.entry(i, j))
                if got != want:
                    raise PreconditionViolated(
                        f"d(x_{i}, x_{j}) = {got}, diagram says {want}"
                    )

    def __repr__(self):
        return f"RealizedPolygon({self.diagram!r})"


def _attempt_realization(d, rng, field):
    n = d.n
    w = d.word
    x = [None] * (n + 1)
    x[1] = LatticeClass.standard(field)
    if n == 2:
        x[2] = random_step(x[1], _letter_weight(w[0]), rng)
        return x[1:]
    for j in range(2, n - 1):
        x[j] = conditioned_step(x[j - 1], w[j - 2], x[1], _weight(d.entry(1, j)), rng)
        if x[j] is None:
            return None
    x[n] = conditioned_step(x[1], 3 - w[n - 1], x[n - 2], _weight(d.entry(n - 2, n)), rng)
    if x[n] is None:
        return None
    x[n - 1] = conditioned_step(
        x[n - 2], w[n - 3], x[n], dual_weight(_letter_weight(w[n - 2])), rng
    )
    if x[n - 1] is None:
        return None
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if distance(x[i], x[j]) != _weight(d.entry(i, j)):
                return None
    return x[1:]


def realize_polygon(d, rng, retry_cap=1000, field=None):
    """Generic lattice classes whose distances realize the diagram.

    INPUT:

    - ``d`` -- growth diagram
    - ``rng`` -- source of randomness
    - ``retry_cap`` -- attempts before giving up
    - ``field`` -- coefficient field; default GF(10007)

    OUTPUT: a :class:`RealizedPolygon`.  Each attempt walks the polygon
    once: vertex 1 is the standard class, vertices 2 .. n-2 are stepped
    forward conditioned on their distance from vertex 1, vertex n is
    stepped from vertex 1 backwards conditioned on vertex n-2, and vertex
    n-1 closes the gap conditioned on vertex n.  Any unsatisfiable
    condition or a failed full distance check discards the attempt.
    Raises :class:`~sl3webs.errors.RealizationFailed` when the cap runs
    out.
    """
    if retry_cap < 1:
        raise PreconditionViolated("retry_cap must be at least 1")
    if field is None:
        field = GF(10007)
    for _ in range(retry_cap):
        classes = _attempt_realization(d, rng, field)
        if classes is not None:
            return RealizedPolygon(classes, d)
    raise RealizationFailed(
        f"no generic polygon of type {''.join(map(str, d.word))} in {retry_cap} attempts"
    )


# -- cross-validation ----------------------------------------------------------


def _complex_matches(cx, disk, classes):
    """Label-preserving isomorphism test between a hull complex and a diskoid.

    Boundary diskoid vertices are pinned to the polygon classes by walk
    position; interior vertices are matched by backtracking.  Edges must
    agree as sets, arrows as type-1 distances, triangles as sets.
    """
    index_of = {v: k for k, v in enumerate(cx.vertices)}
    if len(cx.vertices) != disk.n_vertices:
        return False

    assigned = {}
    for p, v in enumerate(disk.boundary_walk):
        cls = classes[p]
        if cls not in index_of:
            return False
        if assigned.get(v, cls) != cls:
            return False
        assigned[v] = cls
    used = set(assigned.values())
    if len(used) != len(set(assigned)):
        return False

    interior = disk.interior_vertices()
    free = [c for c in cx.vertices if c not in used]
    if len(interior) != len(free):
        return False

    def ok_so_far(partial):
        for u, v in disk.arrows:
            if u in partial and v in partial:
                if distance(partial[u], partial[v]) != OMEGA1:
                    return False
        return True

    def extend(k, partial, remaining):
        if k == len(interior):
            emap = {
                tuple(sorted((index_of[partial[u]], index_of[partial[v]])))
                for u, v in disk.edges
            }
            if emap != set(cx.edges):
                return False
            tmap = {
                tuple(sorted((index_of[partial[a]], index_of[partial[b]], index_of[partial[c]])))
                for a, b, c in disk.triangles
            }
            return tmap == set(cx.triangles)
        v = interior[k]
        for cls in list(remaining):
            partial[v] = cls
            if ok_so_far(partial):
                remaining.discard(cls)
                if extend(k + 1, partial, remaining):
                    return True
                remaining.add(cls)
            del partial[v]
        return False

    return extend(0, dict(assigned), set(free))


def cross_validate(d, rng=None, retry_cap=1000, field=None):
    """True when the geometric hull of a realization matches the diskoid.

    Realizes the diagram, computes the hull of the polygon classes along
    the boundary path, takes its induced complex, and compares against the
    backward-replay diskoid with boundary vertices pinned by position.
    :class:`~sl3webs.errors.RealizationFailed` propagates.
    """
    if rng is None:
        rng = random.Random(0)
    poly = realize_polygon(d, rng, retry_cap, field)
    disk = diskoid_from_diagram(d)
    hull = path_hull_fastpath(list(poly.classes))
    cx = induced_complex(hull)
    return _complex_matches(cx, disk, poly.classes)
