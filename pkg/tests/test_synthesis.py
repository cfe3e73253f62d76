import itertools
import random

import pytest
from fixtures import (
    OCTAGON_ROW1,
    hexagon_tripods_diskoid,
    octagon_classes,
    octagon_wheel_diskoid,
)

from sl3webs.building import OMEGA1, OMEGA2, adjacent, distance, dual_weight, steps
from sl3webs.errors import PreconditionViolated
from sl3webs.growth import complete_from_row, dif, enumerate_diagrams, partition
from sl3webs.hulls import conv
from sl3webs.series import QQ
from sl3webs.synthesis import (
    ElbowMove,
    MoveLog,
    RealizedPolygon,
    SharpCornerRemoval,
    UTurnRemoval,
    apply_move,
    basis_webs,
    conditioned_step,
    cross_validate,
    diskoid_from_diagram,
    elbow_move,
    find_double_elbow,
    find_sharp,
    find_uturn,
    realize_polygon,
    reduce_to_base,
    remove_sharp,
    remove_uturn,
)
from sl3webs.webs import canonical_encoding, dualize, is_cat0, is_nonelliptic, iso, rotate


def rows(*parts):
    return [partition(p) for p in parts]


def diagram(*parts):
    return complete_from_row(rows(*parts))


# An 8-gon of the octagon's type whose vertices 1 and 3 coincide.
UTURN_8GON = rows(
    (), (1,), (1, 1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2), (4, 3, 2), (4, 3, 3), (4, 4, 4)
)
# The 6-gon left after removing the U-turn.
UTURN_8GON_REDUCED = rows((), (1,), (2, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2), (3, 3, 3))

# A 13-gon with a sharp corner at vertex 2, and its full second and third rows.
SHARP_13GON = rows(
    (), (1,), (1, 1), (2, 1), (3, 2), (4, 2, 1), (4, 2, 2),
    (5, 3, 2), (5, 4, 2), (5, 5, 3), (6, 5, 3), (6, 5, 4), (6, 6, 5), (6, 6, 6),
)
SHARP_13GON_ROW2 = rows(
    (), (1,), (2,), (3, 1), (4, 1, 1), (4, 2, 1), (5, 3, 1),
    (5, 4, 1), (5, 5, 2), (6, 5, 2), (6, 5, 3), (6, 6, 4), (6, 6, 5), (6, 6, 6),
)
SHARP_13GON_ROW3 = rows(
    (), (1,), (2, 1), (3, 1, 1), (3, 2, 1), (4, 3, 1), (4, 4, 1),
    (5, 4, 2), (6, 4, 2), (6, 4, 3), (6, 5, 4), (6, 5, 5), (6, 6, 5), (6, 6, 6),
)
# The 12-gon left after removing the sharp corner, with its second row.
SHARP_13GON_REDUCED = rows(
    (), (1, 1), (2, 1), (3, 2), (4, 2, 1), (4, 2, 2), (5, 3, 2),
    (5, 4, 2), (5, 5, 3), (6, 5, 3), (6, 5, 4), (6, 6, 5), (6, 6, 6),
)
SHARP_13GON_REDUCED_ROW2 = rows(
    (), (1,), (2, 1), (3, 1, 1), (3, 2, 1), (4, 3, 1), (4, 4, 1),
    (5, 4, 2), (6, 4, 2), (6, 4, 3), (6, 5, 4), (6, 5, 5), (6, 6, 6),
)

# A 13-gon with a double elbow across vertices 1..6, and its rows 2 and 3.
ELBOW_13GON = rows(
    (), (1,), (2, 1), (3, 2), (4, 3), (4, 4), (5, 4, 1),
    (6, 4, 2), (6, 4, 3), (6, 5, 3), (6, 5, 4), (6, 5, 5), (6, 6, 5), (6, 6, 6),
)
ELBOW_13GON_ROW2 = rows(
    (), (1, 1), (2, 2), (3, 3), (4, 3), (5, 3, 1), (6, 3, 2),
    (6, 3, 3), (6, 4, 3), (6, 4, 4), (6, 5, 4), (6, 6, 4), (6, 6, 5), (6, 6, 6),
)
ELBOW_13GON_ROW3 = rows(
    (), (1, 1), (2, 2), (3, 2), (4, 2, 1), (5, 2, 2), (5, 3, 2),
    (5, 4, 2), (5, 4, 3), (5, 5, 3), (6, 5, 3), (6, 5, 4), (6, 5, 5), (6, 6, 6),
)
# The same 13-gon after the elbow move at 1: row 1 flips its second entry,
# rows 2 and 3 recomputed through the local rule.
ELBOW_13GON_MOVED_ROW2 = rows(
    (), (1,), (2, 1), (3, 2), (3, 3), (4, 3, 1), (5, 3, 2),
    (5, 3, 3), (5, 4, 3), (5, 4, 4), (5, 5, 4), (6, 5, 4), (6, 5, 5), (6, 6, 6),
)
ELBOW_13GON_MOVED_ROW3 = rows(
    (), (1, 1), (2, 2), (3, 2), (4, 2, 1), (5, 2, 2), (5, 3, 2),
    (5, 4, 2), (5, 4, 3), (5, 5, 3), (6, 5, 3), (6, 5, 4), (6, 6, 5), (6, 6, 6),
)


def octagon_diagram():
    return complete_from_row([partition(p) for p in OCTAGON_ROW1])


# -- finders -------------------------------------------------------------


def test_find_uturn():
    d = complete_from_row(UTURN_8GON)
    assert find_uturn(d) == 1
    assert find_uturn(octagon_diagram()) is None
    assert find_uturn(diagram((), (1,), (1, 1), (1, 1, 1))) is None


def test_find_sharp():
    d = complete_from_row(SHARP_13GON)
    assert find_sharp(d) == 1
    assert find_sharp(octagon_diagram()) is None
    assert find_sharp(diagram((), (1,), (1, 1), (1, 1, 1))) == 1


def test_find_double_elbow_octagon():
    assert find_double_elbow(octagon_diagram()) == (1, 4)


def test_find_double_elbow_13gon():
    d = complete_from_row(ELBOW_13GON)
    assert find_uturn(d) is None
    assert find_double_elbow(d) == (1, 6)


# -- the three moves -----------------------------------------------------


def test_remove_uturn_8gon():
    d = complete_from_row(UTURN_8GON)
    got = remove_uturn(d, 1)
    assert got == complete_from_row(UTURN_8GON_REDUCED)
    assert got.n == d.n - 2


def test_remove_uturn_requires_uturn():
    with pytest.raises(PreconditionViolated):
        remove_uturn(octagon_diagram(), 1)
    with pytest.raises(PreconditionViolated):
        remove_uturn(diagram((), (1,), (1, 1, 1)), 1)


def test_remove_sharp_13gon():
    d = complete_from_row(SHARP_13GON)
    assert tuple(d.rows[1]) == tuple(SHARP_13GON_ROW2)
    assert tuple(d.rows[2]) == tuple(SHARP_13GON_ROW3)
    got = remove_sharp(d, 1)
    want = complete_from_row(SHARP_13GON_REDUCED)
    assert got == want
    assert tuple(got.rows[1]) == tuple(SHARP_13GON_REDUCED_ROW2)
    assert got.n == d.n - 1


def test_remove_sharp_triangle():
    got = remove_sharp(diagram((), (1,), (1, 1), (1, 1, 1)), 1)
    assert got.word == (2, 1)


def test_remove_sharp_strips_full_columns():
    # a corner with two type-2 edges leaves a type-1 edge three boxes lighter
    d = diagram((), (1, 1), (2, 1, 1), (2, 2, 2))
    got = remove_sharp(d, 1)
    assert got.word == (1, 2)
    assert got.first_row == ((), (1,), (1, 1, 1))


def test_remove_sharp_requires_sharp():
    with pytest.raises(PreconditionViolated):
        remove_sharp(octagon_diagram(), 1)


def test_elbow_move_13gon():
    d = complete_from_row(ELBOW_13GON)
    assert tuple(d.rows[1]) == tuple(ELBOW_13GON_ROW2)
    assert tuple(d.rows[2]) == tuple(ELBOW_13GON_ROW3)
    got = elbow_move(d, 1)
    flipped = list(ELBOW_13GON)
    flipped[1] = partition((1, 1))
    assert got == complete_from_row(flipped)
    assert tuple(got.rows[1]) == tuple(ELBOW_13GON_MOVED_ROW2)
    assert tuple(got.rows[2]) == tuple(ELBOW_13GON_MOVED_ROW3)


def test_elbow_move_octagon_word_and_involution():
    d = octagon_diagram()
    moved = elbow_move(d, 1)
    assert moved.word == (2, 1, 1, 2, 1, 2, 1, 2)
    assert elbow_move(moved, 1) == d


def test_elbow_move_requires_elbow():
    with pytest.raises(PreconditionViolated):
        elbow_move(diagram((), (1,), (1, 1), (1, 1, 1)), 1)
    with pytest.raises(PreconditionViolated):
        elbow_move(diagram((), (1,), (1, 1, 1)), 1)


def test_elbow_move_distance_bookkeeping():
    # Flipping the corner at an elbow of types (1, 2) changes the distances
    # from the corner by omega_1 exactly on the stretch where the rows of
    # the diagram differ in row 2 alone; everything after vertex 2 is
    # untouched.
    for d in (octagon_diagram(), complete_from_row(ELBOW_13GON)):
        assert d.word[0] == 1 and d.word[1] == 2
        moved = elbow_move(d, 1)
        n = d.n
        a = next(
            j for j in range(2, n + 2) if dif(d.entry(1, j), d.entry(2, j)) == frozenset({2})
        )
        b = next(
            j
            for j in range(3, n + 2)
            if dif(d.entry(2, j), d.entry(3, j)) != frozenset({1, 2})
        )
        assert a < b
        for j in range(a, b):
            p = tuple(d.entry(2, j)) + (0,) * (3 - len(d.entry(2, j)))
            q = tuple(d.entry(1, j)) + (0,) * (3 - len(d.entry(1, j)))
            assert moved.entry(2, j) == partition((p[0] - 1, p[1], p[2]))
            assert moved.entry(2, j) == partition((q[0] - 1, q[1] - 1, q[2]))
        for i in range(3, n + 1):
            for j in range(i, n + 2):
                assert moved.entry(i, j) == d.entry(i, j)


# -- reduction driver and move log ----------------------------------------


def test_reduce_to_base_octagon():
    d = octagon_diagram()
    base, log = reduce_to_base(d)
    assert base.n == 2
    assert log.replay(d) == base
    assert len(log) <= d.n * d.n


def test_move_log_replay_and_dispatch():
    d = complete_from_row(UTURN_8GON)
    base, log = reduce_to_base(d)
    cur = d
    for move in log:
        cur = apply_move(cur, move)
    assert cur == base
    assert log == MoveLog(list(log))
    with pytest.raises(TypeError):
        apply_move(d, "uturn")


def test_move_equality():
    assert UTurnRemoval(2) == UTurnRemoval(2)
    assert UTurnRemoval(2) != SharpCornerRemoval(2)
    assert ElbowMove(1) != ElbowMove(3)
    assert repr(SharpCornerRemoval(4)) == "SharpCornerRemoval(4)"


def test_reduction_properties_small_words():
    for n in range(2, 7):
        for w in itertools.product((1, 2), repeat=n):
            for g in enumerate_diagrams(w):
                base, log = reduce_to_base(g)
                assert base.n == 2
                assert len(log) <= n * n
                assert log.replay(g) == base


# -- rebuilding diskoids ---------------------------------------------------


def test_octagon_diskoid_is_the_wheel():
    disk = diskoid_from_diagram(octagon_diagram())
    assert disk.n_vertices == 9
    assert len(disk.triangles) == 8
    assert disk.word() == (1, 2, 1, 2, 1, 2, 1, 2)
    assert is_cat0(disk)
    assert [disk.degree(v) for v in disk.interior_vertices()] == [8]
    assert dualize(disk) == dualize(octagon_wheel_diskoid())


def test_triangle_diskoid():
    disk = diskoid_from_diagram(diagram((), (1,), (1, 1), (1, 1, 1)))
    assert disk.n_vertices == 3
    assert sorted(disk.triangles) == [(0, 1, 2)]
    assert disk.word() == (1, 1, 1)


def test_tripod_12gon_appears_exactly_once():
    word = (1, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1, 2)
    target = dualize(hexagon_tripods_diskoid())
    hits = []
    for k, g in enumerate(enumerate_diagrams(word)):
        disk = diskoid_from_diagram(g)
        assert disk.word() == word
        if dualize(disk) == target:
            hits.append(k)
            assert [disk.degree(v) for v in disk.interior_vertices()] == [6]
    assert len(hits) == 1


def test_diskoid_properties_small_words():
    for n in range(2, 7):
        for w in itertools.product((1, 2), repeat=n):
            encodings = set()
            comps = enumerate_diagrams(w)
            for g in comps:
                disk = diskoid_from_diagram(g)
                assert disk.word() == w
                assert is_cat0(disk)
                web = dualize(disk)
                assert is_nonelliptic(web)
                encodings.add(canonical_encoding(web))
            assert len(encodings) == len(comps)


def test_basis_webs_order_and_types():
    webs = basis_webs("1212")
    assert len(webs) == 2
    assert all(is_nonelliptic(w) for w in webs)
    assert canonical_encoding(webs[0]) != canonical_encoding(webs[1])


def test_promotion_matches_web_rotation():
    for word in ((1, 2, 1, 2), (1, 1, 2, 2, 1, 2), (1, 2, 2, 2, 1, 2, 1, 1, 2)):
        for g in enumerate_diagrams(word):
            w = dualize(diskoid_from_diagram(g))
            w2 = dualize(diskoid_from_diagram(g.rebase(2)))
            assert iso(w2, rotate(w))


# -- realization -----------------------------------------------------------


def test_realized_polygon_accepts_octagon_lattices():
    cls = octagon_classes()
    poly = RealizedPolygon([cls[i] for i in range(1, 9)], octagon_diagram())
    assert len(poly.classes) == 8


def test_realized_polygon_rejects_wrong_matrix():
    cls = octagon_classes()
    shuffled = [cls[i] for i in (1, 3, 2, 4, 5, 6, 7, 8)]
    with pytest.raises(PreconditionViolated):
        RealizedPolygon(shuffled, octagon_diagram())


def test_realize_two_gon_first_try():
    d = diagram((), (1,), (1, 1, 1))
    for seed in range(5):
        poly = realize_polygon(d, random.Random(seed), retry_cap=1)
        assert distance(poly.classes[0], poly.classes[1]) == OMEGA1


def test_realize_octagon_over_prime_field():
    poly = realize_polygon(octagon_diagram(), random.Random(42))
    assert len(poly.classes) == 8
    assert poly.classes[0].field.p == 10007


def test_realize_octagon_over_rationals():
    poly = realize_polygon(octagon_diagram(), random.Random(5), field=QQ)
    assert poly.classes[0].field is QQ or poly.classes[0].field.p is None


def test_realize_rejects_bad_cap():
    with pytest.raises(PreconditionViolated):
        realize_polygon(octagon_diagram(), random.Random(0), retry_cap=0)


def test_conditioned_step_hits_target():
    rng = random.Random(9)
    d = octagon_diagram()
    poly = realize_polygon(d, rng)
    x1, x2 = poly.classes[0], poly.classes[1]
    # a fresh neighbor of x2 pinned to a chosen distance from x1
    for letter, target in ((1, (2, 0, 0)), (1, (1, 1, 0)), (2, (2, 1, 0))):
        y = conditioned_step(x2, letter, x1, target, rng)
        assert y is not None
        want = OMEGA1 if letter == 1 else OMEGA2
        assert distance(x2, y) == want
        assert distance(x1, y) == target
    # target zero forces the step straight back onto the anchor
    back = conditioned_step(x2, 2, x1, (0, 0, 0), rng)
    assert back == x1


def test_conditioned_step_unreachable_target_returns_none():
    rng = random.Random(9)
    poly = realize_polygon(octagon_diagram(), rng)
    x1, x2 = poly.classes[0], poly.classes[1]
    # one box plus a two-box vertical strip can never leave a single column
    assert conditioned_step(x2, 2, x1, (1, 1, 0), rng) is None
    assert conditioned_step(x2, 1, x1, (5, 0, 0), rng) is None


# -- cross-validation -------------------------------------------------------


def test_cross_validate_octagon():
    assert cross_validate(octagon_diagram(), random.Random(7))


def test_cross_validate_triangle():
    assert cross_validate(diagram((), (1,), (1, 1), (1, 1, 1)), random.Random(1))


def test_cross_validate_square_components():
    for k, g in enumerate(enumerate_diagrams("1212")):
        assert cross_validate(g, random.Random(k))


def test_hull_contains_pairwise_geodesics():
    # between any two polygon vertices the hull holds a path of adjacent
    # classes no longer than the building distance
    for word in ("111", "1212"):
        for k, g in enumerate(enumerate_diagrams(word)):
            poly = realize_polygon(g, random.Random(k))
            hull = sorted(conv(list(poly.classes)))
            nbrs = {
                v: [u for u in hull if u != v and adjacent(u, v)] for v in hull
            }
            for x, y in itertools.combinations(poly.classes, 2):
                want = steps(distance(x, y))
                depth = {x: 0}
                frontier = [x]
                while frontier and y not in depth:
                    frontier = [
                        u
                        for v in frontier
                        for u in nbrs[v]
                        if depth.setdefault(u, depth[v] + 1) == depth[v] + 1
                    ]
                assert depth.get(y) == want


def test_realization_duality_closure():
    # stepping backwards from vertex 1 uses the complementary letter, so
    # the closing edge distance comes out dual
    d = octagon_diagram()
    poly = realize_polygon(d, random.Random(3))
    closing = distance(poly.classes[-1], poly.classes[0])
    assert closing == dual_weight(distance(poly.classes[0], poly.classes[-1]))
    assert closing == OMEGA2
