import itertools

import pytest
from fixtures import OCTAGON_ROW1, OCTAGON_ROW2, OCTAGON_WORD

from sl3webs.errors import (
    InvalidChain,
    LocalRuleViolation,
    NotAPartitionAfterSort,
    NotVerticalStrip,
)
from sl3webs.growth import (
    GrowthDiagram,
    complement,
    complete_from_row,
    diagram_from_json,
    dif,
    dim_inv,
    enumerate_diagrams,
    is_vertical_strip,
    local_rule,
    parse_word,
    partition,
    partition_to_text,
    promotion,
    row_to_tableau,
    tableau_to_row,
)


def test_partition_normalization():
    assert partition((1, 0, 0)) == (1,)
    assert partition(()) == ()
    assert partition((4, 4, 4)) == (4, 4, 4)
    with pytest.raises(ValueError):
        partition((1, 2))
    with pytest.raises(ValueError):
        partition((1, 1, 1, 1))
    with pytest.raises(ValueError):
        partition((2, -1))


def test_partition_text():
    assert partition_to_text(()) == "∅"
    assert partition_to_text((4, 3, 3)) == "433"
    assert partition_to_text((12, 1)) == "(12,1)"


def test_parse_word():
    assert parse_word("1212") == (1, 2, 1, 2)
    assert parse_word((1, 2)) == (1, 2)
    with pytest.raises(ValueError):
        parse_word("103")


def test_dif_examples():
    assert dif((2, 1, 0), (1, 1, 0)) == {1}
    assert dif((4, 3, 3), (4, 4, 4)) == {2, 3}
    assert dif((1, 1, 0), (1, 1, 0)) == set()
    with pytest.raises(NotVerticalStrip):
        dif((3,), (1,))
    with pytest.raises(NotVerticalStrip):
        dif((2,), (1, 1))


def test_vertical_strips():
    assert is_vertical_strip((), (1, 1))
    assert is_vertical_strip((2, 1), (2, 2))
    assert not is_vertical_strip((1,), (3, 1))
    assert not is_vertical_strip((1, 1), (1,))


def test_local_rule_examples():
    assert local_rule((1,), (), (2, 1)) == (1, 1)
    assert local_rule((2, 2), (2, 1), (3, 2, 1)) == (3, 1, 1)
    # no change when the left column is constant
    assert local_rule((2, 1), (2, 1), (2, 2)) == (2, 2)
    with pytest.raises(NotAPartitionAfterSort):
        local_rule((1,), (), ())


def test_octagon_diagram():
    d = complete_from_row(OCTAGON_ROW1)
    assert d.word == OCTAGON_WORD
    assert d.rows[0] == OCTAGON_ROW1
    assert d.rows[1] == OCTAGON_ROW2
    # the octagon's rows repeat with period two
    for i in range(8):
        assert d.rows[i] == d.rows[i % 2]
    assert d.rectangle == (4, 4, 4)
    assert d.entry(3, 5) == d.rows[2][2]
    assert d.entry(11, 13) == d.entry(3, 5)


def test_octagon_rebase_and_promotion():
    d = complete_from_row(OCTAGON_ROW1)
    assert d.rebase(2).first_row == OCTAGON_ROW2
    assert d.rebase(9) == d
    assert promotion(OCTAGON_ROW1) == OCTAGON_ROW2
    row = OCTAGON_ROW1
    for _ in range(8):
        row = promotion(row)
    assert row == OCTAGON_ROW1


def test_invalid_rows():
    with pytest.raises(InvalidChain):
        complete_from_row([(), (2,)])  # horizontal pair of boxes
    with pytest.raises(InvalidChain):
        complete_from_row([(1,), (1, 1)])  # does not start empty
    with pytest.raises(InvalidChain):
        complete_from_row([(), (1,)])  # does not end at a rectangle
    with pytest.raises(InvalidChain):
        complete_from_row([()])
    with pytest.raises(InvalidChain):
        complete_from_row([(), (1, 1, 1), (1, 1, 1)])  # empty step


def test_triangle_type_111():
    row = ((), (1,), (1, 1), (1, 1, 1))
    d = complete_from_row(row)
    assert promotion(row) == row
    assert enumerate_diagrams("111") == [d]
    assert dim_inv("111") == 1


def test_octagon_tableau_roundtrip():
    t = row_to_tableau(OCTAGON_ROW1)
    assert t == ((1, 2, 4, 6), (2, 3, 5, 8), (4, 6, 7, 8))
    assert tableau_to_row(t) == OCTAGON_ROW1
    # row-strict: strictly increasing along rows
    for r in t:
        assert all(a < b for a, b in zip(r, r[1:]))


def test_tableau_roundtrip_random_words():
    for word in ("1212", "121212", "111222", "2211"):
        for d in enumerate_diagrams(word):
            assert tableau_to_row(row_to_tableau(d.first_row)) == d.first_row


def test_tableau_to_row_rejects_garbage():
    with pytest.raises(InvalidChain):
        tableau_to_row(((1,), (3,), ()))  # entry 2 missing
    with pytest.raises(InvalidChain):
        tableau_to_row(((2,), (), (1,)))  # box in row 3 before rows above
    with pytest.raises(InvalidChain):
        tableau_to_row(((1,), (1,)))


def test_enumerate_1212():
    ds = enumerate_diagrams("1212")
    assert len(ds) == 2
    assert dim_inv("1212") == 2
    # lexicographic strip order puts the (2,1) chain first
    assert ds[0].first_row == ((), (1,), (2, 1), (2, 1, 1), (2, 2, 2))
    assert ds[1].first_row == ((), (1,), (1, 1, 1), (2, 1, 1), (2, 2, 2))


def test_enumerate_degenerate_words():
    assert enumerate_diagrams("11") == []
    assert enumerate_diagrams("1") == []
    ds = enumerate_diagrams("12")
    assert len(ds) == 1
    assert ds[0].first_row == ((), (1,), (1, 1, 1))
    assert dim_inv("12") == 1
    assert dim_inv("21") == 1
    assert dim_inv("11") == 0
    with pytest.raises(ValueError):
        dim_inv("")
    with pytest.raises(ValueError):
        enumerate_diagrams("")


def test_dim_matches_enumeration_short_words():
    for n in range(1, 7):
        for word in itertools.product("12", repeat=n):
            w = "".join(word)
            assert len(enumerate_diagrams(w)) == dim_inv(w), w


def test_monotone_difs():
    order1 = [{1}, {2}, {3}]
    order2 = [{1, 2}, {1, 3}, {2, 3}]
    for word in ("12121212", "111222", "121212"):
        for d in enumerate_diagrams(word):
            n = d.n
            for i in range(1, n + 1):
                letter = d.word[i - 1]
                order = order1 if letter == 1 else order2
                difs = [
                    dif(d.entry(i, j), d.entry(i + 1, j))
                    for j in range(i + 1, i + n + 1)
                ]
                ranks = [order.index(set(s)) for s in difs]
                assert all(len(s) == letter for s in difs)
                assert ranks == sorted(ranks)


def test_complement_symmetry_enumerated():
    for word in ("1212", "121212"):
        for d in enumerate_diagrams(word):
            k = d.rectangle[0]
            n = d.n
            for i in range(1, n + 1):
                for j in range(i, i + n + 1):
                    assert d.entry(j, i + n) == complement(d.entry(i, j), k)


def test_json_and_text():
    d = complete_from_row(OCTAGON_ROW1)
    blob = d.to_json()
    assert blob["word"] == "12121212"
    assert diagram_from_json(blob) == d
    with pytest.raises(InvalidChain):
        diagram_from_json({"word": "11111111", "first_row": blob["first_row"]})
    text = d.to_text()
    assert text.splitlines()[0].startswith("∅, 1, 21, 22, 321")
    assert len(text.splitlines()) == 9
