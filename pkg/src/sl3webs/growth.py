"""Cylindrical growth diagrams of partitions with at most three rows.

A diagram of type word w (letters 1 and 2, standing for steps that add one
box or a two-box vertical strip) is a staircase array of partitions
gamma_{i,j}, i <= j <= i+n, with empty partitions on the diagonal, a fixed
rectangle at the far end of every row, and every unit square tied by a
local rule.  Any single row determines the whole array, and the row-to-row
map is the promotion operator on row-strict tableaux.

``dim_inv`` counts the diagrams of a given type by an independent route: a
dynamic program over dominant weights driven by the one-box and two-box
Pieri rules.
"""

from itertools import combinations

from .errors import (
    InvalidChain,
    LocalRuleViolation,
    NotAPartitionAfterSort,
    NotVerticalStrip,
)

__all__ = [
    "GrowthDiagram",
    "complement",
    "complete_from_row",
    "diagram_from_json",
    "dif",
    "dim_inv",
    "enumerate_diagrams",
    "is_vertical_strip",
    "local_rule",
    "parse_word",
    "partition",
    "partition_to_text",
    "promotion",
    "row_to_tableau",
    "tableau_to_row",
]


def partition(parts):
    """Canonical partition tuple: weakly decreasing, trailing zeros dropped."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if len(p) > 3:
        raise ValueError(f"more than 3 parts in {parts!r}")
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing in {parts!r}")
    return p


def _padded(p):
    return tuple(p) + (0,) * (3 - len(p))


def partition_to_text(p):
    if not p:
        return "∅"
    if max(p) > 9:
        return "(" + ",".join(str(x) for x in p) + ")"
    return "".join(str(x) for x in p)


def parse_word(word):
    """Type word as a tuple of letters 1 and 2, from a string or iterable."""
    if isinstance(word, str):
        letters = tuple(int(c) for c in word if not c.isspace())
    else:
        letters = tuple(int(c) for c in word)
    if any(c not in (1, 2) for c in letters):
        raise ValueError(f"type word may only contain 1 and 2, got {word!r}")
    return letters


def _strip_size(letter):
    return 1 if letter == 1 else 2


def is_vertical_strip(inner, outer):
    """True when outer/inner adds at most one box to each row."""
    a = _padded(partition(inner))
    b = _padded(partition(outer))
    return all(0 <= b[i] - a[i] <= 1 for i in range(3))


def dif(a, b):
    """Set of row indices (1-based) where two nested partitions differ.

    One argument must contain the other, with at most one box of difference
    per row; otherwise :class:`NotVerticalStrip` is raised.
    """
    pa = _padded(partition(a))
    pb = _padded(partition(b))
    deltas = [pa[i] - pb[i] for i in range(3)]
    if any(abs(d) > 1 for d in deltas):
        raise NotVerticalStrip(f"{a!r} and {b!r} differ by more than one box in a row")
    if any(d > 0 for d in deltas) and any(d < 0 for d in deltas):
        raise NotVerticalStrip(f"neither of {a!r}, {b!r} contains the other")
    return frozenset(i + 1 for i, d in enumerate(deltas) if d)


def complement(p, k):
    """Complement of a partition inside the k x 3 rectangle, rotated."""
    q = _padded(partition(p))
    if q[0] > k:
        raise ValueError(f"{p!r} does not fit in the rectangle of height {k}")
    return partition((k - q[2], k - q[1], k - q[0]))


def local_rule(g, g_below, g_right):
    """Fourth corner of a unit square of the growth array.

    INPUT:

    - ``g`` -- the corner gamma_{i,j}
    - ``g_below`` -- gamma_{i+1,j}, contained in ``g``
    - ``g_right`` -- gamma_{i,j+1}, containing ``g``

    OUTPUT: gamma_{i+1,j+1}, obtained by subtracting one box from
    ``g_right`` in every row where ``g`` and ``g_below`` differ, then
    sorting.  Raises :class:`NotAPartitionAfterSort` when the result fails
    to extend the two chains through the square.
    """
    rows = dif(g, g_below)
    out = list(_padded(partition(g_right)))
    for r in rows:
        out[r - 1] -= 1
    out.sort(reverse=True)
    if out[-1] < 0:
        raise NotAPartitionAfterSort(f"negative part in {out}")
    result = partition(out)
    try:
        ok = is_vertical_strip(g_below, result) and is_vertical_strip(result, g_right)
    except ValueError:
        ok = False
    if not ok:
        raise NotAPartitionAfterSort(
            f"{result} does not extend the chains through the square"
        )
    return result


class GrowthDiagram:
    """Completed cylindrical growth diagram.

    ``rows`` holds n+1 tuples; row i (1-based) lists gamma_{i,i..i+n}.
    Build through :func:`complete_from_row`, which validates everything.
    """

    __slots__ = ("word", "rows")

    def __init__(self, word, rows):
        self.word = tuple(word)
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def n(self):
        return len(self.word)

    @property
    def first_row(self):
        return self.rows[0]

    def entry(self, i, j):
        """gamma_{i,j} for any i, extended periodically."""
        n = self.n
        i0 = (i - 1) % n + 1
        j0 = j - (i - i0)
        if not i0 <= j0 <= i0 + n:
            raise ValueError(f"({i}, {j}) lies outside the staircase")
        return self.rows[i0 - 1][j0 - i0]

    def rebase(self, i):
        """The same cylinder based at vertex i (row i becomes the first row)."""
        row = tuple(self.entry(i, i + j) for j in range(self.n + 1))
        return complete_from_row(row)

    @property
    def rectangle(self):
        return self.rows[0][-1]

    def __eq__(self, other):
        if not isinstance(other, GrowthDiagram):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"GrowthDiagram(word={''.join(map(str, self.word))})"

    def to_text(self):
        lines = []
        for i, row in enumerate(self.rows, start=1):
            pad = "    " * (i - 1)
            lines.append(pad + ", ".join(partition_to_text(p) for p in row))
        return "\n".join(lines)

    def to_json(self):
        return {
            "word": "".join(str(c) for c in self.word),
            "first_row": [list(p) for p in self.first_row],
        }


def diagram_from_json(obj):
    word = parse_word(obj["word"])
    d = complete_from_row([partition(p) for p in obj["first_row"]])
    if d.word != word:
        raise InvalidChain(
            f"first row has type {''.join(map(str, d.word))}, not {obj['word']}"
        )
    return d


def _validate_first_row(first_row):
    row = [partition(p) for p in first_row]
    if len(row) < 2:
        raise InvalidChain("a growth diagram needs at least one step")
    if row[0] != ():
        raise InvalidChain("first entry must be the empty partition")
    word = []
    for a, b in zip(row, row[1:]):
        try:
            added = dif(b, a)
        except NotVerticalStrip as exc:
            raise InvalidChain(str(exc)) from exc
        if not is_vertical_strip(a, b) or len(added) not in (1, 2):
            raise InvalidChain(f"step {a} -> {b} is not a 1- or 2-box vertical strip")
        word.append(1 if len(added) == 1 else 2)
    last = _padded(row[-1])
    if not last[0] == last[1] == last[2]:
        raise InvalidChain(f"final entry {row[-1]} is not a rectangle")
    return row, tuple(word), last[0]


def complete_from_row(first_row):
    """Complete and validate the growth diagram determined by one row.

    INPUT:

    - ``first_row`` -- chain of n+1 partitions from the empty partition to
      a rectangle, each step a vertical strip of one or two boxes

    OUTPUT: a validated :class:`GrowthDiagram`.  Raises
    :class:`InvalidChain` for a malformed row and
    :class:`LocalRuleViolation` (with the failing square) when the sweep
    breaks down.
    """
    row, word, k = _validate_first_row(first_row)
    n = len(word)
    rect = partition((k, k, k))
    rows = [tuple(row)]
    for i in range(1, n + 1):
        prev = rows[i - 1]
        cur = [()]
        for j in range(i + 1, i + n):
            g = prev[j - i]
            g_below = cur[-1]
            g_right = prev[j - i + 1]
            try:
                cur.append(local_rule(g, g_below, g_right))
            except (NotVerticalStrip, NotAPartitionAfterSort) as exc:
                raise LocalRuleViolation(f"square ({i}, {j}): {exc}") from exc
        # the far end of every row is pinned to the rectangle; validate the
        # wrap step instead of computing it
        try:
            closing = dif(rect, cur[-1])
        except NotVerticalStrip as exc:
            raise LocalRuleViolation(f"row {i + 1} does not close onto {rect}: {exc}")
        if len(closing) != _strip_size(word[i - 1]):
            raise LocalRuleViolation(
                f"row {i + 1} closes with a {len(closing)}-box strip, "
                f"expected letter {word[i - 1]}"
            )
        cur.append(rect)
        rows.append(tuple(cur))
    diagram = GrowthDiagram(word, rows)
    # cylindrical periodicity: row n+1 is row 1 again
    assert rows[n] == rows[0], "completed diagram is not periodic"
    # complement symmetry: gamma_{j,i+n} is gamma_{i,j} rotated in the box
    for i in range(1, n + 2):
        for j in range(i, min(i + n, n + 1) + 1):
            expected = complement(rows[i - 1][j - i], k)
            assert rows[j - 1][i + n - j] == expected, (
                f"complement symmetry fails at ({i}, {j})"
            )
    return diagram


def promotion(row):
    """Second row of the diagram determined by ``row``, re-based.

    Acting on chains, this is the promotion operator on the row-strict
    tableaux that encode them; applying it n times is the identity.
    """
    d = complete_from_row(row)
    return tuple(d.entry(2, 2 + j) for j in range(d.n + 1))


def row_to_tableau(row):
    """Row-strict tableau encoding a chain: entry j sits in rows dif_j."""
    chain = [partition(p) for p in row]
    tableau = ([], [], [])
    for j, (a, b) in enumerate(zip(chain, chain[1:]), start=1):
        try:
            added = dif(b, a)
        except NotVerticalStrip as exc:
            raise InvalidChain(str(exc)) from exc
        if not is_vertical_strip(a, b) or not added:
            raise InvalidChain(f"step {a} -> {b} is not a vertical strip")
        for r in added:
            tableau[r - 1].append(j)
    return tuple(tuple(r) for r in tableau)


def tableau_to_row(tableau):
    """Inverse of :func:`row_to_tableau`."""
    rows = [tuple(r) for r in tableau]
    if len(rows) != 3:
        raise InvalidChain("a tableau here has exactly 3 rows (possibly empty)")
    n = max((max(r) for r in rows if r), default=0)
    chain = [()]
    cur = [0, 0, 0]
    for j in range(1, n + 1):
        hit = [i for i in range(3) if j in rows[i]]
        if not hit:
            raise InvalidChain(f"entry {j} missing from the tableau")
        for i in hit:
            cur[i] += 1
        try:
            chain.append(partition(cur))
        except ValueError as exc:
            raise InvalidChain(str(exc)) from exc
    return tuple(chain)


def _vstrip_additions(p, size, cap):
    """Partitions gotten by adding ``size`` boxes, one per row, parts <= cap.

    Listed with the lexicographically smallest row set first.
    """
    base = _padded(p)
    out = []
    for rows in combinations((1, 2, 3), size):
        q = list(base)
        for r in rows:
            q[r - 1] += 1
        if q[0] <= cap and all(q[i] >= q[i + 1] for i in range(2)):
            out.append(partition(q))
    return out


def enumerate_diagrams(word):
    """All growth diagrams of the given type, in lexicographic chain order.

    The first rows are generated depth-first, always adding the
    lexicographically smallest vertical strip first, so the list order is
    reproducible component indexing.
    """
    w = parse_word(word)
    if not w:
        raise ValueError("empty type word")
    boxes = sum(_strip_size(c) for c in w)
    if boxes % 3:
        return []
    k = boxes // 3
    target = partition((k, k, k))
    found = []

    def dfs(chain):
        j = len(chain) - 1
        if j == len(w):
            if chain[-1] == target:
                found.append(tuple(chain))
            return
        for q in _vstrip_additions(chain[-1], _strip_size(w[j]), k):
            chain.append(q)
            dfs(chain)
            chain.pop()

    dfs([()])
    return [complete_from_row(c) for c in found]


def dim_inv(word):
    """Number of growth diagrams of the given type, counted independently.

    Dynamic program over dominant weights (p, q): a 1 tensors with the
    one-box Pieri moves, a 2 with the two-box ones; the answer is the
    number of walks from the zero weight back to itself.
    """
    w = parse_word(word)
    if not w:
        raise ValueError("empty type word")
    state = {(0, 0): 1}
    for letter in w:
        nxt = {}
        for (p, q), c in state.items():
            if letter == 1:
                moves = [(p + 1, q)]
                if p:
                    moves.append((p - 1, q + 1))
                if q:
                    moves.append((p, q - 1))
            else:
                moves = [(p, q + 1)]
                if q:
                    moves.append((p + 1, q - 1))
                if p:
                    moves.append((p - 1, q))
            for m in moves:
                nxt[m] = nxt.get(m, 0) + c
        state = nxt
    return state.get((0, 0), 0)
