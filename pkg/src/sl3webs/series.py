"""Exact Laurent-polynomial arithmetic and lattice normal forms.

Scalars are finite Laurent polynomials in one variable ``t`` with exact
coefficients, either rationals (:class:`fractions.Fraction`) or a prime
field ``F_p``.  They stand in for elements of the Laurent series field
``K = k((t))``: any computation that would need an honest power series
(inverting a unit, eliminating against a pivot) is carried out modulo an
explicit power ``t^M`` whose exponent is chosen so that the truncation
cannot change the answer.  The key fact is that a full-rank span ``L`` of
columns contains ``t^M * O^3`` once ``M`` exceeds
``val(det A) - 2 * minval`` for any nonsingular column triple ``A``, so
column operations may be reduced mod ``t^M`` without moving ``L``.

The two normal forms computed here are a column Hermite form over the
valuation ring ``O = k[[t]]`` (canonical bases for lattices) and the
elementary-divisor exponents of a nonsingular square matrix (relative
position of two lattices).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import inf

from .errors import RankDeficient, SingularMatrix

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CoefficientField:
    """The coefficient domain of scalars: Q when ``p`` is None, else F_p.

    Coefficients are stored as ``fractions.Fraction`` over Q and as ints in
    ``range(p)`` over F_p.  Instances compare equal by characteristic, so a
    field object can be carried around freely as a tag.
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if not _is_prime(p):
                raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def is_rational(self):
        return self.p is None

    def normalize(self, c):
        if self.p is None:
            return c if isinstance(c, Fraction) else Fraction(c)
        return c % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def coeff_to_str(self, c):
        return str(c)

    def coeff_to_json(self, c):
        if self.p is None:
            return str(c)
        return int(c)

    def coeff_from_json(self, obj):
        if self.p is None:
            return Fraction(obj)
        return int(obj) % self.p

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and self.p == other.p

    def __hash__(self):
        return hash(("CoefficientField", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = CoefficientField()

DEFAULT_PRIME = 10007


def GF(p):
    """Return the prime field with ``p`` elements."""
    return CoefficientField(p)


class LaurentScalar:
    """A finite Laurent polynomial ``sum c_e * t^e`` with exact coefficients.

    INPUT:

    - ``field`` -- a :class:`CoefficientField`
    - ``terms`` -- dict mapping exponent to coefficient; zero coefficients
      are dropped on construction, so ``terms`` is empty iff the scalar is 0

    Instances are treated as immutable; all arithmetic returns new objects.
    """

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms):
        clean = {}
        for e, c in terms.items():
            c = field.normalize(c)
            if c != 0:
                clean[int(e)] = c
        self.field = field
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def one(cls, field):
        return cls(field, {0: 1})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, {e: c})

    def is_zero(self):
        return not self.terms

    def val(self):
        """Order of vanishing at t = 0; ``math.inf`` for the zero scalar."""
        return min(self.terms) if self.terms else inf

    def coeff(self, e):
        zero = Fraction(0) if self.field.p is None else 0
        return self.terms.get(e, zero)

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(out.get(e, 0), c)
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentScalar(f, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return LaurentScalar(f, {e: f.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        f = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = f.add(out.get(e, 0), f.mul(c1, c2))
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentScalar(f, out)

    def scale(self, c):
        f = self.field
        c = f.normalize(c)
        return LaurentScalar(f, {e: f.mul(a, c) for e, a in self.terms.items()})

    def shift(self, k):
        """Multiply by ``t^k``."""
        return LaurentScalar(self.field, {e + k: c for e, c in self.terms.items()})

    def truncate(self, order):
        """Drop all terms of exponent >= ``order``."""
        return LaurentScalar(
            self.field, {e: c for e, c in self.terms.items() if e < order}
        )

    def split_at(self, a):
        """Return ``(q, r)`` with ``self = q * t^a + r`` and ``r`` supported below ``a``."""
        hi = {}
        lo = {}
        for e, c in self.terms.items():
            if e >= a:
                hi[e - a] = c
            else:
                lo[e] = c
        return LaurentScalar(self.field, hi), LaurentScalar(self.field, lo)

    def _check(self, other):
        if not isinstance(other, LaurentScalar) or other.field != self.field:
            raise TypeError("mixed scalar domains")

    def __eq__(self, other):
        return (
            isinstance(other, LaurentScalar)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, tuple(sorted(self.terms.items()))))
        return self._hash

    def key(self):
        """A sortable, hashable encoding of the scalar."""
        return tuple(sorted(self.terms.items()))

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            parts.append(f"{self.field.coeff_to_str(self.terms[e])}*t^{e}")
        return " + ".join(parts)

    def to_json(self):
        return [
            {"e": e, "c": self.field.coeff_to_json(self.terms[e])}
            for e in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, field, obj):
        return cls(
            field, {int(t["e"]): field.coeff_from_json(t["c"]) for t in obj}
        )

    def __repr__(self):
        return f"<{self.to_text()}>"


class LaurentMatrix:
    """A dense matrix of :class:`LaurentScalar` entries.

    Stored row-major as a tuple of tuples.  Lattice code uses columns as
    generators, so column accessors are provided alongside row ones.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            for r in rows:
                if len(r) != width:
                    raise ValueError("ragged rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        self.rows = rows

    @classmethod
    def from_columns(cls, field, cols):
        cols = [tuple(c) for c in cols]
        if not cols:
            raise ValueError("no columns")
        nrows = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(nrows)])

    @classmethod
    def identity(cls, field, n=3):
        one = LaurentScalar.one(field)
        zero = LaurentScalar.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def scalar_diag(cls, field, exponents):
        """Diagonal matrix with entries ``t^e`` for ``e`` in ``exponents``."""
        zero = LaurentScalar.zero(field)
        n = len(exponents)
        return cls(
            field,
            [
                [LaurentScalar.monomial(field, exponents[i]) if i == j else zero for j in range(n)]
                for i in range(n)
            ],
        )

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return [self.rows[i][j] for i in range(self.nrows)]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return LaurentMatrix(self.field, list(zip(*self.rows)))

    def hstack(self, other):
        if other.nrows != self.nrows or other.field != self.field:
            raise ValueError("shape or domain mismatch")
        return LaurentMatrix(
            self.field, [self.rows[i] + other.rows[i] for i in range(self.nrows)]
        )

    def shift(self, k):
        """Multiply every entry by ``t^k``."""
        return LaurentMatrix(self.field, [[f.shift(k) for f in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.ncols != other.nrows or self.field != other.field:
            raise ValueError("shape or domain mismatch")
        zero = LaurentScalar.zero(self.field)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for l in range(self.ncols):
                    a = self.rows[i][l]
                    b = other.rows[l][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(self.field, out)

    def minval(self):
        """Minimum valuation over all entries (``inf`` for a zero matrix)."""
        m = inf
        for r in self.rows:
            for f in r:
                v = f.val()
                if v < m:
                    m = v
        return m

    def det(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of non-square matrix")
        r = self.rows
        if n == 1:
            return r[0][0]
        if n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        if n == 3:
            return (
                r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
            )
        raise ValueError("only sizes 1..3 supported")

    def __eq__(self, other):
        return (
            isinstance(other, LaurentMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, tuple(f.key() for r in self.rows for f in r)))

    def key(self):
        return tuple(f.key() for r in self.rows for f in r)

    def __repr__(self):
        body = "; ".join(
            ", ".join(f.to_text() for f in row) for row in self.rows
        )
        return f"LaurentMatrix[{body}]"


def unit_inverse_trunc(f, order):
    """Inverse of a valuation-zero scalar, correct modulo ``t^order``.

    Newton iteration ``g <- g * (2 - f * g)`` doubles the precision each
    round, starting from the inverse of the constant term.
    """
    if f.val() != 0:
        raise ValueError("inverse requires a unit of valuation 0")
    field = f.field
    g = LaurentScalar.constant(field, field.inv(f.coeff(0)))
    two = LaurentScalar.constant(field, 2)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        g = (g * (two - f.truncate(prec) * g)).truncate(prec)
    return g


def _column_sub(col, q, other, order):
    """col - q * other, entrywise, truncated below ``t^order``."""
    return [(a - q * b).truncate(order) for a, b in zip(col, other)]


def _column_scale(col, u, order):
    return [(a * u).truncate(order) for a in col]


def truncation_order(mat):
    """A working precision ``M`` with ``t^M * O^3`` inside the column span.

    Picks the first nonsingular column triple ``A`` (by lexicographic column
    indices) and returns ``val(det A) - 2 * minval(mat) + 1``.  Raises
    :class:`RankDeficient` when no triple is nonsingular, i.e. when the
    columns do not span ``K^3``.
    """
    if mat.nrows != 3:
        raise ValueError("expected 3 rows")
    for triple in combinations(range(mat.ncols), 3):
        sub = LaurentMatrix.from_columns(mat.field, [mat.column(j) for j in triple])
        d = sub.det()
        if not d.is_zero():
            return d.val() - 2 * mat.minval() + 1
    raise RankDeficient("columns do not span K^3")


def hermite_over_O(mat):
    """Canonical column Hermite form of a full-rank 3 x k matrix over O.

    INPUT:

    - ``mat`` -- a 3 x k :class:`LaurentMatrix` whose columns span ``K^3``

    OUTPUT: the unique 3 x 3 upper-triangular basis of the O-span of the
    columns whose diagonal entries are plain powers ``t^(a_i)`` and whose
    row-``i`` entries right of the diagonal are supported below ``t^(a_i)``.
    Two generating sets span the same lattice iff their forms are equal.

    Raises :class:`RankDeficient` when the columns do not span ``K^3``.

    The row for the pivot is chosen bottom-to-top; within a row the pivot
    is a minimal-valuation entry, ties to the leftmost column.  All column
    operations happen modulo ``t^M`` for the :func:`truncation_order` bound,
    which keeps every intermediate scalar finite without moving the lattice.
    """
    order = truncation_order(mat)
    field = mat.field
    cols = [[f.truncate(order) for f in mat.column(j)] for j in range(mat.ncols)]
    remaining = list(range(len(cols)))
    pivot_for_row = {}
    for row in (2, 1, 0):
        best = None
        for j in remaining:
            v = cols[j][row].val()
            if v is not inf and (best is None or v < cols[best][row].val()):
                best = j
        if best is None:
            raise RankDeficient(f"no pivot available in row {row}")
        a = cols[best][row].val()
        unit = cols[best][row].shift(-a)
        col_min = min(f.val() for f in cols[best] if f.terms)
        inv = unit_inverse_trunc(unit, order - min(col_min, 0))
        cols[best] = _column_scale(cols[best], inv, order)
        cols[best][row] = LaurentScalar.monomial(field, a)
        remaining.remove(best)
        for j in remaining:
            g = cols[j][row]
            if g.is_zero():
                continue
            q = g.shift(-a)
            cols[j] = _column_sub(cols[j], q, cols[best], order)
            cols[j][row] = LaurentScalar.zero(field)
        pivot_for_row[row] = best
    out = [cols[pivot_for_row[r]] for r in range(3)]
    # Reduce above-diagonal entries so the form is canonical, not just echelon.
    for j in (1, 2):
        for i in range(j - 1, -1, -1):
            a_i = out[i][i].val()
            q, rem = out[j][i].split_at(a_i)
            if not q.is_zero():
                out[j] = _column_sub(out[j], q, out[i], order)
            out[j][i] = rem
    return LaurentMatrix.from_columns(field, out)


def smith_exponents(mat):
    """Elementary-divisor exponents of a nonsingular 3 x 3 matrix over O[t^-1].

    Returns the descending triple ``(a_1 >= a_2 >= a_3)`` such that
    ``U * mat * V = diag(t^a_3, t^a_2, t^a_1)`` for some matrices ``U, V``
    invertible over ``O``.  Raises :class:`SingularMatrix` when ``det = 0``.
    """
    if mat.nrows != 3 or mat.ncols != 3:
        raise ValueError("expected a 3 x 3 matrix")
    d = mat.det()
    if d.is_zero():
        raise SingularMatrix("matrix is singular over K")
    m = mat.minval()
    order = d.val() - 2 * m + 1
    field = mat.field
    grid = [[mat.entry(i, j).truncate(order) for j in range(3)] for i in range(3)]
    rows = [0, 1, 2]
    cols = [0, 1, 2]
    exps = []
    while rows:
        pi, pj = None, None
        for i in rows:
            for j in cols:
                v = grid[i][j].val()
                if v is not inf and (pi is None or v < grid[pi][pj].val()):
                    pi, pj = i, j
        if pi is None:
            raise SingularMatrix("ran out of pivots")
        a = grid[pi][pj].val()
        exps.append(a)
        inv = unit_inverse_trunc(grid[pi][pj].shift(-a), order - min(m, 0))
        for i in rows:
            grid[i][pj] = (grid[i][pj] * inv).truncate(order)
        grid[pi][pj] = LaurentScalar.monomial(field, a)
        for i in rows:
            if i == pi or grid[i][pj].is_zero():
                continue
            q = grid[i][pj].shift(-a)
            for j in cols:
                grid[i][j] = (grid[i][j] - q * grid[pi][j]).truncate(order)
            grid[i][pj] = LaurentScalar.zero(field)
        for j in cols:
            if j == pj or grid[pi][j].is_zero():
                continue
            q = grid[pi][j].shift(-a)
            for i in rows:
                grid[i][j] = (grid[i][j] - q * grid[i][pj]).truncate(order)
            grid[pi][j] = LaurentScalar.zero(field)
        rows.remove(pi)
        cols.remove(pj)
    if exps != sorted(exps):
        raise AssertionError("pivot valuations not nondecreasing")
    if sum(exps) != d.val():
        raise AssertionError("exponent sum disagrees with det valuation")
    return tuple(reversed(exps))


def solve_upper_triangular(tri, vec):
    """Exact coordinates of ``vec`` in the basis given by a canonical form.

    ``tri`` must be upper triangular with monomial diagonal (the shape
    produced by :func:`hermite_over_O`).  Division by the diagonal is a
    plain exponent shift, so the result is exact over ``K``.
    """
    coords = [None, None, None]
    residue = list(vec)
    for i in (2, 1, 0):
        a = tri.entry(i, i).val()
        x = residue[i].shift(-a)
        coords[i] = x
        for r in range(i):
            residue[r] = residue[r] - x * tri.entry(r, i)
    return coords


def invert_upper_triangular(tri):
    """Exact inverse of a canonical-form matrix."""
    field = tri.field
    zero = LaurentScalar.zero(field)
    one = LaurentScalar.one(field)
    cols = []
    for j in range(3):
        e = [one if i == j else zero for i in range(3)]
        cols.append(solve_upper_triangular(tri, e))
    return LaurentMatrix.from_columns(field, cols)
