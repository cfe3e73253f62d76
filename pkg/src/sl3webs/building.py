"""Vertices of the rank-2 affine building for SL3.

A vertex is a homothety class of full O-lattices in K^3, stored as the
canonical scale-normalized basis: the Hermite form of any generating set,
shifted by the unique power of ``t`` that puts the lattice inside ``O^3``
but not inside ``t * O^3``.  Class equality is bit-equality of bases.

Distances are SL3 dominant weights.  ``d(x,y)`` expresses a basis of ``y``
in a basis of ``x``, reads off the elementary-divisor exponents, negates,
sorts, and normalizes the last entry to zero.  The two fundamental weights
``omega_1 = (1,0,0)`` and ``omega_2 = (1,1,0)`` are the adjacency types:
an ``omega_1``-neighbor of ``[L]`` corresponds to a line in the residue
space ``L / tL`` and an ``omega_2``-neighbor to a plane.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionViolated
from .series import (
    QQ,
    CoefficientField,
    LaurentMatrix,
    LaurentScalar,
    hermite_over_O,
    invert_upper_triangular,
    smith_exponents,
    solve_upper_triangular,
)

OMEGA1 = (1, 0, 0)
OMEGA2 = (1, 1, 0)
ZERO_WEIGHT = (0, 0, 0)

#: Rational coefficients for random residue choices are drawn from this range.
RATIONAL_SAMPLE_RANGE = 10007


def is_dominant(w):
    return len(w) == 3 and w[0] >= w[1] >= w[2] == 0


def dual_weight(w):
    """The weight of the reversed distance: (m1, m2, 0) -> (m1, m1 - m2, 0)."""
    a, b, c = sorted((-w[0], -w[1], -w[2]), reverse=True)
    return (a - c, b - c, 0)


def steps(w):
    """Number of edges on a geodesic of type ``w`` = a*omega_1 + b*omega_2: a + b."""
    return w[0]


def weight_components(w):
    """Coefficients (a, b) with w = a*omega_1 + b*omega_2."""
    return (w[0] - w[1], w[1] - w[2])


def letter_weight(letter):
    if letter == 1:
        return OMEGA1
    if letter == 2:
        return OMEGA2
    raise ValueError(f"letter must be 1 or 2, got {letter!r}")


def weight_letter(w):
    if w == OMEGA1:
        return 1
    if w == OMEGA2:
        return 2
    raise ValueError(f"{w} is not a fundamental weight")


def _weight_from_exponents(exps):
    a1, a2, a3 = exps
    mu = sorted((-a1, -a2, -a3), reverse=True)
    return (mu[0] - mu[2], mu[1] - mu[2], 0)


class LatticeClass:
    """Homothety class of a full O-lattice, held by its canonical basis.

    Construct through :func:`class_from_generators` (or the convenience
    factories); the constructor trusts its input.
    """

    __slots__ = ("basis", "_key", "_hash")

    def __init__(self, basis):
        self.basis = basis
        self._key = basis.key()
        self._hash = hash(self._key)

    @property
    def field(self):
        return self.basis.field

    @classmethod
    def standard(cls, field):
        """The class of O^3 itself."""
        return cls(LaurentMatrix.identity(field))

    @classmethod
    def from_diagonal(cls, field, exponents):
        """Class of the diagonal lattice spanned by t^(e_i) * e_i."""
        return class_from_generators(
            LaurentMatrix.scalar_diag(field, list(exponents)).columns(), field
        )

    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, LatticeClass) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        cols = [
            " + ".join(f"({f.to_text()})e{i+1}" for i, f in enumerate(col) if not f.is_zero())
            for col in self.basis.columns()
        ]
        return "[" + "; ".join(cols) + "]"

    def to_json(self):
        return lattice_to_json(self.basis)


def class_from_generators(vectors, field=None):
    """Canonical homothety class of the lattice the given columns generate.

    INPUT:

    - ``vectors`` -- iterable of columns (each a list of 3 LaurentScalar)
      spanning ``K^3``, or a :class:`LaurentMatrix` with 3 rows
    - ``field`` -- optional, for the matrix-free call styles

    Raises ``RankDeficient`` when the span is a proper subspace.
    """
    if isinstance(vectors, LaurentMatrix):
        mat = vectors
    else:
        vectors = list(vectors)
        if field is None:
            field = vectors[0][0].field
        mat = LaurentMatrix.from_columns(field, vectors)
    h = hermite_over_O(mat)
    s = -h.minval()
    if s != 0:
        h = h.shift(s)
    return LatticeClass(h)


@lru_cache(maxsize=1 << 18)
def _distance_cached(x, y):
    rel = invert_upper_triangular(x.basis) * y.basis
    return _weight_from_exponents(smith_exponents(rel))


def distance(x, y):
    """Dominant-weight distance d(x, y)."""
    if x == y:
        return ZERO_WEIGHT
    return _distance_cached(x, y)


def adjacent(x, y):
    return distance(x, y) in (OMEGA1, OMEGA2)


def lattice_contains(basis, vec):
    """Whether a column vector lies in the lattice with the given canonical basis."""
    return all(
        c.is_zero() or c.val() >= 0 for c in solve_upper_triangular(basis, vec)
    )


def lattice_dual(mat):
    """Canonical basis of the dual lattice {v : <v, L> in O}."""
    h = mat if _is_canonical_shape(mat) else hermite_over_O(mat)
    return hermite_over_O(invert_upper_triangular(h).transpose())


def _is_canonical_shape(mat):
    if mat.nrows != 3 or mat.ncols != 3:
        return False
    for i in range(3):
        for j in range(3):
            f = mat.entry(i, j)
            if i == j:
                if len(f.terms) != 1 or list(f.terms.values())[0] != 1:
                    return False
            elif i > j and not f.is_zero():
                return False
    return True


def lattice_join(a, b):
    """Canonical basis of the lattice sum L_a + L_b (representative level)."""
    return hermite_over_O(a.hstack(b))


def lattice_meet(a, b):
    """Canonical basis of the intersection L_a meet L_b (representative level).

    Computed through duality: (L_a meet L_b)* = L_a* + L_b*, and the dual of
    a lattice with canonical triangular basis ``C`` is spanned by the columns
    of the inverse transpose of ``C``.
    """
    return lattice_dual(lattice_join(lattice_dual(a), lattice_dual(b)))


def join(x, y):
    """Class-level sum, computed on the canonical scale-normalized bases."""
    return class_from_generators(lattice_join(x.basis, y.basis))


def meet(x, y):
    """Class-level intersection, computed on the canonical scale-normalized bases."""
    return class_from_generators(lattice_meet(x.basis, y.basis))


def _meet_chain(x, z):
    """Classes [L_x meet t^a L_z] for increasing a, deduplicated, from [x] to [z]."""
    n = steps(distance(x, z))
    out = []
    for a in range(-(n + 1), n + 2):
        c = class_from_generators(lattice_meet(x.basis, z.basis.shift(a)))
        if not out or out[-1] != c:
            if c not in out:
                out.append(c)
    return out


def _join_chain(x, z):
    """Classes [L_x + t^a L_z] for decreasing a, deduplicated, from [x] to [z]."""
    n = steps(distance(x, z))
    out = []
    for a in range(n + 1, -(n + 2), -1):
        c = class_from_generators(lattice_join(x.basis, z.basis.shift(a)))
        if not out or out[-1] != c:
            if c not in out:
                out.append(c)
    return out


def common_neighbor(x, y, z):
    """The unique vertex adjacent to all of x, y, z.

    Requires x, y, z pairwise distinct with d(x,y), d(y,z) the two distinct
    fundamental weights in either order.  The answer is the middle vertex of
    the geodesic from x to z on the other side of the strip from y: meets
    for the (omega_1, omega_2) configuration, sums for (omega_2, omega_1).
    """
    if x == y or y == z or x == z:
        raise PreconditionViolated("common_neighbor needs pairwise distinct vertices")
    d1 = distance(x, y)
    d2 = distance(y, z)
    if (d1, d2) == (OMEGA1, OMEGA2):
        chain = _meet_chain(x, z)
    elif (d1, d2) == (OMEGA2, OMEGA1):
        chain = _join_chain(x, z)
    else:
        raise PreconditionViolated(
            f"common_neighbor needs distances (omega_1, omega_2) in some order, got {d1}, {d2}"
        )
    if len(chain) != 3:
        raise PreconditionViolated(
            "x and z are not at distance omega_1 + omega_2"
        )
    n = chain[1]
    for v in (x, y, z):
        if not adjacent(n, v):
            raise AssertionError("constructed vertex fails adjacency")
    return n


def _sample_coeff(field, rng):
    if field.p is None:
        return Fraction(rng.randrange(RATIONAL_SAMPLE_RANGE))
    return rng.randrange(field.p)


def _sample_nonzero_vector(field, rng, length=3):
    while True:
        v = [_sample_coeff(field, rng) for _ in range(length)]
        if any(c != 0 for c in v):
            return v


def step_to_line(x, coeffs):
    """The omega_1-neighbor spanned by the residue line with the given coordinates.

    ``coeffs`` are three field constants, not all zero, read in the columns
    of the canonical basis of ``x``.
    """
    field = x.field
    cols = x.basis.columns()
    v = [LaurentScalar.zero(field) for _ in range(3)]
    for c, col in zip(coeffs, cols):
        if c != 0:
            v = [a + b.scale(c) for a, b in zip(v, col)]
    gens = [v] + [[f.shift(1) for f in col] for col in cols]
    return class_from_generators(gens, field)


def step_to_plane(x, covector):
    """The omega_2-neighbor given by the residue plane annihilated by ``covector``.

    ``covector`` has three field constants, not all zero; the plane consists
    of residue vectors orthogonal to it in basis coordinates.
    """
    field = x.field
    cols = x.basis.columns()
    pivot = next(j for j in range(3) if covector[j] != 0)
    inv = field.inv(covector[pivot])
    gens = []
    for i in range(3):
        if i == pivot:
            continue
        ratio = field.neg(field.mul(covector[i], inv))
        gen = [a + b.scale(ratio) for a, b in zip(cols[i], cols[pivot])]
        gens.append(gen)
    gens += [[f.shift(1) for f in col] for col in cols]
    return class_from_generators(gens, field)


def random_step(x, w, rng):
    """A uniformly random neighbor y of x with d(x, y) = w.

    For ``w = omega_1`` this lifts a uniformly random line in the residue
    space ``L/tL``; for ``w = omega_2`` a uniformly random plane.  Residue
    coefficients are drawn from the coefficient field (a fixed integer range
    over Q).  The result always satisfies the stated distance.
    """
    field = x.field
    if w == OMEGA1:
        y = step_to_line(x, _sample_nonzero_vector(field, rng))
    elif w == OMEGA2:
        y = step_to_plane(x, _sample_nonzero_vector(field, rng))
    else:
        raise PreconditionViolated(f"step weight must be omega_1 or omega_2, got {w}")
    if distance(x, y) != w:
        raise AssertionError("random step failed its distance postcondition")
    return y


def field_to_json(field):
    if field.p is None:
        return {"field": "Q"}
    return {"field": "Fp", "p": field.p}


def field_from_json(obj):
    kind = obj.get("field")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return CoefficientField(int(obj["p"]))
    raise ValueError(f"unknown field tag {kind!r}")


def lattice_to_json(mat):
    out = field_to_json(mat.field)
    out["columns"] = [[f.to_json() for f in col] for col in mat.columns()]
    return out


def lattice_from_json(obj):
    field = field_from_json(obj)
    cols = [
        [LaurentScalar.from_json(field, t) for t in col] for col in obj["columns"]
    ]
    return LaurentMatrix.from_columns(field, cols)


def class_from_json(obj):
    return class_from_generators(lattice_from_json(obj))
