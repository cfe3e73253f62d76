"""Webs as combinatorial maps, diskoids, dualization, and spider reduction.

A web is stored as a rotation system: every edge contributes two darts
(2e and 2e+1), each vertex holds its incident darts in counterclockwise
order, and each edge carries a direction.  Interior vertices are trivalent
with all edges pointing in or all pointing out; boundary vertices are
univalent and listed in cyclic order starting at the basepoint.  Closed
circles with no vertices on them are tracked by a counter.

A diskoid is a triangulated polygon (possibly with pendant edges and cut
vertices) with directed edges; ``dualize`` turns it into the web whose
vertices are the triangles.  ``reduce`` evaluates arbitrary webs into
integer combinations of non-elliptic ones using the circle, bigon, and
square relations with coefficients 3, -2, and 1 + 1.
"""

from .errors import MalformedDiskoid

__all__ = [
    "Diskoid",
    "Web",
    "WebCombination",
    "boundary_word",
    "diskoid_from_json",
    "diskoid_to_dot",
    "diskoid_to_json",
    "diskoid_to_tikz",
    "dualize",
    "empty_web",
    "faces",
    "internal_faces",
    "is_cat0",
    "is_nonelliptic",
    "iso",
    "reduce_web",
    "rotate",
    "web_from_edges",
    "web_from_json",
    "web_to_dot",
    "web_to_json",
    "web_to_tikz",
]


class Web:
    """Directed planar web as a rotation system.

    INPUT:

    - ``rot`` -- per-vertex sequences of darts in counterclockwise order;
      edge e owns darts 2e and 2e+1
    - ``src`` -- per-edge dart sitting at the edge's source vertex
    - ``boundary`` -- univalent vertex ids in cyclic order, basepoint first
    - ``free_loops`` -- number of closed circles carrying no vertices

    Interior vertices must be trivalent with a consistent direction sense.
    """

    __slots__ = ("rot", "src", "boundary", "free_loops", "_vert", "_enc")

    def __init__(self, rot, src, boundary, free_loops=0):
        self.rot = tuple(tuple(r) for r in rot)
        self.src = tuple(src)
        self.boundary = tuple(boundary)
        self.free_loops = int(free_loops)
        self._enc = None

        n_darts = 2 * len(self.src)
        vert = [None] * n_darts
        seen = 0
        for v, r in enumerate(self.rot):
            for d in r:
                if not 0 <= d < n_darts or vert[d] is not None:
                    raise ValueError(f"dart {d} missing or repeated")
                vert[d] = v
                seen += 1
        if seen != n_darts:
            raise ValueError("every dart must appear in exactly one rotation")
        self._vert = tuple(vert)

        if self.free_loops < 0:
            raise ValueError("negative free loop count")
        for e, s in enumerate(self.src):
            if s // 2 != e:
                raise ValueError(f"source dart of edge {e} is {s}")
            if vert[2 * e] == vert[2 * e + 1]:
                raise ValueError(f"edge {e} is a loop at vertex {vert[2 * e]}")
        bset = set(self.boundary)
        if len(bset) != len(self.boundary):
            raise ValueError("repeated boundary vertex")
        for v, r in enumerate(self.rot):
            if v in bset:
                if len(r) != 1:
                    raise ValueError(f"boundary vertex {v} has degree {len(r)}")
            elif len(r) != 3:
                raise ValueError(f"interior vertex {v} has degree {len(r)}")
            else:
                outs = {self.src[d // 2] == d for d in r}
                if len(outs) != 1:
                    raise ValueError(f"interior vertex {v} mixes edge directions")

    # -- basic accessors ------------------------------------------------

    @property
    def n_vertices(self):
        return len(self.rot)

    @property
    def n_edges(self):
        return len(self.src)

    def vert(self, dart):
        """Vertex the dart is attached to."""
        return self._vert[dart]

    def head(self, dart):
        """Vertex at the far end of the dart's edge."""
        return self._vert[dart ^ 1]

    def is_out(self, dart):
        """True when the dart's edge points away from the dart's vertex."""
        return self.src[dart // 2] == dart

    def edge_ends(self, e):
        """(source vertex, target vertex) of edge e."""
        s = self.src[e]
        return self._vert[s], self._vert[s ^ 1]

    def __eq__(self, other):
        if not isinstance(other, Web):
            return NotImplemented
        return canonical_encoding(self) == canonical_encoding(other)

    def __hash__(self):
        return hash(canonical_encoding(self))

    def __repr__(self):
        return (
            f"Web({self.n_vertices} vertices, {self.n_edges} edges, "
            f"boundary {len(self.boundary)}, loops {self.free_loops})"
        )


def empty_web():
    return Web((), (), ())


def web_from_edges(edges, boundary, n_vertices=None, rotations=None, free_loops=0):
    """Convenience constructor from a directed edge list.

    INPUT:

    - ``edges`` -- list of (source, target) vertex pairs; edge e gets darts
      2e at the source and 2e+1 at the target
    - ``boundary`` -- boundary vertex ids, basepoint first
    - ``rotations`` -- optional dict vertex -> list of edge ids in
      counterclockwise order (an edge id appears once per end at the
      vertex); defaults to edge-list incidence order
    """
    edges = [tuple(e) for e in edges]
    if n_vertices is None:
        n_vertices = max((max(e) for e in edges), default=-1) + 1
        n_vertices = max(n_vertices, max(boundary, default=-1) + 1)
    incident = [[] for _ in range(n_vertices)]
    for e, (u, v) in enumerate(edges):
        incident[u].append(2 * e)
        incident[v].append(2 * e + 1)
    rot = []
    for v in range(n_vertices):
        if rotations is None or v not in rotations:
            rot.append(incident[v])
            continue
        pool = list(incident[v])
        order = []
        for eid in rotations[v]:
            hit = next(d for d in pool if d // 2 == eid)
            pool.remove(hit)
            order.append(hit)
        if pool:
            raise ValueError(f"rotation at {v} does not cover all incident edges")
        rot.append(order)
    src = tuple(2 * e for e in range(len(edges)))
    return Web(rot, src, boundary, free_loops)


def boundary_word(w):
    """Type letters read off the boundary: 1 where the leg points inward."""
    letters = []
    for v in w.boundary:
        d = w.rot[v][0]
        letters.append(1 if w.is_out(d) else 2)
    return tuple(letters)


def rotate(w):
    """Same web with the basepoint advanced one boundary position."""
    if not w.boundary:
        return w
    return Web(w.rot, w.src, w.boundary[1:] + w.boundary[:1], w.free_loops)


# -- faces ---------------------------------------------------------------


def _face_next(w, dart):
    # walk the dart to its far end, then take the rotation predecessor of
    # the reversed dart: with counterclockwise rotations this traces the
    # face lying on the left of the dart
    other = dart ^ 1
    r = w.rot[w.vert(other)]
    i = r.index(other)
    return r[(i - 1) % len(r)]


def faces(w):
    """All face traces, each a tuple of darts in walking order."""
    seen = set()
    out = []
    for d0 in range(2 * w.n_edges):
        if d0 in seen:
            continue
        trace = []
        d = d0
        while d not in seen:
            seen.add(d)
            trace.append(d)
            d = _face_next(w, d)
        out.append(tuple(trace))
    return out


def internal_faces(w):
    """Faces that never touch a boundary vertex."""
    bset = set(w.boundary)
    return [
        f for f in faces(w) if all(w.vert(d) not in bset for d in f)
    ]


def is_nonelliptic(w):
    """True when the web has no closed circles and no small internal face.

    Every internal face must have at least 6 sides.  Closed components
    always carry a face smaller than that (Euler count), so they are
    rejected by the same test.
    """
    if w.free_loops:
        return False
    return all(len(f) >= 6 for f in internal_faces(w))


# -- canonical form and isomorphism ---------------------------------------


def _encode_from(w, root_dart, order):
    queue = [(w.vert(root_dart), root_dart)]
    order[w.vert(root_dart)] = len(order)
    bpos = {v: i for i, v in enumerate(w.boundary)}
    out = []
    qi = 0
    while qi < len(queue):
        v, entry = queue[qi]
        qi += 1
        r = w.rot[v]
        i = r.index(entry)
        rec = []
        for k in range(len(r)):
            d = r[(i + k) % len(r)]
            u = w.head(d)
            if u not in order:
                order[u] = len(order)
                queue.append((u, d ^ 1))
            rec.append((w.is_out(d), order[u], bpos.get(u, -1)))
        out.append((bpos.get(v, -1), tuple(rec)))
    return tuple(out)


def canonical_encoding(w):
    """Hashable key deciding basepoint-preserving isomorphism.

    Components holding boundary vertices are traversed from their smallest
    boundary position; closed components take the minimum over all root
    darts.
    """
    if w._enc is not None:
        return w._enc
    order = {}
    parts = [len(w.boundary), w.free_loops]
    for v in w.boundary:
        if v in order:
            continue
        if not w.rot[v]:
            raise ValueError(f"boundary vertex {v} has no edge")
        parts.append(_encode_from(w, w.rot[v][0], order))
    leftover = [v for v in range(w.n_vertices) if v not in order and w.rot[v]]
    while leftover:
        best = None
        best_order = None
        for v in leftover:
            for d in w.rot[v]:
                trial = dict(order)
                enc = _encode_from(w, d, trial)
                if best is None or enc < best:
                    best, best_order = enc, trial
        parts.append(best)
        order = best_order
        leftover = [v for v in leftover if v not in order]
    enc = tuple(parts)
    w._enc = enc
    return enc


def iso(w1, w2):
    """Basepoint-preserving isomorphism of directed rotation systems."""
    return canonical_encoding(w1) == canonical_encoding(w2)


# -- spider reduction ------------------------------------------------------


class WebCombination:
    """Integer combination of webs, keyed by canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        for web, coeff in dict(terms).items():
            if coeff:
                data[web] = data.get(web, 0) + coeff
        self.terms = {w: c for w, c in data.items() if c}
        words = {boundary_word(w) for w in self.terms}
        if len(words) > 1:
            raise ValueError("terms mix boundary types")

    def __eq__(self, other):
        if not isinstance(other, WebCombination):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: canonical_encoding(t[0])))

    def __repr__(self):
        return f"WebCombination({len(self.terms)} terms)"

    def scaled(self, k):
        return WebCombination({w: k * c for w, c in self.terms.items()})

    def __add__(self, other):
        data = dict(self.terms)
        for w, c in other.terms.items():
            data[w] = data.get(w, 0) + c
        return WebCombination(data)

    def to_json(self):
        return [
            {"coefficient": c, "web": web_to_json(w)}
            for w, c in self
        ]


def _stub(w, v, dead_edges):
    hits = [d for d in w.rot[v] if d // 2 not in dead_edges]
    if len(hits) != 1:
        raise AssertionError(f"vertex {v} has {len(hits)} surviving edges")
    return hits[0]


def _excise(w, dead_vertices, dead_edges, pairs):
    """Remove the given vertices and edges, splicing strands through them.

    ``pairs`` lists two-element junction tuples of dead vertices: the
    strands entering those vertices through their surviving third edges
    get connected.  Returns a new Web.
    """
    partner = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    assert set(partner) == set(dead_vertices)

    dead_vset = set(dead_vertices)
    chain_edges = set()
    chains = []
    for v in dead_vertices:
        s = _stub(w, v, dead_edges)
        far = w.head(s)
        if far in dead_vset:
            continue
        # trace inward from the live far end
        if s // 2 in chain_edges:
            continue
        segs = [s ^ 1]  # dart at the live end
        chain_edges.add(s // 2)
        cur = v
        while True:
            nxt = partner[cur]
            s2 = _stub(w, nxt, dead_edges)
            chain_edges.add(s2 // 2)
            segs.append(s2 ^ 1)  # dart at the end away from nxt
            end = w.head(s2)
            if end not in dead_vset:
                break
            cur = end
        chains.append(segs)
    # untraced stubs form closed circles through the junctions
    extra_loops = 0
    loop_edges = set()
    leftover = set()
    for v in dead_vertices:
        e = _stub(w, v, dead_edges) // 2
        if e not in chain_edges:
            leftover.add(e)
    while leftover:
        e = leftover.pop()
        extra_loops += 1
        loop_edges.add(e)
        u, x = w.edge_ends(e)
        cur = partner[x]
        while True:
            e2 = _stub(w, cur, dead_edges) // 2
            if e2 == e:
                break
            leftover.discard(e2)
            loop_edges.add(e2)
            a, b = w.edge_ends(e2)
            cur = partner[b if a == cur else a]

    # rebuild: surviving edges keep their relative order, then chain edges
    gone_edges = set(dead_edges) | chain_edges | loop_edges
    new_src = []
    dart_map = {}
    for e in range(w.n_edges):
        if e in gone_edges:
            continue
        ne = len(new_src)
        dart_map[2 * e] = 2 * ne
        dart_map[2 * e + 1] = 2 * ne + 1
        s = w.src[e]
        new_src.append(2 * ne + (s & 1))
    for segs in chains:
        ne = len(new_src)
        d_a, d_b = segs[0], segs[-1]
        # direction carried by the first segment, checked on the last
        a_is_source = w.is_out(d_a)
        assert a_is_source != w.is_out(d_b), "chain direction is inconsistent"
        dart_map[d_a] = 2 * ne
        dart_map[d_b] = 2 * ne + 1
        new_src.append(2 * ne if a_is_source else 2 * ne + 1)

    vert_map = {}
    new_rot = []
    for v in range(w.n_vertices):
        if v in dead_vset:
            continue
        vert_map[v] = len(new_rot)
        new_rot.append([dart_map[d] for d in w.rot[v]])
    boundary = [vert_map[v] for v in w.boundary]
    return Web(new_rot, new_src, boundary, w.free_loops + extra_loops)


def _reducible_faces(w):
    out = []
    for f in internal_faces(w):
        if len(f) < 6:
            assert len(f) in (2, 4), f"odd internal face {f}"
            if len({w.vert(d) for d in f}) < len(f):
                # degenerate square revisiting a corner; a smaller face
                # nearby shrinks first
                continue
            out.append(f)
    # deterministic id: smallest dart first
    keyed = []
    for f in out:
        i = f.index(min(f))
        keyed.append(f[i:] + f[:i])
    keyed.sort(key=lambda f: (len(f), f))
    return keyed


def _apply_bigon(w, face):
    d1, d2 = face
    u, v = w.vert(d1), w.vert(d2)
    return _excise(w, (u, v), {d1 // 2, d2 // 2}, [(u, v)])


def _apply_square(w, face, which):
    corners = tuple(w.vert(d) for d in face)
    dead_edges = {d // 2 for d in face}
    if which == 0:
        pairs = [(corners[0], corners[1]), (corners[2], corners[3])]
    else:
        pairs = [(corners[1], corners[2]), (corners[3], corners[0])]
    return _excise(w, corners, dead_edges, pairs)


def reduce_web(w, rng=None):
    """Evaluate a web into an integer combination of non-elliptic webs.

    Circles count 3, bigons -2 times the strand, squares the sum of the
    two adjacent-corner reconnections.  The default strategy always
    rewrites a minimal face (ties by smallest dart id); passing ``rng``
    picks uniformly among the reducible faces instead, which is how the
    confluence tests drive independent rewrite orders.
    """
    out = {}
    agenda = [(1, w)]
    while agenda:
        coeff, cur = agenda.pop()
        if cur.free_loops:
            coeff *= 3 ** cur.free_loops
            cur = Web(cur.rot, cur.src, cur.boundary, 0)
        cands = _reducible_faces(cur)
        if not cands:
            assert is_nonelliptic(cur), "terminal web still has a small face"
            out[cur] = out.get(cur, 0) + coeff
            continue
        face = cands[0] if rng is None else cands[rng.randrange(len(cands))]
        if len(face) == 2:
            agenda.append((-2 * coeff, _apply_bigon(cur, face)))
        else:
            agenda.append((coeff, _apply_square(cur, face, 0)))
            agenda.append((coeff, _apply_square(cur, face, 1)))
    return WebCombination(out)


# -- diskoids --------------------------------------------------------------


class Diskoid:
    """Triangulated polygon with directed edges and a boundary walk.

    INPUT:

    - ``n_vertices`` -- vertices are 0 .. n_vertices-1
    - ``arrows`` -- one directed pair per edge
    - ``triangles`` -- triples of vertices; each triangle's arrows must
      form a directed 3-cycle
    - ``boundary_walk`` -- closed walk (basepoint first) traversing every
      edge side not shared between two triangles; may revisit vertices
    - ``labels`` -- optional per-vertex payload

    Raises :class:`MalformedDiskoid` when the data is not a disk-shaped
    complex (triangle patches and pendant edges glued into a contractible
    whole).
    """

    __slots__ = ("n_vertices", "arrows", "edges", "triangles", "boundary_walk", "labels")

    def __init__(self, n_vertices, arrows, triangles, boundary_walk, labels=None):
        self.n_vertices = int(n_vertices)
        self.arrows = tuple(tuple(a) for a in arrows)
        self.triangles = frozenset(tuple(sorted(t)) for t in triangles)
        self.boundary_walk = tuple(boundary_walk)
        self.labels = None if labels is None else tuple(labels)

        edges = set()
        for u, v in self.arrows:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise MalformedDiskoid(f"arrow ({u}, {v}) out of range")
            if u == v:
                raise MalformedDiskoid(f"loop arrow at {u}")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise MalformedDiskoid(f"edge {e} has two arrows")
            edges.add(e)
        self.edges = frozenset(edges)
        arrow_set = set(self.arrows)

        tri_count = {e: 0 for e in self.edges}
        for t in self.triangles:
            a, b, c = t
            if len({a, b, c}) != 3:
                raise MalformedDiskoid(f"degenerate triangle {t}")
            sides = [(a, b), (b, c), (a, c)]
            for x, y in sides:
                if (x, y) not in self.edges:
                    raise MalformedDiskoid(f"triangle {t} uses missing edge ({x}, {y})")
                tri_count[(x, y)] += 1
            cyc = [p for p in ((a, b), (b, c), (c, a)) if p in arrow_set]
            anti = [p for p in ((b, a), (c, b), (a, c)) if p in arrow_set]
            if not (len(cyc) == 3 or len(anti) == 3):
                raise MalformedDiskoid(f"triangle {t} arrows do not form a 3-cycle")

        walk = self.boundary_walk
        if len(walk) < 2:
            raise MalformedDiskoid("boundary walk needs at least two steps")
        crossings = {e: [] for e in self.edges}
        for p in range(len(walk)):
            u, v = walk[p], walk[(p + 1) % len(walk)]
            e = (min(u, v), max(u, v))
            if e not in self.edges:
                raise MalformedDiskoid(f"walk step ({u}, {v}) is not an edge")
            crossings[e].append((u, v))
        for e in self.edges:
            t = tri_count[e]
            c = crossings[e]
            if t > 2:
                raise MalformedDiskoid(f"edge {e} lies in {t} triangles")
            if t + len(c) != 2:
                raise MalformedDiskoid(
                    f"edge {e} has {t} triangles and {len(c)} walk crossings"
                )
            if t == 0 and set(c) != {(e[0], e[1]), (e[1], e[0])}:
                raise MalformedDiskoid(f"pendant edge {e} not walked in both directions")

        incident = {v: set() for v in range(self.n_vertices)}
        for u, v in self.edges:
            incident[u].add(v)
            incident[v].add(u)
        if any(not nb for nb in incident.values()):
            raise MalformedDiskoid("isolated vertex")
        seen = {0} if self.n_vertices else set()
        stack = [0] if self.n_vertices else []
        while stack:
            for u in incident[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.n_vertices:
            raise MalformedDiskoid("1-skeleton is disconnected")

    @property
    def n(self):
        """Number of boundary arcs."""
        return len(self.boundary_walk)

    def interior_vertices(self):
        bset = set(self.boundary_walk)
        return [v for v in range(self.n_vertices) if v not in bset]

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def word(self):
        """Type letters along the walk: 1 where the arrow follows the walk."""
        arrows = set(self.arrows)
        out = []
        for p in range(self.n):
            u, v = self.boundary_walk[p], self.boundary_walk[(p + 1) % self.n]
            out.append(1 if (u, v) in arrows else 2)
        return tuple(out)

    def __repr__(self):
        return (
            f"Diskoid({self.n_vertices} vertices, {len(self.triangles)} triangles, "
            f"{self.n}-gon)"
        )


def is_cat0(d):
    """True when every interior vertex has degree at least 6."""
    return all(d.degree(v) >= 6 for v in d.interior_vertices())


def _oriented_triangles(d):
    """Counterclockwise vertex order per triangle, seeded from the walk.

    The walk runs counterclockwise, so the triangle on a boundary edge
    contains that walk step in its own counterclockwise cycle; neighbors
    across an interior edge traverse it oppositely.
    """
    side_owner_tri = {}
    for t in d.triangles:
        for x, y in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
            side_owner_tri.setdefault((x, y), []).append(t)
            side_owner_tri.setdefault((y, x), []).append(t)

    orient = {}
    queue = []
    walk = d.boundary_walk
    for p in range(len(walk)):
        u, v = walk[p], walk[(p + 1) % len(walk)]
        tris = set(side_owner_tri.get((u, v), ()))
        if not tris:
            continue
        (t,) = tris
        x = next(z for z in t if z not in (u, v))
        cyc = (u, v, x)
        if t in orient:
            if set((cyc, cyc[1:] + cyc[:1], cyc[2:] + cyc[:2])) != {
                orient[t],
                orient[t][1:] + orient[t][:1],
                orient[t][2:] + orient[t][:2],
            }:
                raise MalformedDiskoid(f"triangle {t} orientation conflict at the walk")
        else:
            orient[t] = cyc
            queue.append(t)
    while queue:
        t = queue.pop()
        cyc = orient[t]
        for i in range(3):
            a, b = cyc[i], cyc[(i + 1) % 3]
            for t2 in side_owner_tri[(a, b)]:
                if t2 == t:
                    continue
                x = next(z for z in t2 if z not in (a, b))
                cyc2 = (b, a, x)
                if t2 in orient:
                    rots = {cyc2, cyc2[1:] + cyc2[:1], cyc2[2:] + cyc2[:2]}
                    if orient[t2] not in rots:
                        raise MalformedDiskoid(f"triangles {t} and {t2} disagree")
                else:
                    orient[t2] = cyc2
                    queue.append(t2)
    if len(orient) != len(d.triangles):
        raise MalformedDiskoid("triangle patch not reachable from the boundary walk")
    return orient


def dualize(d):
    """Web dual to a diskoid.

    One web vertex per triangle, one boundary leg per walk step; a web
    edge crosses every diskoid edge.  For an arrow u -> v the web edge
    runs from the owner of the side (v, u) to the owner of (u, v), where
    triangles own the sides of their counterclockwise cycle and leg p owns
    the reverse of walk step p.
    """
    orient = _oriented_triangles(d)
    tris = sorted(d.triangles)
    n = d.n
    tri_id = {t: n + i for i, t in enumerate(tris)}

    owner = {}
    for t in tris:
        cyc = orient[t]
        for i in range(3):
            side = (cyc[i], cyc[(i + 1) % 3])
            if side in owner:
                raise MalformedDiskoid(f"side {side} owned twice")
            owner[side] = tri_id[t]
    walk = d.boundary_walk
    for p in range(n):
        side = (walk[(p + 1) % n], walk[p])
        if side in owner:
            raise MalformedDiskoid(f"side {side} owned twice")
        owner[side] = p

    edges = []
    edge_of = {}
    for u, v in sorted(d.arrows):
        if (u, v) not in owner or (v, u) not in owner:
            raise MalformedDiskoid(f"edge ({u}, {v}) has an unowned side")
        edge_of[(min(u, v), max(u, v))] = len(edges)
        edges.append((owner[(v, u)], owner[(u, v)]))

    rotations = {}
    for t in tris:
        cyc = orient[t]
        sides = [(cyc[i], cyc[(i + 1) % 3]) for i in range(3)]
        rotations[tri_id[t]] = [
            edge_of[(min(a, b), max(a, b))] for a, b in sides
        ]
    try:
        return web_from_edges(
            edges,
            boundary=tuple(range(n)),
            n_vertices=n + len(tris),
            rotations=rotations,
        )
    except ValueError as exc:
        raise MalformedDiskoid(str(exc)) from exc


# -- serialization and drawing ---------------------------------------------


def web_to_json(w):
    return {
        "edges": [list(w.edge_ends(e)) for e in range(w.n_edges)],
        "rotations": [
            [[d // 2, 0 if w.is_out(d) else 1] for d in r] for r in w.rot
        ],
        "boundary": list(w.boundary),
        "free_loops": w.free_loops,
    }


def web_from_json(obj):
    edges = [tuple(e) for e in obj["edges"]]
    rotations = {}
    for v, recs in enumerate(obj["rotations"]):
        rotations[v] = [eid for eid, _flag in recs]
    return web_from_edges(
        edges,
        boundary=obj["boundary"],
        n_vertices=len(obj["rotations"]),
        rotations=rotations,
        free_loops=obj.get("free_loops", 0),
    )


def diskoid_to_json(d):
    out = {
        "n_vertices": d.n_vertices,
        "arrows": [list(a) for a in d.arrows],
        "triangles": sorted(list(t) for t in d.triangles),
        "boundary_walk": list(d.boundary_walk),
    }
    if d.labels is not None:
        out["labels"] = list(d.labels)
    return out


def diskoid_from_json(obj):
    return Diskoid(
        obj["n_vertices"],
        [tuple(a) for a in obj["arrows"]],
        [tuple(t) for t in obj["triangles"]],
        obj["boundary_walk"],
        labels=obj.get("labels"),
    )


def _web_layout(w):
    import math

    pos = {}
    nb = len(w.boundary)
    for i, v in enumerate(w.boundary):
        ang = math.pi / 2 - 2 * math.pi * i / max(nb, 1)
        pos[v] = (math.cos(ang), math.sin(ang))
    interior = [v for v in range(w.n_vertices) if v not in pos]
    for v in interior:
        pos[v] = (0.0, 0.0)
    adj = {v: [] for v in range(w.n_vertices)}
    for e in range(w.n_edges):
        u, v = w.edge_ends(e)
        adj[u].append(v)
        adj[v].append(u)
    for _ in range(60):
        for v in interior:
            if adj[v]:
                xs = [pos[u][0] for u in adj[v]]
                ys = [pos[u][1] for u in adj[v]]
                pos[v] = (sum(xs) / len(xs), sum(ys) / len(ys))
    return pos


def web_to_dot(w, name="web"):
    lines = [f"digraph {name} {{"]
    bset = set(w.boundary)
    for i, v in enumerate(w.boundary):
        lines.append(f'  n{v} [label="b{i + 1}", shape=circle];')
    for v in range(w.n_vertices):
        if v not in bset:
            lines.append(f'  n{v} [label="", shape=point];')
    for e in range(w.n_edges):
        u, v = w.edge_ends(e)
        lines.append(f"  n{u} -> n{v};")
    if w.free_loops:
        lines.append(f"  // {w.free_loops} free loop(s)")
    lines.append("}")
    return "\n".join(lines)


def web_to_tikz(w):
    pos = _web_layout(w)
    lines = ["\\begin{tikzpicture}[scale=2]"]
    bset = set(w.boundary)
    for i, v in enumerate(w.boundary):
        x, y = pos[v]
        lines.append(
            f"  \\node[circle, draw, inner sep=1pt] (n{v}) at ({x:.3f}, {y:.3f}) "
            f"{{\\tiny {i + 1}}};"
        )
    for v in range(w.n_vertices):
        if v not in bset:
            x, y = pos[v]
            lines.append(f"  \\node[circle, fill, inner sep=1pt] (n{v}) at ({x:.3f}, {y:.3f}) {{}};")
    for e in range(w.n_edges):
        u, v = w.edge_ends(e)
        lines.append(f"  \\draw[->] (n{u}) -- (n{v});")
    if w.free_loops:
        lines.append(f"  % {w.free_loops} free loop(s)")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)


def _diskoid_layout(d):
    import math

    pos = {}
    walk = d.boundary_walk
    n = len(walk)
    for p, v in enumerate(walk):
        if v not in pos:
            ang = math.pi / 2 - 2 * math.pi * p / n
            pos[v] = (math.cos(ang), math.sin(ang))
    interior = [v for v in range(d.n_vertices) if v not in pos]
    for v in interior:
        pos[v] = (0.0, 0.0)
    adj = {v: set() for v in range(d.n_vertices)}
    for u, v in d.edges:
        adj[u].add(v)
        adj[v].add(u)
    for _ in range(60):
        for v in interior:
            if adj[v]:
                xs = [pos[u][0] for u in adj[v]]
                ys = [pos[u][1] for u in adj[v]]
                pos[v] = (sum(xs) / len(xs), sum(ys) / len(ys))
    return pos


def diskoid_to_dot(d, name="diskoid"):
    lines = [f"digraph {name} {{"]
    for v in range(d.n_vertices):
        label = v if d.labels is None else d.labels[v]
        lines.append(f'  n{v} [label="{label}"];')
    for u, v in sorted(d.arrows):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines)


def diskoid_to_tikz(d):
    pos = _diskoid_layout(d)
    lines = ["\\begin{tikzpicture}[scale=2]"]
    for v in range(d.n_vertices):
        x, y = pos[v]
        label = v if d.labels is None else d.labels[v]
        lines.append(
            f"  \\node[circle, draw, inner sep=1pt] (n{v}) at ({x:.3f}, {y:.3f}) "
            f"{{\\tiny {label}}};"
        )
    for u, v in sorted(d.arrows):
        lines.append(f"  \\draw[->] (n{u}) -- (n{v});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines)
