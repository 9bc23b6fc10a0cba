"""
Closed orientable triangulations given by tetrahedron face gluings.

Conventions
-----------
Tetrahedra are indexed 0..n-1 and their vertices are labelled 0,1,2,3.
Face f of a tetrahedron is the face opposite vertex f.  A gluing of face
f1 of tetrahedron t1 to face f2 of tetrahedron t2 is recorded as a
permutation p of {0,1,2,3} mapping vertex labels of t1 to vertex labels
of t2, with p[f1] = f2.  The gluing map is stored in both directions (the
reverse direction carries the inverse permutation).

The text format accepted by parse_triangulation() has one line per glued
face pair::

    t1:f1 -> t2:f2 perm=abcd

where abcd is p[0]p[1]p[2]p[3].  Each unordered pair of faces appears on
exactly one line; '#' starts a comment.

Edges of a tetrahedron are indexed 0..5 in the order
(0,1),(0,2),(0,3),(1,2),(1,3),(2,3); vertices 0..3.  Edge and vertex
classes are the equivalence classes of tetrahedron edges/vertices under
the gluing maps, computed by union-find.  Edge classes track relative
orientation so that points along an edge class can be ordered
consistently; an edge identified with itself in reverse is rejected.
"""

from .errors import (UnglueedFace, DoubleGluing, BadPermutation,
                     NonOrientable, InvalidEdge, NotClosedManifold)

# The six edges of a tetrahedron as sorted vertex pairs.
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {pair: i for i, pair in enumerate(EDGES)}

_EVEN_PERMS = {
    (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2),
    (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 2, 0),
    (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1),
    (3, 0, 2, 1), (3, 1, 0, 2), (3, 2, 1, 0),
}


def perm_sign(p):
    """Sign of a permutation of {0,1,2,3} given as a 4-tuple."""
    return 1 if tuple(p) in _EVEN_PERMS else -1


def perm_inverse(p):
    inv = [0, 0, 0, 0]
    for i in range(4):
        inv[p[i]] = i
    return tuple(inv)


def edge_index(a, b):
    """Index 0..5 of the tetrahedron edge with endpoints a and b."""
    return EDGE_INDEX[(a, b) if a < b else (b, a)]


class _UnionFind:
    """Union-find with an optional parity bit relative to the root."""

    def __init__(self, track_parity=False):
        self.parent = {}
        self.parity = {} if track_parity else None

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            if self.parity is not None:
                self.parity[x] = 0

    def find(self, x):
        # Returns (root, parity of x relative to root).
        root, p = x, 0
        while self.parent[root] != root:
            if self.parity is not None:
                p ^= self.parity[root]
            root = self.parent[root]
        # Path compression.
        node = x
        q = p
        while self.parent[node] != node:
            nxt = self.parent[node]
            if self.parity is not None:
                nq = q ^ self.parity[node]
                self.parity[node] = q
                q = nq
            self.parent[node] = root
            node = nxt
        return root, p

    def union(self, x, y, rel=0):
        """Unite x and y with parity(x) ^ parity(y) == rel.

        Returns False if x and y were already united with the opposite
        relative parity.
        """
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == rel
        self.parent[ry] = rx
        if self.parity is not None:
            self.parity[ry] = px ^ py ^ rel
        return True


class Triangulation:
    """
    A closed orientable 3-manifold triangulation.

    Immutable after construction.  Attributes:

    - tet_count
    - gluings: dict (t, f) -> (t', f', perm) with perm a 4-tuple, stored
      in both directions
    - face_classes: list of (side1, side2, perm) with side = (t, f),
      side1 lexicographically least, perm mapping side1 labels to side2
      labels; sorted by side1
    - edge_classes: list of edge classes; each class is a list of
      (t, e, flipped) incidences, where flipped says whether the edge's
      canonical direction (low vertex to high vertex) disagrees with the
      class's reference direction
    - vertex_classes: list of lists of (t, v)
    - orientation: list of +1/-1 per tetrahedron, a consistent orientation
    """

    def __init__(self, tet_count, gluing_list):
        """
        gluing_list: iterable of (t1, f1, t2, f2, perm) describing each
        glued face pair exactly once.
        """
        if tet_count <= 0:
            raise BadPermutation("triangulation needs at least one tetrahedron")
        self.tet_count = tet_count
        self.gluings = {}
        for (t1, f1, t2, f2, perm) in gluing_list:
            perm = tuple(perm)
            for t, f in ((t1, f1), (t2, f2)):
                if not (0 <= t < tet_count and 0 <= f <= 3):
                    raise BadPermutation(
                        "face %d:%d out of range" % (t, f))
            if sorted(perm) != [0, 1, 2, 3]:
                raise BadPermutation("perm=%s is not a permutation" % (perm,))
            if perm[f1] != f2:
                raise BadPermutation(
                    "perm %s does not map face %d to face %d" % (perm, f1, f2))
            if (t1, f1) == (t2, f2):
                raise BadPermutation(
                    "face %d:%d glued to itself" % (t1, f1))
            if (t1, f1) in self.gluings or (t2, f2) in self.gluings:
                raise DoubleGluing(
                    "face %d:%d or %d:%d glued twice" % (t1, f1, t2, f2))
            self.gluings[(t1, f1)] = (t2, f2, perm)
            self.gluings[(t2, f2)] = (t1, f1, perm_inverse(perm))
        for t in range(tet_count):
            for f in range(4):
                if (t, f) not in self.gluings:
                    raise UnglueedFace("face %d:%d is not glued" % (t, f))

        self.face_classes = []
        for (t, f), (t2, f2, perm) in sorted(self.gluings.items()):
            if (t, f) <= (t2, f2):
                self.face_classes.append(((t, f), (t2, f2), perm))

        self._build_orientation()
        self._build_edge_classes()
        self._build_vertex_classes()

        euler = (len(self.vertex_classes) - len(self.edge_classes)
                 + len(self.face_classes) - self.tet_count)
        if euler != 0:
            raise NotClosedManifold(
                "V - E + F - T = %d != 0; not a closed 3-manifold" % euler)

    # -- skeleton construction -------------------------------------------

    def _build_orientation(self):
        # A gluing permutation must be orientation-reversing on the face,
        # i.e. odd, whenever the two tetrahedra carry the same orientation.
        uf = _UnionFind(track_parity=True)
        for t in range(self.tet_count):
            uf.add(t)
        for (side1, side2, perm) in self.face_classes:
            rel = 0 if perm_sign(perm) == -1 else 1
            if not uf.union(side1[0], side2[0], rel):
                raise NonOrientable("gluing %s -> %s is orientation-reversing"
                                    % (side1, side2))
        self.orientation = []
        for t in range(self.tet_count):
            _, p = uf.find(t)
            self.orientation.append(1 if p == 0 else -1)

    def _build_edge_classes(self):
        uf = _UnionFind(track_parity=True)
        for t in range(self.tet_count):
            for e in range(6):
                uf.add((t, e))
        for (side1, side2, perm) in self.face_classes:
            (t1, f1), (t2, f2) = side1, side2
            verts = [v for v in range(4) if v != f1]
            for i in range(3):
                for j in range(i + 1, 3):
                    a, b = verts[i], verts[j]          # a < b
                    ia, ib = perm[a], perm[b]
                    e1 = edge_index(a, b)
                    e2 = edge_index(ia, ib)
                    flip = 1 if ia > ib else 0
                    if not uf.union((t1, e1), (t2, e2), flip):
                        raise InvalidEdge(
                            "edge %s of tet %d is identified with itself "
                            "in reverse" % (EDGES[e1], t1))
        groups = {}
        for t in range(self.tet_count):
            for e in range(6):
                root, parity = uf.find((t, e))
                groups.setdefault(root, []).append((t, e, parity))
        # Deterministic indexing: classes ordered by least (t, e); within a
        # class, parity is re-expressed relative to that least incidence.
        classes = sorted(groups.values(), key=lambda g: min(g)[0:2])
        self.edge_classes = []
        self.edge_class_of = {}
        for idx, group in enumerate(classes):
            group.sort()
            base_parity = group[0][2]
            cls = [(t, e, parity ^ base_parity) for (t, e, parity) in group]
            self.edge_classes.append(cls)
            for (t, e, flipped) in cls:
                self.edge_class_of[(t, e)] = (idx, flipped)

    def _build_vertex_classes(self):
        uf = _UnionFind()
        for t in range(self.tet_count):
            for v in range(4):
                uf.add((t, v))
        for (side1, side2, perm) in self.face_classes:
            (t1, f1), (t2, f2) = side1, side2
            for v in range(4):
                if v != f1:
                    uf.union((t1, v), (t2, perm[v]))
        groups = {}
        for t in range(self.tet_count):
            for v in range(4):
                root, _ = uf.find((t, v))
                groups.setdefault(root, []).append((t, v))
        classes = sorted(groups.values(), key=min)
        self.vertex_classes = [sorted(g) for g in classes]
        self.vertex_class_of = {}
        for idx, group in enumerate(self.vertex_classes):
            for tv in group:
                self.vertex_class_of[tv] = idx

    # -- queries ----------------------------------------------------------

    def edge_degrees(self):
        """Degree (number of tetrahedron-edge incidences) per edge class."""
        return [len(cls) for cls in self.edge_classes]

    @property
    def edge_count(self):
        return len(self.edge_classes)

    @property
    def vertex_count(self):
        return len(self.vertex_classes)

    @property
    def face_count(self):
        return len(self.face_classes)

    # -- serialization ----------------------------------------------------

    def gluing_lines(self):
        lines = []
        for (side1, side2, perm) in self.face_classes:
            lines.append("%d:%d -> %d:%d perm=%s" % (
                side1[0], side1[1], side2[0], side2[1],
                "".join(str(x) for x in perm)))
        return lines

    def to_text(self):
        return "\n".join(self.gluing_lines()) + "\n"

    def to_json_dict(self):
        return {
            "tet_count": self.tet_count,
            "gluings": [
                {"from": list(side1), "to": list(side2), "perm": list(perm)}
                for (side1, side2, perm) in self.face_classes
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        gluing_list = [
            (g["from"][0], g["from"][1], g["to"][0], g["to"][1],
             tuple(g["perm"]))
            for g in data["gluings"]
        ]
        return cls(data["tet_count"], gluing_list)


def parse_triangulation(text):
    """
    Parse the gluing file format into a Triangulation.

    Raises UnglueedFace, DoubleGluing, BadPermutation, NonOrientable,
    InvalidEdge or NotClosedManifold if the input fails validation.
    """
    gluing_list = []
    tet_count = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            lhs, rest = line.split("->")
            rhs, permpart = rest.split("perm=")
            t1, f1 = (int(x) for x in lhs.strip().split(":"))
            t2, f2 = (int(x) for x in rhs.strip().split(":"))
            perm = tuple(int(c) for c in permpart.strip())
            if len(perm) != 4:
                raise ValueError
        except ValueError:
            raise BadPermutation("line %d: cannot parse %r" % (lineno, raw))
        gluing_list.append((t1, f1, t2, f2, perm))
        tet_count = max(tet_count, t1 + 1, t2 + 1)
    if not gluing_list:
        raise UnglueedFace("no gluings found in input")
    return Triangulation(tet_count, gluing_list)
