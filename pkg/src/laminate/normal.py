"""
Normal and almost-normal coordinates, matching equations, weights.

Coordinate layout
-----------------
A coordinate vector over a triangulation with n tetrahedra has 10n
nonnegative integer entries, tetrahedron-major::

    10*t + 0..3   triangles; triangle i cuts off vertex i
    10*t + 4..6   quadrilaterals; quad q separates the opposite edge pair
                  QUAD_PAIRS[q]
    10*t + 7..9   octagons; octagon q meets both edges of QUAD_PAIRS[q]
                  twice and the other four edges once

Quad/oct type q is indexed by the pair of opposite edges
QUAD_PAIRS[q] = (edge containing vertex 0, complementary edge):

    q = 0: (0,1) | (2,3)
    q = 1: (0,2) | (1,3)
    q = 2: (0,3) | (1,2)

Disk-type combinatorics (frozen; validated against the cell-complex
Euler characteristic oracle in surfaces.py):

- A triangle of type i has one boundary arc in each face f != i, cutting
  off corner i of that face, and meets the three edges at vertex i once.
- A quad of type q has one arc in each face f; the arc cuts off the
  corner paired with f in QUAD_PAIRS[q].  It meets the four edges not in
  its pair once each.
- An octagon of type q has two arcs in each face f, cutting off the two
  corners of the half of QUAD_PAIRS[q] not containing f; it meets the
  two pair edges twice each and the other four edges once each.  (This
  is the unique connected normal boundary curve of length 8 for each
  pair; its boundary closes up into a single octagonal circle, which the
  surface builder asserts.)

Matching equations: one equation per (face class, arc type), where the
three arc types of a face are indexed by the face corner they cut off.
The arc cutting off corner v of face f receives contributions from
triangle v, from the quad whose pair contains edge {f,v}, and from the
two octagon types whose pairs separate f from v.
"""

from fractions import Fraction
from itertools import product

from .cones import RationalCone, extreme_rays, hilbert_basis
from .errors import Inadmissible, IncompatibleQuads
from .triangulation import EDGES, EDGE_INDEX, edge_index

COORDS_PER_TET = 10

QUAD_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))

# Quad type whose separated pair contains a given edge.
QUAD_TYPE_OF_EDGE = [None] * 6
for _q, (_ea, _eb) in enumerate(QUAD_PAIRS):
    QUAD_TYPE_OF_EDGE[EDGE_INDEX[_ea]] = _q
    QUAD_TYPE_OF_EDGE[EDGE_INDEX[_eb]] = _q

# Edges met by each disk type (local index 0..9), with multiplicities.
DISK_EDGE_WEIGHTS = []
for _i in range(4):
    DISK_EDGE_WEIGHTS.append(
        tuple(1 if _i in EDGES[_e] else 0 for _e in range(6)))
for _q in range(3):
    DISK_EDGE_WEIGHTS.append(
        tuple(0 if QUAD_TYPE_OF_EDGE[_e] == _q else 1 for _e in range(6)))
for _q in range(3):
    DISK_EDGE_WEIGHTS.append(
        tuple(2 if QUAD_TYPE_OF_EDGE[_e] == _q else 1 for _e in range(6)))
DISK_EDGE_WEIGHTS = tuple(DISK_EDGE_WEIGHTS)

# Boundary arc counts: ARC_DISKS[(f, v)] = local disk indices contributing
# one arc that cuts off corner v of face f.
ARC_DISKS = {}
for _f in range(4):
    for _v in range(4):
        if _v == _f:
            continue
        contributors = [_v]                      # triangle v
        contributors.append(4 + QUAD_TYPE_OF_EDGE[edge_index(_f, _v)])
        for _q in range(3):
            half0, half1 = QUAD_PAIRS[_q]
            if (_f in half0) != (_v in half0):   # f, v in different halves
                contributors.append(7 + _q)
        ARC_DISKS[(_f, _v)] = tuple(contributors)

ARC_COUNT_PER_DISK = (3, 3, 3, 3, 4, 4, 4, 8, 8, 8)


def tri_index(t, i):
    return COORDS_PER_TET * t + i


def quad_index(t, q):
    return COORDS_PER_TET * t + 4 + q


def oct_index(t, q):
    return COORDS_PER_TET * t + 7 + q


def vector_length(tri):
    return COORDS_PER_TET * tri.tet_count


def zero_vector(tri):
    return (0,) * vector_length(tri)


def quad_oct_profile(v, t):
    """
    The quad/oct usage of tetrahedron t in vector v: a list of local disk
    indices 4..9 with nonzero weight.
    """
    base = COORDS_PER_TET * t
    return [k for k in range(4, 10) if v[base + k] != 0]


def arc_count(v, t, f, w):
    """Number of arcs of v's disks in face f of tet t cutting off corner w."""
    base = COORDS_PER_TET * t
    return sum(v[base + k] for k in ARC_DISKS[(f, w)])


class MatchingSystem:
    """
    The integer matrix of normal-arc matching equations of a triangulation.

    rows[i] is a coefficient tuple over the full coordinate space; labels[i]
    is (face_class_index, corner) where corner is the cut-off vertex on the
    class's first side.  Coefficients are +1 for side-1 contributions and
    -1 for side-2 contributions (they accumulate when both sides lie in the
    same tetrahedron).
    """

    def __init__(self, tri):
        self.triangulation = tri
        n = vector_length(tri)
        rows = []
        labels = []
        for idx, (side1, side2, perm) in enumerate(tri.face_classes):
            (t1, f1), (t2, f2) = side1, side2
            for v in range(4):
                if v == f1:
                    continue
                row = [0] * n
                for k in ARC_DISKS[(f1, v)]:
                    row[COORDS_PER_TET * t1 + k] += 1
                for k in ARC_DISKS[(f2, perm[v])]:
                    row[COORDS_PER_TET * t2 + k] -= 1
                rows.append(tuple(row))
                labels.append((idx, v))
        self.rows = tuple(rows)
        self.labels = tuple(labels)

    def residual(self, v):
        return tuple(sum(c * x for c, x in zip(row, v)) for row in self.rows)

    def __len__(self):
        return len(self.rows)

    def to_json_dict(self):
        return {
            "rows": [list(row) for row in self.rows],
            "labels": [list(label) for label in self.labels],
        }


def matching_system(tri):
    return MatchingSystem(tri)


class AdmissibilityReport:
    """Outcome of is_admissible with the failed constraints listed."""

    def __init__(self, matching_failures, quad_violations, almost_normal_errors):
        self.matching_failures = matching_failures
        self.quad_violations = quad_violations
        self.almost_normal_errors = almost_normal_errors

    @property
    def admissible(self):
        return not (self.matching_failures or self.quad_violations
                    or self.almost_normal_errors)

    def __bool__(self):
        return self.admissible

    def messages(self):
        out = []
        for (cls, corner, value) in self.matching_failures:
            out.append("matching equation (face class %d, corner %d) has "
                       "residual %d" % (cls, corner, value))
        for t in self.quad_violations:
            out.append("tetrahedron %d uses more than one quad/oct "
                       "direction" % t)
        out.extend(self.almost_normal_errors)
        return out


def is_admissible(tri, v, system=None):
    """
    Check nonnegativity is assumed; returns an AdmissibilityReport that is
    truthy exactly when v satisfies the matching equations, the quad/oct
    constraint (at most one of the six quad/oct coordinates nonzero per
    tetrahedron) and the almost-normal constraint (at most one octagon
    coordinate nonzero in the whole vector, with value at most 1).
    """
    if len(v) != vector_length(tri):
        raise Inadmissible("vector has length %d, expected %d"
                           % (len(v), vector_length(tri)))
    if any(x < 0 for x in v):
        raise Inadmissible("vector has negative entries")
    if system is None:
        system = matching_system(tri)
    matching_failures = []
    for row, label, value in zip(system.rows, system.labels,
                                 system.residual(v)):
        if value != 0:
            matching_failures.append((label[0], label[1], value))
    quad_violations = [t for t in range(tri.tet_count)
                       if len(quad_oct_profile(v, t)) > 1]
    almost = []
    octs = [(t, q, v[oct_index(t, q)]) for t in range(tri.tet_count)
            for q in range(3) if v[oct_index(t, q)] != 0]
    if len(octs) > 1:
        almost.append("more than one octagon coordinate is nonzero")
    if any(x > 1 for (_, _, x) in octs):
        almost.append("an octagon coordinate exceeds 1")
    return AdmissibilityReport(matching_failures, quad_violations, almost)


def satisfies_embedding_constraints(tri, v, system=None):
    """
    True when v satisfies the matching equations and the per-tetrahedron
    quad/oct constraint.  This is the precondition for rebuilding a surface;
    unlike full admissibility it allows octagon coordinates above one
    (parallel octagon copies are still embeddable, just not almost normal).
    """
    report = is_admissible(tri, v, system=system)
    return not (report.matching_failures or report.quad_violations)


def edge_weights(tri, v):
    """
    Intersection count of v with each edge class, computed linearly from
    the disk types at the class's least incidence.  For vectors satisfying
    the matching equations every incidence gives the same count.
    """
    out = []
    for cls in tri.edge_classes:
        t, e, _ = cls[0]
        base = COORDS_PER_TET * t
        out.append(sum(v[base + k] * DISK_EDGE_WEIGHTS[k][e]
                       for k in range(COORDS_PER_TET)))
    return out


def weight(tri, v):
    """Total weight |S intersect 1-skeleton| of the surface of v."""
    return sum(edge_weights(tri, v))


def haken_sum(tri, v, w):
    """
    The Haken sum of two coordinate vectors: componentwise addition,
    provided the sum still satisfies the quad/oct constraint.  Euler
    characteristic and weight are additive under this sum.
    """
    s = tuple(a + b for a, b in zip(v, w))
    for t in range(tri.tet_count):
        if len(quad_oct_profile(s, t)) > 1:
            raise IncompatibleQuads(
                "tetrahedron %d would receive two quad/oct directions" % t)
    return s


def vertex_link_vector(tri, vertex_class):
    """The linking sphere of a vertex class: one triangle per incidence."""
    v = [0] * vector_length(tri)
    for (t, i) in tri.vertex_classes[vertex_class]:
        v[tri_index(t, i)] = 1
    return tuple(v)


def is_vertex_linking(tri, v):
    """
    True when v is a nonnegative integer combination of vertex-linking
    vectors: all quad and octagon coordinates vanish and the triangle
    weight is constant on each vertex class.
    """
    for t in range(tri.tet_count):
        if quad_oct_profile(v, t):
            return False
    for cls in tri.vertex_classes:
        values = {v[tri_index(t, i)] for (t, i) in cls}
        if len(values) > 1:
            return False
    return True


def parse_vector(text, tri=None):
    """Comma-separated integers -> coordinate tuple (validated length)."""
    try:
        v = tuple(int(part.strip()) for part in text.split(",")
                  if part.strip())
    except ValueError:
        raise Inadmissible("vector must be comma-separated integers")
    if tri is not None and len(v) != vector_length(tri):
        raise Inadmissible("vector has length %d, expected %d"
                           % (len(v), vector_length(tri)))
    return v


def matching_cone(tri, support=None, system=None):
    """The cone of nonnegative solutions of the matching equations."""
    if system is None:
        system = matching_system(tri)
    return RationalCone(system.rows, vector_length(tri), support)


def iter_orthant_supports(tri, include_octs=False):
    """
    The supports covering the quad/oct constraint: all triangle
    coordinates plus one choice of at most one quad (or, when requested,
    octagon) direction per tetrahedron, with at most one octagon direction
    overall.  Deterministic order.
    """
    n = tri.tet_count
    triangles = [tri_index(t, i) for t in range(n) for i in range(4)]
    quad_choices = [None, 4, 5, 6]
    oct_placements = [None]
    if include_octs:
        oct_placements += [(t, k) for t in range(n) for k in (7, 8, 9)]
    for placement in oct_placements:
        free_tets = [t for t in range(n)
                     if placement is None or t != placement[0]]
        for combo in product(quad_choices, repeat=len(free_tets)):
            support = set(triangles)
            if placement is not None:
                support.add(COORDS_PER_TET * placement[0] + placement[1])
            for t, choice in zip(free_tets, combo):
                if choice is not None:
                    support.add(COORDS_PER_TET * t + choice)
            yield frozenset(support)


def vertex_solutions(tri, include_octs=False, max_coeff_bits=None):
    """
    Extreme rays of the admissible solution set: the union over the
    quad/oct orthants of the extreme rays of the restricted matching cone,
    in canonical primitive form, deduplicated and sorted.
    """
    system = matching_system(tri)
    out = set()
    for support in iter_orthant_supports(tri, include_octs):
        cone = matching_cone(tri, support, system)
        out.update(extreme_rays(cone, max_coeff_bits=max_coeff_bits))
    return sorted(out)


def fundamental_solutions(tri, include_octs=False, max_coeff_bits=None):
    """
    Fundamental solutions of the admissible set: the union over quad/oct
    orthants of the Hilbert bases of the restricted matching cones.  Every
    admissible integer vector is a nonnegative integer combination of
    these (within its own orthant).
    """
    system = matching_system(tri)
    out = set()
    for support in iter_orthant_supports(tri, include_octs):
        cone = matching_cone(tri, support, system)
        out.update(hilbert_basis(cone, max_coeff_bits=max_coeff_bits))
    return sorted(out)


def chi_functional_coefficients(tri):
    """
    Rational coefficients c with c . v = chi(surface of v) for every
    vector v satisfying the embedding constraints.

    Per disk type: 1 (the disk) - arcs/2 (each boundary arc is shared by
    two disks) + sum over edge intersections of 1/deg (each point on an
    edge class of degree d is shared by d disk corners).
    """
    degrees = tri.edge_degrees()
    coeffs = []
    for t in range(tri.tet_count):
        for k in range(COORDS_PER_TET):
            c = Fraction(1) - Fraction(ARC_COUNT_PER_DISK[k], 2)
            for e in range(6):
                mult = DISK_EDGE_WEIGHTS[k][e]
                if mult:
                    cls, _ = tri.edge_class_of[(t, e)]
                    c += Fraction(mult, degrees[cls])
            coeffs.append(c)
    return tuple(coeffs)
