"""
Weighted train tracks and the three local splittings of a large branch.

A track is a set of named branches and a set of switches; each switch
partitions its incident branch ends into two sides, and a weight vector
is admissible when the two sides of every switch carry equal total
weight.  Branch ends not attached to any switch are free; free ends mark
the boundary of a local model (the splitting square has four of them).

Splitting a large branch b (a branch alone on its side at both of its
switches, facing two branches at each) produces three tracks:

- left: the first far branch at b's tail switch connects across smoothly
  to the first far branch at the head switch, and a residue branch b'
  carries the excess weight diagonally;
- right: the mirror resolution through the second branches;
- central: both far pairs connect across and b disappears entirely.

Each result carries a linear map from its weight cone into the parent's
weight cone (shared branches keep their weight, and the split branch's
weight is recovered as the through-weight).  A measure is carried by a
split result when it has a preimage weight vector that is positive on
the residue branch; measures whose preimage puts weight zero on the
residue never crossed the diagonal and are carried by the central track,
which is a sub-track of both side tracks.  With this attribution the
three image cones cover the parent cone, the central track alone covers
the balanced locus, and the side tracks cover the strict halves.
"""

from fractions import Fraction

from .cones import RationalCone, extreme_rays
from .errors import NotSplittable
from .linalg import dot


class TrainTrack:
    """
    branches: tuple of branch names.
    switches: tuple of (side1, side2); each side is a tuple of ends and an
    end is (branch_name, end_index) with end_index 0 or 1.
    """

    def __init__(self, branches, switches):
        self.branches = tuple(branches)
        self.switches = tuple(
            (tuple(map(tuple, s1)), tuple(map(tuple, s2)))
            for (s1, s2) in switches)
        index = {b: i for i, b in enumerate(self.branches)}
        if len(index) != len(self.branches):
            raise ValueError("duplicate branch names")
        seen = set()
        for (s1, s2) in self.switches:
            for (b, e) in s1 + s2:
                if b not in index or e not in (0, 1):
                    raise ValueError("unknown branch end (%s, %s)" % (b, e))
                if (b, e) in seen:
                    raise ValueError(
                        "branch end (%s, %d) attached twice" % (b, e))
                seen.add((b, e))
        self.branch_index = index

    def switch_rows(self):
        rows = []
        for (s1, s2) in self.switches:
            row = [0] * len(self.branches)
            for (b, _) in s1:
                row[self.branch_index[b]] += 1
            for (b, _) in s2:
                row[self.branch_index[b]] -= 1
            rows.append(tuple(row))
        return rows

    def weight_cone(self):
        return RationalCone(self.switch_rows(), len(self.branches))

    def switch_of_end(self, end):
        for i, (s1, s2) in enumerate(self.switches):
            if end in s1:
                return i, 0
            if end in s2:
                return i, 1
        return None

    def canonical_switches(self):
        return frozenset(
            frozenset((frozenset(s1), frozenset(s2)))
            for (s1, s2) in self.switches)

    def to_json_dict(self):
        return {
            "branches": list(self.branches),
            "switches": [
                {"side1": [list(e) for e in s1],
                 "side2": [list(e) for e in s2]}
                for (s1, s2) in self.switches
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        switches = [
            ([tuple(e) for e in sw["side1"]], [tuple(e) for e in sw["side2"]])
            for sw in data["switches"]
        ]
        return cls(data["branches"], switches)


class CarriedTrack:
    """
    A track together with its carrying map into a parent track's weight
    space and the branches created by the splitting (which a carried
    measure must use with positive weight).
    """

    def __init__(self, name, track, parent, carrying_map, new_branches):
        self.name = name
        self.track = track
        self.parent = parent
        self.carrying_map = tuple(map(tuple, carrying_map))
        self.new_branches = tuple(new_branches)

    def image(self, w):
        return tuple(dot(row, w) for row in self.carrying_map)

    def pinch(self, v):
        """
        The pinching projection: the unique preimage weight vector of a
        parent measure, or None when the measure is not in the image of
        the closed weight cone.
        """
        cone = self.track.weight_cone()
        idx = self.track.branch_index
        pidx = self.parent.branch_index
        w = [None] * len(self.track.branches)
        for b in self.track.branches:
            if b in pidx:
                w[idx[b]] = v[pidx[b]]
        # Residue branches: solve each switch equation with one unknown.
        for _ in range(len(self.track.branches)):
            if all(x is not None for x in w):
                break
            for (s1, s2) in self.track.switches:
                ends = [(self.track.branch_index[b], sign)
                        for side, sign in ((s1, 1), (s2, -1))
                        for (b, _) in side]
                unknown = [i for i, _ in ends if w[i] is None]
                if len(set(unknown)) == 1:
                    i = unknown[0]
                    known = sum(sign * w[j] for j, sign in ends
                                if w[j] is not None)
                    coeff = sum(sign for j, sign in ends if j == i)
                    if coeff == 0:
                        continue
                    value = Fraction(-known, coeff)
                    w[i] = int(value) if value.denominator == 1 else value
        if any(x is None for x in w):
            return None
        if any(x < 0 for x in w):
            return None
        if not cone.contains(tuple(w)):
            return None
        if self.image(tuple(w)) != tuple(v):
            return None
        return tuple(w)

    def carries(self, v):
        """
        Whether the parent measure v is attributed to this split result: it
        has a preimage in the weight cone, positive on every new branch.
        """
        w = self.pinch(v)
        if w is None:
            return False
        idx = self.track.branch_index
        return all(w[idx[b]] > 0 for b in self.new_branches)


class SplitResult:
    def __init__(self, parent, branch, left, central, right):
        self.parent = parent
        self.branch = branch
        self.left = left
        self.central = central
        self.right = right

    def tracks(self):
        return (self.left, self.central, self.right)

    def carriers(self, v):
        return [c.name for c in self.tracks() if c.carries(v)]


def _far_side(track, end):
    location = track.switch_of_end(end)
    if location is None:
        raise NotSplittable("branch end %s is not attached" % (end,))
    i, side = location
    s1, s2 = track.switches[i]
    own = s1 if side == 0 else s2
    far = s2 if side == 0 else s1
    if own != (end,):
        raise NotSplittable(
            "branch %s is not alone on its switch side" % end[0])
    if len(far) != 2:
        raise NotSplittable(
            "the far side of branch %s has %d ends, need 2" %
            (end[0], len(far)))
    return i, far


def split(track, branch):
    """
    Split the large branch into the left, central and right resolutions.

    The branch must run between two switches, alone on its side at each,
    facing exactly two branch ends at each (the splitting-square
    configuration).
    """
    if branch not in track.branch_index:
        raise NotSplittable("no branch named %r" % branch)
    tail, head = (branch, 0), (branch, 1)
    si_tail, far_tail = _far_side(track, tail)
    si_head, far_head = _far_side(track, head)
    if si_tail == si_head:
        raise NotSplittable("branch %r loops at a single switch" % branch)
    p, q = far_tail
    r, s = far_head
    if branch in {p[0], q[0], r[0], s[0]}:
        raise NotSplittable("branch %r meets its own splitting square"
                            % branch)

    residue = branch + "'"
    while residue in track.branch_index:
        residue += "'"
    kept = [(s1, s2) for i, (s1, s2) in enumerate(track.switches)
            if i not in (si_tail, si_head)]
    base_branches = [b for b in track.branches if b != branch]

    def child(name, switches, new_branches):
        names = base_branches + list(new_branches)
        t = TrainTrack(names, kept + switches)
        rows = []
        for b in track.branches:
            row = [0] * len(names)
            if b == branch:
                # Through-weight: everything entering from the tail side.
                for (bb, _) in far_tail:
                    row[t.branch_index[bb]] += 1
            else:
                row[t.branch_index[b]] = 1
            rows.append(row)
        return CarriedTrack(name, t, track, rows, new_branches)

    e0, e1 = (residue, 0), (residue, 1)
    left = child("left",
                 [((p,), (r, e0)), ((s,), (q, e1))],
                 [residue])
    central = child("central", [((p,), (r,)), ((q,), (s,))], [])
    right = child("right",
                  [((q,), (s, e0)), ((r,), (p, e1))],
                  [residue])
    return SplitResult(track, branch, left, central, right)


def is_subtrack(a, b):
    """
    Whether track a embeds in track b respecting switches, under the
    shared branch labelling: b restricted to a's branches has exactly a's
    switch structure.
    """
    if not set(a.branches) <= set(b.branches):
        return False
    keep = set(a.branches)
    restricted = []
    for (s1, s2) in b.switches:
        r1 = tuple(e for e in s1 if e[0] in keep)
        r2 = tuple(e for e in s2 if e[0] in keep)
        if r1 or r2:
            restricted.append((r1, r2))
    canon_b = frozenset(frozenset((frozenset(r1), frozenset(r2)))
                        for (r1, r2) in restricted)
    return canon_b == a.canonical_switches()


class CoverResult:
    def __init__(self, ok, uncovered_ray=None, escaped_ray=None):
        self.ok = ok
        self.uncovered_ray = uncovered_ray
        self.escaped_ray = escaped_ray

    def __bool__(self):
        return self.ok

    def to_json_dict(self):
        return {
            "covered": self.ok,
            "uncovered_ray": (list(self.uncovered_ray)
                              if self.uncovered_ray else None),
            "escaped_ray": (list(self.escaped_ray)
                            if self.escaped_ray else None),
        }


def cone_cover_check(track, carried_tracks):
    """
    Verify that the parent's weight cone equals the union of the carried
    images: every extreme ray of the parent cone must be carried by some
    result, and the image of every extreme ray of every result must
    satisfy the parent's switch equations.
    """
    parent_cone = track.weight_cone()
    parent_rays = extreme_rays(parent_cone)
    for ct in carried_tracks:
        for ray in extreme_rays(ct.track.weight_cone()):
            image = ct.image(ray)
            if not parent_cone.contains(image):
                return CoverResult(False, escaped_ray=image)
    for ray in parent_rays:
        if not any(ct.carries(ray) for ct in carried_tracks):
            return CoverResult(False, uncovered_ray=ray)
    return CoverResult(True)


def figure_sp1_track():
    """The splitting-square local model: two switches joined by a large
    branch, two free-ended branches on each far side."""
    return TrainTrack(
        ["p", "q", "r", "s", "b"],
        [([("p", 1), ("q", 1)], [("b", 0)]),
         ([("b", 1)], [("r", 0), ("s", 0)])])
