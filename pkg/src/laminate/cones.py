"""
Exact rational cones: extreme rays, Hilbert bases, linear optimization
over the projective slice, strictly positive integer points.

All arithmetic is exact (arbitrary-precision integers and Fractions);
floating point is never used here.  A cone is {x : Ax = 0, x >= 0} in N
coordinates, optionally with a support restriction forcing the remaining
coordinates to zero.  Such cones are pointed, so the double description
method starting from the coordinate orthant applies.  Determinism: rows
are inserted in input order and outputs are sorted, so equal inputs give
identical outputs.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import CoefficientBudgetExceeded, EmptyCone, InternalCheckFailed
from .linalg import det, dot, rank


def primitive(vec):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


class RationalCone:
    """
    {x in R^dim : matrix . x = 0, x >= 0, x_i = 0 for i outside support}.
    """

    def __init__(self, matrix, dim, support=None):
        rows = []
        for row in matrix:
            row = list(row)
            if len(row) != dim:
                raise ValueError("row length %d != dim %d" % (len(row), dim))
            denoms = [Fraction(x).denominator for x in row]
            scale = 1
            for d in denoms:
                scale = scale * d // gcd(scale, d)
            rows.append(tuple(int(Fraction(x) * scale) for x in row))
        self.matrix = tuple(rows)
        self.dim = dim
        self.support = (frozenset(range(dim)) if support is None
                        else frozenset(support))
        for i in self.support:
            if not (0 <= i < dim):
                raise ValueError("support index %d out of range" % i)

    def with_extra_rows(self, rows):
        return RationalCone(list(self.matrix) + list(rows), self.dim,
                            self.support)

    def restricted(self, support):
        return RationalCone(self.matrix, self.dim, support)

    def contains(self, v):
        if len(v) != self.dim:
            return False
        if any(x < 0 for x in v):
            return False
        if any(v[i] != 0 for i in range(self.dim) if i not in self.support):
            return False
        return all(dot(row, v) == 0 for row in self.matrix)

    def to_json_dict(self):
        return {
            "matrix": [list(row) for row in self.matrix],
            "dim": self.dim,
            "support": sorted(self.support),
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["matrix"], data["dim"], data.get("support"))


def _check_budget(vectors, max_coeff_bits):
    if max_coeff_bits is None:
        return
    for vec in vectors:
        for x in vec:
            if abs(x).bit_length() > max_coeff_bits:
                raise CoefficientBudgetExceeded(
                    "intermediate integer needs %d bits (budget %d)"
                    % (abs(x).bit_length(), max_coeff_bits))


def extreme_rays(cone, max_coeff_bits=None):
    """
    The primitive extreme rays of a pointed cone, by double description.

    Starts from the unit rays of the supported orthant and intersects with
    each equation in input row order.  Adjacency of rays is decided by the
    standard combinatorial test on zero sets.  Output is sorted
    lexicographically.
    """
    support = sorted(cone.support)
    rays = []
    for j in support:
        unit = [0] * cone.dim
        unit[j] = 1
        rays.append(tuple(unit))

    for row in cone.matrix:
        values = {r: dot(row, r) for r in rays}
        zero = [r for r in rays if values[r] == 0]
        plus = [r for r in rays if values[r] > 0]
        minus = [r for r in rays if values[r] < 0]
        if not plus or not minus:
            # Rays violating the equation on either side are cut off.
            rays = zero
            continue

        zero_sets = {r: frozenset(j for j in support if r[j] == 0)
                     for r in rays}

        def adjacent(rp, rm):
            meet = zero_sets[rp] & zero_sets[rm]
            for other in rays:
                if other is rp or other is rm:
                    continue
                if meet <= zero_sets[other]:
                    return False
            return True

        new_rays = list(zero)
        for rp in plus:
            for rm in minus:
                if adjacent(rp, rm):
                    vp, vm = values[rp], values[rm]
                    combo = tuple(vp * b - vm * a
                                  for a, b in zip(rp, rm))
                    new_rays.append(primitive(combo))
        seen = set()
        rays = []
        for r in new_rays:
            if r not in seen:
                seen.add(r)
                rays.append(r)
        _check_budget(rays, max_coeff_bits)

    return sorted(rays)


def _parallelepiped_points(rays, max_grid=5_000_000):
    """
    Integer points of the closed parallelepiped spanned by a linearly
    independent list of integer rays.
    """
    d = len(rays)
    n = len(rays[0])
    # Pick d coordinate positions where the rays are invertible.
    cols = list(zip(*rays))            # n rows of length d in column view
    idx = []
    chosen = []
    for i in range(n):
        trial = chosen + [cols[i]]
        if rank(trial) == len(trial):
            idx.append(i)
            chosen.append(cols[i])
            if len(idx) == d:
                break
    delta = abs(int(det([[rays[j][i] for j in range(d)] for i in idx])))
    if delta == 0:
        raise InternalCheckFailed("dependent rays in parallelepiped step")
    if (delta + 1) ** d > max_grid:
        raise InternalCheckFailed(
            "parallelepiped grid of size %d^%d exceeds the desk-scale cap"
            % (delta + 1, d))
    points = []
    steps = [Fraction(k, delta) for k in range(delta + 1)]

    def rec(j, acc):
        if j == d:
            if all(x.denominator == 1 for x in acc):
                points.append(tuple(int(x) for x in acc))
            return
        for lam in steps:
            if lam == 0:
                rec(j + 1, acc)
            else:
                rec(j + 1, [x + lam * r for x, r in zip(acc, rays[j])])

    rec(0, [Fraction(0)] * n)
    return points


def hilbert_basis(cone, max_coeff_bits=None):
    """
    The minimal generating set of the monoid of integer points of the cone.

    Generators are gathered from the extreme rays together with the lattice
    points of the parallelepipeds of every maximal linearly independent
    subset of rays (a Caratheodory cover of the cone), then reduced to the
    irreducible elements.  Output sorted lexicographically.
    """
    rays = extreme_rays(cone, max_coeff_bits=max_coeff_bits)
    if not rays:
        return []
    d = rank(rays)
    candidates = set(rays)
    if d == 1:
        reduced = sorted(candidates)
    else:
        for subset in combinations(range(len(rays)), d):
            sub = [rays[i] for i in subset]
            if rank(sub) < d:
                continue
            for p in _parallelepiped_points(sub):
                if any(p):
                    candidates.add(p)
        _check_budget(candidates, max_coeff_bits)
        ordered = sorted(candidates, key=lambda v: (sum(v), v))
        reduced = []
        for g in ordered:
            dominated = False
            for h in ordered:
                if h is g or h == g:
                    continue
                if all(a <= b for a, b in zip(h, g)):
                    dominated = True
                    break
            if not dominated:
                reduced.append(g)
    return sorted(reduced)


def maximize_linear(cone, functional, max_coeff_bits=None):
    """
    Maximize a rational linear functional over the slice
    cone intersect {sum of supported coordinates = 1}.

    Returns (optimum, witness) where the witness is the optimal vertex of
    the slice polytope as a tuple of Fractions.  Raises EmptyCone when the
    cone is {0}.
    """
    rays = extreme_rays(cone, max_coeff_bits=max_coeff_bits)
    if not rays:
        raise EmptyCone("the cone contains no nonzero point")
    best_value = None
    best_witness = None
    for r in rays:
        s = sum(r)
        value = Fraction(dot(functional, r), s)
        if best_value is None or value > best_value:
            best_value = value
            best_witness = tuple(Fraction(x, s) for x in r)
    return best_value, best_witness


def positive_integer_point(cone, max_coeff_bits=None):
    """
    An integer point strictly positive on every supported coordinate, or
    None when the cone has no strictly positive rational point.  The sum
    of the extreme rays is strictly positive exactly when such a point
    exists; it is returned in primitive form.
    """
    rays = extreme_rays(cone, max_coeff_bits=max_coeff_bits)
    if not rays:
        return None
    total = [0] * cone.dim
    for r in rays:
        total = [a + b for a, b in zip(total, r)]
    if any(total[i] == 0 for i in cone.support):
        return None
    return primitive(total)


def decompose_over(point, basis, _memo=None):
    """
    Express an integer cone point as a nonnegative integer combination of
    the given basis, by depth-first search with memoization.  Returns the
    lexicographically least multiplicity tuple, or None.
    """
    if _memo is None:
        _memo = {}

    zero = tuple(0 for _ in point)

    def rec(residual, start):
        if residual == zero:
            return ()
        key = (residual, start)
        if key in _memo:
            return _memo[key]
        result = None
        for i in range(start, len(basis)):
            h = basis[i]
            if all(a <= b for a, b in zip(h, residual)):
                rest = rec(tuple(b - a for a, b in zip(h, residual)), i)
                if rest is not None:
                    result = (i,) + rest
                    break
        _memo[key] = result
        return result

    picks = rec(tuple(point), 0)
    if picks is None:
        return None
    counts = [0] * len(basis)
    for i in picks:
        counts[i] += 1
    return tuple(counts)
