"""
Fixed-genus enumeration of carried surfaces and the antichain certificate.

When every fundamental solution of a branched-surface model has negative
Euler characteristic, a carried surface of Euler characteristic 2 - 2g
decomposes as a sum of fundamentals whose multiplicities are bounded by
(2g - 2) / |chi|.  Enumerating the multiplicity tuples therefore lists
every carried connected orientable genus-g surface (with weight one on
the almost-normal sector when the model has one).  The antichain
certificate then checks that no two listed vectors are componentwise
comparable; a comparable pair would exhibit a carried chi = 0 difference
surface, which the all-negative verdict rules out.
"""

from .branched import carries_nonneg_chi
from .bruteforce import enumerate_solutions
from .errors import GenusTooSmall, InternalCheckFailed, UnboundedRefusal
from .surfaces import build_surface


class GenusEnumeration:
    """The complete duplicate-free genus-g list of a model."""

    def __init__(self, model, genus, vectors, decompositions, fundamentals):
        self.model = model
        self.genus = genus
        self.vectors = tuple(vectors)
        self.decompositions = dict(decompositions)
        self.fundamentals = tuple(fundamentals)

    def __len__(self):
        return len(self.vectors)

    def to_json_dict(self):
        return {
            "genus": self.genus,
            "count": len(self.vectors),
            "vectors": [list(v) for v in self.vectors],
            "decompositions": [list(self.decompositions[v])
                               for v in self.vectors],
        }


def _accepts(model, v, genus):
    """The common surface filter: almost-normal weight, connectivity,
    orientability, genus."""
    if model.oct_sector is not None and v[model.oct_sector] != 1:
        return False
    surface = build_surface(model.triangulation, v, model.system)
    if not surface.connected:
        return False
    component = surface.components[0]
    if not component.orientable:
        return False
    return component.genus_or_crosscap == genus


def enumerate_genus(model, genus):
    """
    The complete list of connected orientable genus-g integer vectors
    carried by the model, each with the lexicographically least
    multiplicity tuple over the fundamentals.

    Refuses (UnboundedRefusal) unless every fundamental has chi < 0,
    since otherwise the list need not be finite.
    """
    if genus < 0:
        raise GenusTooSmall("genus must be nonnegative, got %d" % genus)
    verdict = carries_nonneg_chi(model)
    if not verdict.all_negative:
        raise UnboundedRefusal(
            "the model carries chi >= 0 (verdict %s); a genus-%d list may "
            "be infinite" % (verdict.verdict, genus))
    funds = model.fundamentals()
    deficits = []
    for f in funds:
        c = model.chi.value(f)
        if c.denominator != 1 or c >= 0:
            raise InternalCheckFailed("fundamental with chi %s under an "
                                      "all-negative verdict" % c)
        deficits.append(int(-c))
    target = 2 * genus - 2

    found = {}

    def rec(idx, remaining, counts, acc):
        if remaining == 0:
            v = tuple(acc)
            if v not in found and any(v):
                if _accepts(model, v, genus):
                    found[v] = tuple(counts) + (0,) * (len(funds) - len(counts))
            return
        if idx == len(funds):
            return
        step = deficits[idx]
        max_n = remaining // step
        for n in range(max_n + 1):
            counts.append(n)
            if n == 0:
                rec(idx + 1, remaining, counts, acc)
            else:
                nxt = [a + n * b for a, b in zip(acc, funds[idx])]
                rec(idx + 1, remaining - n * step, counts, nxt)
            counts.pop()

    if target >= 0:
        rec(0, target, [], [0] * len(funds[0]) if funds else [])
    vectors = sorted(found)
    return GenusEnumeration(model, genus, vectors,
                            {v: found[v] for v in vectors}, funds)


def brute_force_genus_list(model, genus):
    """
    Independent oracle for enumerate_genus: exhaustive lattice enumeration
    of the model's cone up to the coordinate bound
    (2g - 2)/min|chi| * max infinity-norm of the fundamentals, filtered by
    the same surface conditions.
    """
    funds = model.fundamentals()
    if not funds or genus < 1:
        return []
    deficits = [int(-model.chi.value(f)) for f in funds]
    bound = ((2 * genus - 2) // min(deficits)) * max(max(f) for f in funds)
    if bound <= 0:
        return []
    points = enumerate_solutions(model.triangulation, bound, model.support)
    out = []
    for v in points:
        if not any(v):
            continue
        if model.chi.value(v) != 2 - 2 * genus:
            continue
        if _accepts(model, v, genus):
            out.append(v)
    return sorted(out)


class AntichainResult:
    """
    Outcome of the antichain certificate.  Truthy when no two listed
    vectors are componentwise comparable.  On failure carries the
    offending pair and their difference (the paper-style chi = 0 carried
    surface reproducing the contradiction object).
    """

    def __init__(self, ok, pair=None, difference=None, difference_chi=None,
                 difference_normal=None):
        self.ok = ok
        self.pair = pair
        self.difference = difference
        self.difference_chi = difference_chi
        self.difference_normal = difference_normal

    def __bool__(self):
        return self.ok

    def to_json_dict(self):
        return {
            "antichain": self.ok,
            "pair": ([list(self.pair[0]), list(self.pair[1])]
                     if self.pair else None),
            "difference": (list(self.difference)
                           if self.difference is not None else None),
            "difference_chi": (str(self.difference_chi)
                               if self.difference_chi is not None else None),
            "difference_normal": self.difference_normal,
        }


def antichain_certificate(enumeration):
    """
    Verify that no two vectors of a genus enumeration are componentwise
    comparable.  On failure, the difference vector is returned along with
    its chi (necessarily 0 for equal-genus surfaces) and whether it is
    normal (weight 0 on the almost-normal sector).
    """
    model = enumeration.model
    vectors = enumeration.vectors
    for i in range(len(vectors)):
        for j in range(len(vectors)):
            if i == j:
                continue
            small, big = vectors[i], vectors[j]
            if all(a <= b for a, b in zip(small, big)):
                diff = tuple(b - a for a, b in zip(small, big))
                chi = model.chi.value(diff)
                normal = (model.oct_sector is None
                          or diff[model.oct_sector] == 0)
                if not model.carries(diff):
                    raise InternalCheckFailed(
                        "difference of carried vectors left the cone")
                return AntichainResult(False, (small, big), diff, chi, normal)
    return AntichainResult(True)
