import pytest

from laminate.errors import GenusTooSmall, UnboundedRefusal
from laminate.finiteness import (GenusEnumeration, antichain_certificate,
                                 brute_force_genus_list, enumerate_genus)
from laminate.normal import is_admissible, quad_index, vector_length
from laminate.surfaces import build_surface


def test_refusal_when_carrying_nonnegative_chi(models):
    with pytest.raises(UnboundedRefusal):
        enumerate_genus(models["three_tet_triangles.json"], 2)
    with pytest.raises(UnboundedRefusal):
        enumerate_genus(models["two_tet_klein.json"], 2)


def test_negative_genus_rejected(models):
    with pytest.raises(GenusTooSmall):
        enumerate_genus(models["three_tet_normal_genus2.json"], -1)


def test_zero_vector_never_listed(models):
    # Genus 0 and 1 targets are below every fundamental deficit, so the
    # lists are empty; in particular the zero vector is never reported.
    model = models["three_tet_normal_genus2.json"]
    for genus in (0, 1):
        assert enumerate_genus(model, genus).vectors == ()


def test_genus_two_list_of_normal_model(models):
    model = models["three_tet_normal_genus2.json"]
    enumeration = enumerate_genus(model, 2)
    assert len(enumeration) == 1
    (v,) = enumeration.vectors
    assert enumeration.decompositions[v] == (1,)
    surface = build_surface(model.triangulation, v)
    assert surface.connected and surface.chi == -2
    assert surface.components[0].genus_or_crosscap == 2


def test_genus_lists_of_almost_normal_model(models):
    model = models["three_tet_almost_normal.json"]
    two = enumerate_genus(model, 2)
    three = enumerate_genus(model, 3)
    # Only the octagon-weight-one sums survive: the normal genus-2
    # fundamental alone has weight 0 there, the doubled one weight 2.
    assert len(two) == 1
    assert two.vectors[0][model.oct_sector] == 1
    assert len(three) == 1
    assert three.vectors[0][model.oct_sector] == 1
    assert sorted(three.decompositions[three.vectors[0]]) == [1, 1]


def test_enumeration_matches_brute_force(models):
    for name in ("three_tet_almost_normal.json",
                 "three_tet_normal_genus2.json"):
        model = models[name]
        for genus in (2, 3):
            enumeration = enumerate_genus(model, genus)
            assert list(enumeration.vectors) == \
                brute_force_genus_list(model, genus)


def test_enumeration_soundness(models):
    model = models["three_tet_almost_normal.json"]
    for genus in (2, 3):
        enumeration = enumerate_genus(model, genus)
        for v in enumeration.vectors:
            report = is_admissible(model.triangulation, v, model.system)
            assert not report.matching_failures
            assert not report.quad_violations
            assert model.chi.value(v) == 2 - 2 * genus
            surface = build_surface(model.triangulation, v)
            assert surface.connected
            assert surface.components[0].orientable
            # decomposition reconstructs the vector
            counts = enumeration.decompositions[v]
            rebuilt = [0] * len(v)
            for n, f in zip(counts, enumeration.fundamentals):
                rebuilt = [a + n * b for a, b in zip(rebuilt, f)]
            assert tuple(rebuilt) == v


def test_enumeration_stable_across_runs(models):
    model = models["three_tet_almost_normal.json"]
    first = enumerate_genus(model, 3)
    second = enumerate_genus(model, 3)
    assert first.vectors == second.vectors
    assert first.decompositions == second.decompositions


def test_antichain_holds_on_all_negative_models(models):
    for name in ("three_tet_almost_normal.json",
                 "three_tet_normal_genus2.json"):
        model = models[name]
        for genus in (2, 3):
            assert antichain_certificate(enumerate_genus(model, genus))


def test_antichain_vacuous_on_empty_list(models):
    model = models["three_tet_normal_genus2.json"]
    enumeration = enumerate_genus(model, 1)
    result = antichain_certificate(enumeration)
    assert result
    assert result.pair is None


def test_nonorientable_fundamental_model():
    # A model whose single fundamental is a nonorientable chi = -1 surface
    # (crosscap number 3): the genus-2 list is exactly its orientation
    # double, and genus 3 is empty because four copies split into two
    # parallel doubles.
    from laminate.branched import from_support
    from laminate.triangulation import Triangulation
    tri = Triangulation(3, [(2, 1, 2, 2, (3, 2, 0, 1)),
                            (0, 3, 0, 0, (1, 2, 3, 0)),
                            (1, 2, 0, 1, (3, 0, 1, 2)),
                            (0, 2, 1, 0, (2, 1, 0, 3)),
                            (1, 3, 2, 3, (1, 2, 0, 3)),
                            (2, 0, 1, 1, (1, 3, 2, 0))])
    model = from_support(tri, [5, 15, 24])
    funds = model.fundamentals()
    assert len(funds) == 1
    assert model.chi.value(funds[0]) == -1
    base = build_surface(tri, funds[0])
    assert base.connected and not base.components[0].orientable
    assert base.components[0].genus_or_crosscap == 3

    two = enumerate_genus(model, 2)
    assert two.vectors == (tuple(2 * x for x in funds[0]),)
    assert two.decompositions[two.vectors[0]] == (2,)
    assert list(two.vectors) == brute_force_genus_list(model, 2)
    assert antichain_certificate(two)

    three = enumerate_genus(model, 3)
    assert three.vectors == ()
    assert brute_force_genus_list(model, 3) == []


def test_antichain_failure_path(models):
    # Forge an enumeration on a torus-carrying model with a comparable
    # pair differing by the chi = 0 Klein-bottle-double vector; the
    # certificate must surface the difference as the contradiction object.
    model = models["two_tet_klein.json"]
    torus = [0] * vector_length(model.triangulation)
    torus[quad_index(0, 2)] = 2
    torus[quad_index(1, 2)] = 2
    torus = tuple(torus)
    bigger = tuple(2 * x for x in torus)
    forged = GenusEnumeration(model, 1, [torus, bigger], {}, ())
    result = antichain_certificate(forged)
    assert not result
    assert result.pair == (torus, bigger)
    assert result.difference == torus
    assert result.difference_chi == 0
    assert result.difference_normal is True
    surface = build_surface(model.triangulation, result.difference)
    assert surface.chi == 0
