import pytest

from laminate.cones import extreme_rays
from laminate.errors import NotSplittable
from laminate.traintracks import (TrainTrack, cone_cover_check,
                                  figure_sp1_track, is_subtrack, split)


@pytest.fixture(scope="module")
def square():
    return figure_sp1_track()


@pytest.fixture(scope="module")
def result(square):
    return split(square, "b")


def test_square_weight_cone(square):
    # coordinates p, q, r, s, b
    rays = extreme_rays(square.weight_cone())
    assert rays == [(0, 1, 0, 1, 1), (0, 1, 1, 0, 1),
                    (1, 0, 0, 1, 1), (1, 0, 1, 0, 1)]


def test_balanced_measure_is_only_centrally_carried(square, result):
    balanced = (3, 1, 3, 1, 4)
    assert result.carriers(balanced) == ["central"]


def test_unbalanced_measure_selects_a_side(square, result):
    # weights (2, 1) on the crossing pair (p, r): strict inequality picks
    # the left resolution.
    measure = (2, 0, 1, 1, 2)
    assert result.carriers(measure) == ["left"]
    mirror = (1, 1, 2, 0, 2)
    assert result.carriers(mirror) == ["right"]


def test_central_is_subtrack_of_both_sides(result):
    assert is_subtrack(result.central.track, result.left.track)
    assert is_subtrack(result.central.track, result.right.track)


def test_left_right_incompatible(result):
    assert not is_subtrack(result.left.track, result.right.track)
    assert not is_subtrack(result.right.track, result.left.track)


def test_track_is_subtrack_of_itself(square):
    assert is_subtrack(square, square)


def test_cone_cover(square, result):
    assert cone_cover_check(square, result.tracks())


def test_dropping_central_breaks_cover_on_balanced_ray(square, result):
    check = cone_cover_check(square, [result.left, result.right])
    assert not check
    p, q, r, s, b = check.uncovered_ray
    assert p == r and q == s and b == p + q


def test_carrying_maps_preserve_stub_weights(square, result):
    for ct in result.tracks():
        for ray in extreme_rays(ct.track.weight_cone()):
            image = ct.image(ray)
            for stub in ("p", "q", "r", "s"):
                assert image[square.branch_index[stub]] == \
                    ray[ct.track.branch_index[stub]]


def test_pinching_inverts_the_carrying_map(result):
    for ct in result.tracks():
        rays = extreme_rays(ct.track.weight_cone())
        for ray in rays:
            assert ct.pinch(ct.image(ray)) == ray
        if len(rays) >= 2:
            mixed = tuple(2 * a + 3 * b for a, b in zip(rays[0], rays[1]))
            assert ct.pinch(ct.image(mixed)) == mixed


def test_image_rays_lie_in_parent_cone(square, result):
    cone = square.weight_cone()
    for ct in result.tracks():
        for ray in extreme_rays(ct.track.weight_cone()):
            assert cone.contains(ct.image(ray))


def test_not_splittable_wrong_valence():
    # b faces three branches at its head switch.
    track = TrainTrack(
        ["p", "q", "r", "s", "u", "b"],
        [([("p", 1), ("q", 1)], [("b", 0)]),
         ([("b", 1)], [("r", 0), ("s", 0), ("u", 0)])])
    with pytest.raises(NotSplittable):
        split(track, "b")


def test_not_splittable_shared_side():
    track = TrainTrack(
        ["p", "q", "r", "s", "b"],
        [([("p", 1), ("q", 1)], [("b", 0), ("r", 1)]),
         ([("b", 1)], [("r", 0), ("s", 0)])])
    with pytest.raises(NotSplittable):
        split(track, "b")


def test_not_splittable_loop():
    track = TrainTrack(
        ["p", "q", "b"],
        [([("b", 0)], [("p", 0), ("q", 0)]),
         ([("b", 1)], [("p", 1), ("q", 1)])])
    # both ends of b attach to different switches here; make a loop case:
    loop = TrainTrack(
        ["x", "y", "b"],
        [([("b", 0), ("b", 1)], [("x", 0), ("y", 0)])])
    with pytest.raises(NotSplittable):
        split(loop, "b")
    with pytest.raises(NotSplittable):
        split(track, "missing")


def test_degenerate_track_vacuously_covered():
    # A one-switch track whose equation forces weight zero has no rays,
    # so any (even empty) collection covers it.
    degenerate = TrainTrack(["x"], [([("x", 0), ("x", 1)], [])])
    assert extreme_rays(degenerate.weight_cone()) == []
    assert cone_cover_check(degenerate, [])


def test_json_round_trip(square):
    data = square.to_json_dict()
    again = TrainTrack.from_json_dict(data)
    assert again.to_json_dict() == data
    assert again.branches == square.branches


def test_splitting_an_ambient_track():
    # The square sitting inside a larger track: an extra switch joining p
    # and r through an outer branch remains untouched by the split.
    track = TrainTrack(
        ["p", "q", "r", "s", "b", "o"],
        [([("p", 1), ("q", 1)], [("b", 0)]),
         ([("b", 1)], [("r", 0), ("s", 0)]),
         ([("o", 0)], [("p", 0)]),
         ([("r", 1)], [("o", 1)])])
    result = split(track, "b")
    for ct in result.tracks():
        switches = ct.track.canonical_switches()
        assert frozenset({frozenset({("o", 0)}), frozenset({("p", 0)})}) \
            in switches
    # The outer branch forces p = o = r, so only the central resolution
    # carries a measure positive on o.
    measure = (1, 1, 1, 1, 2, 1)
    assert result.carriers(measure) == ["central"]
