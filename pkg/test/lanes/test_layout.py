from pytest import (approx, raises)

from roadgen.errors import InputError
from roadgen.lanes import (
    Side, LaneType, Marking, LaneSpec, RoadLanes, constant_width, widening,
    outer_offset, check_indices, constant_track, lane_change_track,
    turn_lane_track)


def lane(side, index, *width):
    return LaneSpec(side, index, LaneType.DRIVING, Marking.BROKEN, width)


def test_outer_offset():
    lanes = [lane(Side.RIGHT, -1, constant_width(3.5)),
             lane(Side.RIGHT, -2, constant_width(3.5))]
    assert outer_offset(lanes, Side.RIGHT, 12.0) == approx(7.0)
    assert outer_offset(lanes, Side.LEFT, 12.0) == 0.0

    lanes = [lane(Side.RIGHT, -1, constant_width(3.5)),
             lane(Side.RIGHT, -2, widening(3, 0, 10))]
    assert outer_offset(lanes, Side.RIGHT, 10.0) == approx(6.5)


def test_check_indices():
    check_indices([lane(Side.LEFT, 1, constant_width(3)),
                   lane(Side.RIGHT, -1, constant_width(3)),
                   lane(Side.RIGHT, -2, constant_width(3))])
    with raises(InputError):
        check_indices([lane(Side.RIGHT, -2, constant_width(3))])
    with raises(InputError):
        check_indices([lane(Side.LEFT, -1, constant_width(3))])


def two_lane_road(length=100.0):
    return RoadLanes(length, (
        constant_track(Side.RIGHT, 3.5, length),
        constant_track(Side.LEFT, 3.5, length)), Marking.SOLID)


def test_sections_constant():
    sections = two_lane_road().sections()
    assert len(sections) == 1
    section = sections[0]
    assert [lane.index for lane in section.lanes_on(Side.LEFT)] == [1]
    assert [lane.index for lane in section.lanes_on(Side.RIGHT)] == [-1]
    assert section.lane_center_offset(-1, 50) == approx(-1.75)
    assert section.boundaries(Side.LEFT, 0) == approx([0.0, 3.5])


def test_sections_with_widening():
    lanes = two_lane_road().with_track(lane_change_track(
        Side.RIGHT, 3.0, 40.0, 20.0, 100.0, 'widening'))
    sections = lanes.sections()
    assert [s.s_start for s in sections] == approx([0.0, 40.0, 60.0])
    first, middle, last = sections
    assert not first.has_lane(-2)
    assert middle.lane(-2).width_at(0.0) == approx(0.0)
    assert middle.lane(-2).width_at(20.0) == approx(3.0)
    assert last.lane(-2).width_at(10.0) == approx(3.0)
    assert middle.lane(-2).predecessor is None
    assert middle.lane(-2).successor == -2
    assert middle.lane(-1).predecessor == -1
    assert lanes.outer_offset(Side.RIGHT, 70.0) == approx(6.5)


def test_inner_track_renumbers():
    lanes = two_lane_road().with_track(
        turn_lane_track(Side.RIGHT, 3.0, 25.0, 20.0, 100.0, True, 'left'),
        inner=True)
    last = lanes.sections()[-1]
    assert last.lane(-1).tag == 'left'
    assert last.lane(-1).lane_type is LaneType.TURN
    assert last.lane(-2).tag == ''


def test_turn_lane_mirrored():
    track = turn_lane_track(Side.LEFT, 3.0, 25.0, 20.0, 100.0, False)
    assert track.begin == 0.0
    assert track.end == approx(45.0)
    assert track.width_at(10.0) == approx(3.0)
    assert track.width_at(45.0) == approx(0.0)


def test_turn_lane_too_long():
    with raises(InputError):
        turn_lane_track(Side.RIGHT, 3.0, 25.0, 20.0, 30.0, True)


def test_clip():
    lanes = two_lane_road().with_track(lane_change_track(
        Side.RIGHT, 3.0, 40.0, 20.0, 100.0, 'widening'))
    clipped = lanes.clip(50.0, 100.0)
    assert clipped.length == 50.0
    assert clipped.outer_offset(Side.RIGHT, 0.0) == approx(
        lanes.outer_offset(Side.RIGHT, 50.0))
    assert len(clipped.sections()) == 2
