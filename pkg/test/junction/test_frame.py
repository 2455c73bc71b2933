import math

from pytest import (raises, approx)

from roadgen.errors import JunctionError
from roadgen.junction import (position_arms, cut_junction_area, default_area)
from roadgen.logical import parse

from ..networks import (document, xjunction, tjunction, roundabout)


def _segment(text):
    return parse(document(text)).segments[0]


def test_position_arms(defaults):
    frame = position_arms(_segment(xjunction(angle=60)), defaults)
    p = frame.lines['main'].pose_at(100)
    assert (p.x, p.y, p.phi) == approx((0, 0, 0), abs=1e-9)
    q = frame.lines['side'].pose_at(100)
    assert (q.x, q.y) == approx((0, 0), abs=1e-9)
    assert q.phi == approx(math.radians(60))


def test_default_area(defaults):
    margin = defaults.junction.area_margin
    frame = position_arms(_segment(xjunction()), defaults)
    assert default_area(frame, margin) == approx(3.5 + margin)
    frame = position_arms(_segment(xjunction(angle=30)), defaults)
    assert default_area(frame, margin) == approx(7.0 + margin)


def test_cut(defaults):
    frame = cut_junction_area(
        position_arms(_segment(xjunction()), defaults), defaults)
    arms = {arm.key: arm for arm in frame.arms}
    assert sorted(arms) == ['x.main.end', 'x.main.start', 'x.side.end',
                            'x.side.start']
    before = arms['x.main.start']
    assert before.junction_at_end
    assert before.length == approx(100 - 13.5)
    assert before.junction_pose.x == approx(-13.5)
    after = arms['x.main.end']
    assert not after.junction_at_end
    assert after.s_range == approx((113.5, 200))
    assert after.heading_in == approx(math.pi)


def test_coupler_area(defaults):
    coupler = '<coupler><junctionArea road="main" sMinus="20" sPlus="30"/>' \
              '</coupler>'
    frame = cut_junction_area(
        position_arms(_segment(xjunction(coupler=coupler)), defaults),
        defaults)
    arms = {arm.key: arm for arm in frame.arms}
    assert arms['x.main.start'].length == approx(80)
    assert arms['x.main.end'].length == approx(70)
    assert arms['x.side.start'].length == approx(100 - 13.5)


def test_tjunction_arms(defaults):
    frame = cut_junction_area(
        position_arms(_segment(tjunction()), defaults), defaults)
    assert len(frame.groups) == 1
    assert len(frame.arms) == 3


def test_area_too_large(defaults):
    coupler = '<coupler><junctionArea road="main" sMinus="150"/></coupler>'
    frame = position_arms(_segment(xjunction(coupler=coupler)), defaults)
    with raises(JunctionError):
        cut_junction_area(frame, defaults)


def test_roundabout(defaults):
    frame = cut_junction_area(
        position_arms(_segment(roundabout()), defaults), defaults)
    assert len(frame.groups) == 4
    for group in frame.groups:
        before, after, access = group.arms
        assert before.junction_at_end and not after.junction_at_end
        assert access.end == 'end'
    # every ring piece is shared by two neighbouring junctions
    assert frame.groups[0].arms[1].key == frame.groups[1].arms[0].key


def test_roundabout_overlap(defaults):
    frame = position_arms(_segment(roundabout(radius=10)), defaults)
    with raises(JunctionError) as info:
        cut_junction_area(frame, defaults)
    assert 'overlap' in info.value.msg
