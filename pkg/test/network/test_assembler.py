import math

from pytest import (raises, approx)

from roadgen.errors import PlacementError
from roadgen.junction import build_segment
from roadgen.logical import (parse, read_file)
from roadgen.network import (assemble, place_all, frame_for)
from roadgen.geometry import Pose

from ..networks import (document, pair, connection_road)


def _build(network, defaults):
    return [build_segment(s, defaults) for s in network.segments]


def _meet(p, q):
    assert (p.x, p.y) == approx((q.x, q.y), abs=1e-6)
    assert math.cos(p.phi - q.phi) == approx(-1.0, abs=1e-9)


def test_frame_for():
    frame = frame_for(Pose(-100.0, 0.0, math.pi), Pose(90.0, 30.0, math.pi))
    assert (frame.x, frame.y, frame.phi) == approx((190.0, 30.0, 0.0))


def test_place_links(examples, defaults):
    network = parse(read_file(examples / 'two_tjunctions.xml'))
    placed = {p.id: p for p in place_all(network, _build(network, defaults))}
    assert (placed['west'].frame.x, placed['west'].frame.y) == (0, 0)
    for link in network.links:
        a, b = link.a, link.b
        _meet(placed[a.segment].outward_pose(a.road, a.end),
              placed[b.segment].outward_pose(b.road, b.end))
    # junction midpoints are 100 + 80 + 100 m apart
    assert placed['east'].frame.x == approx(280.0)


def test_world_offset(defaults):
    network = parse(document(
        connection_road(),
        header='<header xOffset="5" yOffset="-2" alphaOffset="90"/>'))
    placed, = place_all(network, _build(network, defaults))
    start = placed.roads[0].resolved.start
    assert (start.x, start.y, start.phi) == approx((5, -2, math.pi / 2))


def test_unreachable_segment(defaults):
    network = parse(document(connection_road('a'), connection_road('b')))
    with raises(PlacementError) as info:
        place_all(network, _build(network, defaults))
    assert "'b'" in info.value.msg


def test_curved_end(defaults):
    curved = ('<connectionRoad id="k"><road id="r"><referenceLine>'
              '<arc length="20" radius="40"/></referenceLine></road>'
              '</connectionRoad>')
    network = parse(document(
        connection_road(), curved,
        links=pair('segmentLink', ('c', 'r', 'end'), ('k', 'r', 'start'))))
    with raises(PlacementError) as info:
        place_all(network, _build(network, defaults))
    assert 'curvature' in info.value.msg
    assert info.value.exit_code == 2


def test_over_determined(defaults):
    network = parse(document(
        connection_road('a'), connection_road('b'),
        links=pair('segmentLink', ('a', 'r', 'end'), ('b', 'r', 'start')) +
        pair('segmentLink', ('b', 'r', 'end'), ('a', 'r', 'start'))))
    with raises(PlacementError) as info:
        place_all(network, _build(network, defaults))
    assert 'over-determine' in info.value.msg


def test_road_links(examples, defaults):
    network = parse(read_file(examples / 'two_tjunctions.xml'))
    model = assemble(network, _build(network, defaults), defaults)
    link = model.road('link.road')
    assert link.predecessor.target == 'west.main.end'
    assert link.predecessor.contact_point == 'end'
    assert link.successor.target == 'east.main.start'
    assert link.successor.contact_point == 'start'
    assert link.start_lane_links == ((-1, -1), (1, 1))
    west = model.road('west.main.end')
    assert west.successor.target == 'link.road'
    assert west.predecessor.element_type == 'junction'
    assert len(model.junctions) == 2
    assert model.notes == ()


def test_lane_count_note(defaults):
    lanes = '<lanes><lane side="left"/><lane side="right"/>' \
            '<lane side="right"/></lanes>'
    wide = ('<connectionRoad id="w"><road id="r" classification="main">'
            '<referenceLine><line length="50"/></referenceLine>{}</road>'
            '</connectionRoad>'.format(lanes))
    network = parse(document(
        connection_road(), wide,
        links=pair('segmentLink', ('c', 'r', 'end'), ('w', 'r', 'start'))))
    model = assemble(network, _build(network, defaults), defaults)
    assert len(model.notes) == 1
    assert '2 and 3 lanes' in model.notes[0]
    assert model.road('w.r').start_lane_links == ((-1, -1), (1, 1))


def test_close_roads(examples, defaults):
    network = parse(read_file(examples / 'network.xml'))
    model = assemble(network, _build(network, defaults), defaults,
                     n_threads=3)
    closing = [road for road in model.roads if road.role == 'closing']
    assert len(closing) == 3
    for road, request in zip(closing, network.close_requests):
        a = model.road(road.predecessor.target)
        b = model.road(road.successor.target)
        _meet(road.outward_pose('start'),
              a.outward_pose(road.predecessor.contact_point))
        end = road.outward_pose('end')
        other = b.outward_pose(road.successor.contact_point)
        assert (end.x, end.y) == approx((other.x, other.y), abs=1e-3)
        assert math.cos(end.phi - other.phi) == approx(-1.0, abs=1e-6)
        assert road.profile.kappa_start == 0
        assert road.profile.kappa_end == 0
