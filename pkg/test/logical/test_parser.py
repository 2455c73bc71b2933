import math

from pytest import (raises, approx, mark)

from roadgen.errors import InputError
from roadgen.geometry import STRAIGHT
from roadgen.logical import (
    parse, serialize, read_file, arm_ends, crossing_s, SegmentKind,
    Classification, Turn, EndSpec)

from ..networks import (
    document, road, pair, xjunction, tjunction, roundabout, connection_road)


@mark.parametrize('name', ['xjunction', 'two_tjunctions', 'network'])
def test_examples_parse(examples, name):
    network = parse(read_file(examples / (name + '.xml')))
    assert network.segments
    assert network.has_segment(network.reference_segment)


def test_xjunction_example(examples):
    network = parse(read_file(examples / 'xjunction.xml'))
    segment = network.segment('x1')
    assert segment.kind is SegmentKind.XJUNCTION
    main = segment.road('main')
    assert main.reference_line[0].radius == approx(500)
    side = segment.road('side')
    assert side.classification is Classification.ACCESS
    spiral = side.reference_line[1]
    assert spiral.radius_start is STRAIGHT
    assert spiral.radius_end == approx(100)
    point = segment.intersection.points[0]
    assert point.alpha == approx(math.pi / 2)
    area = segment.intersection.coupler.area_for('main')
    assert (area.s_minus, area.s_plus) == (15, 15)


def test_angles_in_radians():
    network = parse(document(xjunction(angle=-120)))
    p = network.segments[0].intersection.points[0]
    assert p.alpha == approx(math.radians(-120))


def test_defaults_noted():
    text = document(
        '<connectionRoad id="c"><road id="r"><referenceLine>'
        '<line length="10"/></referenceLine></road></connectionRoad>')
    network = parse(text)
    assert network.name == 'roadNetwork'
    assert network.reference_segment == 'c'
    assert network.segment('c').road('r').classification is \
        Classification.MAIN
    notes = " ".join(network.defaults_applied)
    assert "classification" in notes
    assert "header" in notes


def test_header():
    text = document(
        connection_road(),
        header='<header name="net" date="2020-01-01" xOffset="10" '
               'alphaOffset="90"/>')
    network = parse(text)
    assert network.name == 'net'
    assert network.date == '2020-01-01'
    assert network.world_offset.x == 10
    assert network.world_offset.alpha == approx(math.pi / 2)


def test_arm_ends():
    x = parse(document(xjunction())).segments[0]
    assert arm_ends(x, x.road('main')) == ['start', 'end']
    t = parse(document(tjunction())).segments[0]
    assert arm_ends(t, t.road('branch')) == ['end']
    assert crossing_s(t, t.road('main')) == 100
    ra = parse(document(roundabout())).segments[0]
    assert arm_ends(ra, ra.road('ring')) == []
    assert arm_ends(ra, ra.road('a0')) == ['end']


def test_coupler():
    coupler = (
        '<coupler leftTurnLanes="main">'
        '<additionalLane road="side" end="start" turn="right" '
        'minRadius="12"/>'
        '<connection fromRoad="main" fromEnd="start" toRoad="side" '
        'toEnd="end" fromLane="-1"/>'
        '</coupler>')
    spec = parse(document(xjunction(coupler=coupler))).segments[0]
    coupler = spec.intersection.coupler
    assert coupler.left_turn_lanes is Classification.MAIN
    lane = coupler.additional_lanes[0]
    assert (lane.road, lane.end, lane.turn, lane.min_radius) == \
        ('side', 'start', Turn.RIGHT, 12)
    c = coupler.connections[0]
    assert (c.from_lane, c.to_lane) == (-1, None)


def test_error_carries_line():
    text = '<roadNetwork>\n<segments>\n<connectionRoad id="c">\n' \
           '<road id="r"><referenceLine><line length="-1"/>' \
           '</referenceLine></road>\n</connectionRoad>\n</segments>\n' \
           '</roadNetwork>'
    with raises(InputError) as info:
        parse(text)
    assert info.value.line == 4
    assert 'length' in info.value.msg
    assert str(info.value).startswith('line 4:')


@mark.parametrize('text, fragment', [
    ('<roadNetwork><segments/></roadNetwork>', 'no segments'),
    ('<network/>', 'root element'),
    ('<roadNetwork><segments>', 'malformed'),
    (document(connection_road(), connection_road()), 'used twice'),
    (document('<connectionRoad id="c"><road id="r" colour="red">'
              '<referenceLine><line length="1"/></referenceLine></road>'
              '</connectionRoad>'), 'unknown attribute'),
    (document('<connectionRoad id="c"><road id="r"><referenceLine>'
              '<clothoid length="1"/></referenceLine></road>'
              '</connectionRoad>'), 'unknown element'),
    (document('<connectionRoad id="c"><road id="r"><referenceLine>'
              '<arc length="10" radius="50"/><line length="10"/>'
              '</referenceLine></road></connectionRoad>'), 'curvature'),
    (document(xjunction(angle=180)), 'tangent'),
    (document(xjunction().replace('refS="100"', 'refS="300"')), 'beyond'),
    (document(tjunction().replace('s="0"', 's="50"')), 'arms'),
    (document(roundabout().replace('length="188', 'length="180')),
     'must close'),
    (document(connection_road(),
              links=pair('segmentLink', ('c', 'r', 'end'),
                         ('c', 'q', 'start'))), 'unknown road'),
    (document(tjunction(), connection_road(),
              links=pair('segmentLink', ('t', 'main', 'end'),
                         ('c', 'r', 'start')) +
              pair('segmentLink', ('t', 'main', 'end'),
                   ('c', 'r', 'end'))), 'used twice'),
    (document(tjunction(), connection_road(),
              links=pair('segmentLink', ('t', 'branch', 'start'),
                         ('c', 'r', 'start'))), 'inside the junction'),
    (document(xjunction(coupler='<coupler><connection fromRoad="main" '
                                'fromEnd="end" toRoad="main" toEnd="end"/>'
                                '</coupler>')), 'U-turn'),
])
def test_invalid(text, fragment):
    with raises(InputError) as info:
        parse(text)
    assert fragment in info.value.msg


def test_end_spec_str():
    assert str(EndSpec('a', 'b', 'end')) == 'a.b.end'


@mark.parametrize('name', ['xjunction', 'two_tjunctions', 'network'])
def test_serialize_fixpoint(examples, name):
    network = parse(read_file(examples / (name + '.xml')))
    text = serialize(network)
    again = parse(text)
    assert again == network
    assert serialize(again) == text


def test_serialize_writes_defaults():
    text = serialize(parse(document(road_segment())))
    assert 'classification="main"' in text
    assert 'referenceSegment="c"' in text


def road_segment():
    return '<connectionRoad id="c">{}</connectionRoad>'.format(
        road('r', 10).replace(' classification="main"', ''))
