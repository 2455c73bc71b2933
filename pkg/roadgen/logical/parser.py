"""
Parser and serializer for the logical road network format.

The parser walks the lxml tree itself: unknown elements and attributes are
errors, every error names the input line. Angles are read in degrees and
stored in radians; this module is the only place where that conversion
happens.
"""

import math
from collections import Counter

from lxml import etree

from ..errors import (InputError, RoadGenError)
from ..geometry import (
    ProfileElement, CurvatureProfile, STRAIGHT, normalize_angle)
from ..geometry.profile import LENGTH_EPS
from ..lanes import (Side, LaneType, Marking, parse_enum)
from ..run.logging import make_logger
from .model import (
    END_NAMES, SegmentKind, Classification, Turn, LaneEntry, LaneChangeSpec,
    LanesSpec, RoadSpec, IntersectionPoint, JunctionArea, AdditionalLane,
    ConnectionSpec, CouplerSpec, IntersectionSpec, SegmentSpec, EndSpec,
    LinkSpec, CloseSpec, WorldOffset, LogicalNetwork)

logger = make_logger('parser')

# tolerance for "the intersection point lies at a road end"
END_TOLERANCE = 1e-6


def _parser():
    return etree.XMLParser(remove_comments=True, remove_pis=True)


def read_file(path):
    """Parse an input file into an lxml element tree."""
    try:
        return etree.parse(str(path), _parser())
    except OSError as exc:
        raise InputError("cannot read '{}': {}".format(path, exc))
    except etree.XMLSyntaxError as exc:
        raise InputError("malformed XML: {}".format(exc.msg),
                         line=exc.lineno)


def from_string(text):
    """Parse XML text (``str`` or ``bytes``) into an lxml element tree."""
    if isinstance(text, str):
        text = text.encode('utf-8')
    try:
        return etree.ElementTree(etree.fromstring(text, _parser()))
    except etree.XMLSyntaxError as exc:
        raise InputError("malformed XML: {}".format(exc.msg),
                         line=exc.lineno)


def document_root(document):
    if isinstance(document, (str, bytes)):
        document = from_string(document)
    if isinstance(document, etree._ElementTree):
        return document.getroot()
    return document


class _Element:
    """Attribute access with unknown-attribute checking."""
    def __init__(self, el, required=(), optional=()):
        self.el = el
        self.line = el.sourceline
        unknown = set(el.attrib) - set(required) - set(optional)
        if unknown:
            raise InputError(
                "unknown attribute(s) {} on <{}>".format(
                    ", ".join(sorted(unknown)), el.tag), line=self.line)
        for key in required:
            if key not in el.attrib:
                raise InputError(
                    "<{}> needs attribute '{}'".format(el.tag, key),
                    line=self.line)

    def has(self, key):
        return key in self.el.attrib

    def str(self, key, default=None):
        return self.el.get(key, default)

    def float(self, key, default=None):
        if key not in self.el.attrib:
            return default
        value = self.el.get(key)
        try:
            result = float(value)
        except ValueError:
            raise InputError("attribute {}='{}' is not a number".format(
                key, value), line=self.line)
        if not math.isfinite(result):
            raise InputError("attribute {}='{}' must be finite".format(
                key, value), line=self.line)
        return result

    def positive(self, key, default=None):
        value = self.float(key, default)
        if value is not None and not value > 0:
            raise InputError("attribute {} must be positive, got {}".format(
                key, value), line=self.line)
        return value

    def non_negative(self, key, default=None):
        value = self.float(key, default)
        if value is not None and value < 0:
            raise InputError(
                "attribute {} must not be negative, got {}".format(
                    key, value), line=self.line)
        return value

    def int(self, key, default=None):
        if key not in self.el.attrib:
            return default
        value = self.el.get(key)
        try:
            return int(value)
        except ValueError:
            raise InputError("attribute {}='{}' is not an integer".format(
                key, value), line=self.line)

    def radius(self, key):
        value = self.el.get(key)
        if value in ('straight', 'inf'):
            return STRAIGHT
        radius = self.float(key)
        if radius == 0:
            raise InputError("radius must not be zero", line=self.line)
        return radius

    def enum(self, key, cls, what, default=None):
        if key not in self.el.attrib:
            return default
        try:
            return parse_enum(cls, self.el.get(key), what)
        except InputError as exc:
            raise InputError(exc.msg, line=self.line)

    def end(self, key):
        value = self.el.get(key)
        if value not in END_NAMES:
            raise InputError("{} must be 'start' or 'end', got '{}'".format(
                key, value), line=self.line)
        return value


def _children(el, allowed):
    for child in el:
        if child.tag not in allowed:
            raise InputError("unknown element <{}> in <{}>".format(
                child.tag, el.tag), line=child.sourceline)
        yield child


def _parse_element(el):
    a = _Element(el, required=('length',),
                 optional=('radius', 'startRadius', 'endRadius'))
    length = a.positive('length')
    try:
        if el.tag == 'line':
            _Element(el, required=('length',))
            return ProfileElement.line(length)
        if el.tag == 'arc':
            _Element(el, required=('length', 'radius'))
            radius = a.radius('radius')
            if radius is STRAIGHT:
                raise InputError("arc needs a finite radius", line=a.line)
            return ProfileElement.arc(length, radius)
        _Element(el, required=('length', 'startRadius', 'endRadius'))
        return ProfileElement.spiral(
            length, a.radius('startRadius'), a.radius('endRadius'))
    except InputError:
        raise
    except RoadGenError as exc:
        raise InputError(exc.msg, line=a.line)


def _parse_reference_line(el):
    _Element(el)
    elements = [_parse_element(child)
                for child in _children(el, ('line', 'arc', 'spiral'))]
    if not elements:
        raise InputError("empty reference line", line=el.sourceline)
    try:
        CurvatureProfile.build(elements)
    except RoadGenError as exc:
        raise InputError(exc.msg, line=el.sourceline)
    return tuple(elements)


def _parse_lanes(el):
    a = _Element(el, optional=('centerMarking',))
    center = a.enum('centerMarking', Marking, 'marking')
    lanes = []
    changes = []
    for child in _children(el, ('lane', 'laneWidening', 'laneLapse')):
        if child.tag == 'lane':
            c = _Element(child, required=('side',),
                         optional=('type', 'marking', 'width'))
            lanes.append(LaneEntry(
                c.enum('side', Side, 'side'),
                c.enum('type', LaneType, 'lane type', LaneType.DRIVING),
                c.enum('marking', Marking, 'marking'),
                c.positive('width')))
        else:
            c = _Element(child, required=('side', 's', 'length'),
                         optional=('type', 'width'))
            changes.append(LaneChangeSpec(
                'widening' if child.tag == 'laneWidening' else 'lapse',
                c.enum('side', Side, 'side'),
                c.non_negative('s'), c.positive('length'),
                c.enum('type', LaneType, 'lane type', LaneType.DRIVING),
                c.positive('width'), line=c.line))
    return LanesSpec(tuple(lanes), tuple(changes), center)


def _parse_road(el, notes):
    a = _Element(el, required=('id',), optional=('classification',))
    if not a.has('classification'):
        notes.append("road '{}': classification main (default)".format(
            a.str('id')))
    classification = a.enum('classification', Classification,
                            'classification', Classification.MAIN)
    reference_line = None
    lanes = None
    for child in _children(el, ('referenceLine', 'lanes')):
        if child.tag == 'referenceLine':
            if reference_line is not None:
                raise InputError("second <referenceLine>",
                                 line=child.sourceline)
            reference_line = _parse_reference_line(child)
        else:
            if lanes is not None:
                raise InputError("second <lanes>", line=child.sourceline)
            lanes = _parse_lanes(child)
    if reference_line is None:
        raise InputError("road '{}' has no <referenceLine>".format(
            a.str('id')), line=a.line)
    return RoadSpec(a.str('id'), classification, reference_line, lanes,
                    line=a.line)


def _parse_point(el):
    a = _Element(el, required=('refRoad', 'refS', 'road', 's', 'angle'))
    return IntersectionPoint(
        a.str('refRoad'), a.non_negative('refS'), a.str('road'),
        a.non_negative('s'), normalize_angle(math.radians(a.float('angle'))),
        line=a.line)


def _parse_coupler(el):
    a = _Element(el, optional=('leftTurnLanes',))
    areas = []
    lanes = []
    connections = []
    for child in _children(
            el, ('junctionArea', 'additionalLane', 'connection')):
        if child.tag == 'junctionArea':
            c = _Element(child, required=('road',),
                         optional=('sMinus', 'sPlus'))
            areas.append(JunctionArea(
                c.str('road'), c.positive('sMinus'), c.positive('sPlus'),
                line=c.line))
        elif child.tag == 'additionalLane':
            c = _Element(child, required=('road', 'end', 'turn'),
                         optional=('minRadius',))
            turn = c.enum('turn', Turn, 'turn')
            if turn is Turn.STRAIGHT:
                raise InputError("additional lanes turn left or right",
                                 line=c.line)
            lanes.append(AdditionalLane(
                c.str('road'), c.end('end'), turn, c.positive('minRadius'),
                line=c.line))
        else:
            c = _Element(child,
                         required=('fromRoad', 'fromEnd', 'toRoad', 'toEnd'),
                         optional=('fromLane', 'toLane'))
            connections.append(ConnectionSpec(
                c.str('fromRoad'), c.end('fromEnd'),
                c.str('toRoad'), c.end('toEnd'),
                c.int('fromLane'), c.int('toLane'), line=c.line))
    return CouplerSpec(
        tuple(areas), tuple(lanes), tuple(connections),
        a.enum('leftTurnLanes', Classification, 'classification'))


def _parse_segment(el, notes):
    a = _Element(el, required=('id',))
    kind = SegmentKind(el.tag)
    roads = []
    points = []
    coupler = None
    for child in _children(el, ('road', 'intersectionPoint', 'coupler')):
        if child.tag == 'road':
            roads.append(_parse_road(child, notes))
        elif child.tag == 'intersectionPoint':
            points.append(_parse_point(child))
        else:
            if coupler is not None:
                raise InputError("second <coupler>", line=child.sourceline)
            coupler = _parse_coupler(child)

    intersection = None
    if points:
        intersection = IntersectionSpec(tuple(points),
                                        coupler or CouplerSpec())
    elif coupler is not None:
        raise InputError("<coupler> without <intersectionPoint>",
                         line=a.line)
    segment = SegmentSpec(a.str('id'), kind, tuple(roads), intersection,
                          line=a.line)
    check_segment(segment)
    return segment


def _parse_pair(el, cls):
    a = _Element(el, required=('fromSegment', 'fromRoad', 'fromEnd',
                               'toSegment', 'toRoad', 'toEnd'))
    return cls(EndSpec(a.str('fromSegment'), a.str('fromRoad'),
                       a.end('fromEnd')),
               EndSpec(a.str('toSegment'), a.str('toRoad'), a.end('toEnd')),
               line=a.line)


def parse(document):
    """Parse a logical road network.

    :param document: XML text, an lxml tree or its root element.
    :return: :py:class:`LogicalNetwork`
    :raises InputError: malformed XML, unknown elements or attributes,
        dangling references, violated invariants. The error carries the
        input line.
    """
    root = document_root(document)
    if root.tag != 'roadNetwork':
        raise InputError("root element must be <roadNetwork>, not <{}>"
                         .format(root.tag), line=root.sourceline)
    _Element(root)

    notes = []
    header = None
    segments = []
    links = []
    closes = []
    seen = set()
    for child in _children(root, ('header', 'segments', 'links',
                                  'closeRoadNetwork')):
        if child.tag in seen:
            raise InputError("second <{}>".format(child.tag),
                             line=child.sourceline)
        seen.add(child.tag)
        if child.tag == 'header':
            header = _Element(child, optional=(
                'name', 'date', 'xOffset', 'yOffset', 'alphaOffset',
                'referenceSegment'))
        elif child.tag == 'segments':
            _Element(child)
            segments = [_parse_segment(el, notes) for el in _children(
                child, [k.value for k in SegmentKind])]
        elif child.tag == 'links':
            _Element(child)
            links = [_parse_pair(el, LinkSpec)
                     for el in _children(child, ('segmentLink',))]
        else:
            _Element(child)
            closes = [_parse_pair(el, CloseSpec)
                      for el in _children(child, ('closeRoad',))]

    if not segments:
        raise InputError("no segments", line=root.sourceline)

    if header is None:
        notes.append("no header: name 'roadNetwork', world offset (0, 0, 0)")
        name, date, offset, reference = 'roadNetwork', None, WorldOffset(), \
            None
    else:
        name = header.str('name', 'roadNetwork')
        date = header.str('date')
        offset = WorldOffset(
            header.float('xOffset', 0.0), header.float('yOffset', 0.0),
            normalize_angle(math.radians(header.float('alphaOffset', 0.0))))
        reference = header.str('referenceSegment')

    if reference is None:
        reference = segments[0].id
        notes.append("reference segment '{}' (first segment)".format(
            reference))

    network = LogicalNetwork(
        name, tuple(segments), tuple(links), tuple(closes), offset,
        reference, date, tuple(notes))
    check_network(network, line=header.line if header else None)
    for note in notes:
        logger.debug("default: %s", note)
    return network


# semantic checks


def arm_ends(segment, road):
    """The logical ends of `road` that remain open after the junction of
    `segment` is cut out. Connection roads keep both ends; roads of a
    junction keep the ends on the sides of their intersection point that
    have length left; the ring of a roundabout keeps none."""
    if segment.intersection is None:
        return list(END_NAMES)
    if segment.kind is SegmentKind.ROUNDABOUT and \
            road.id == segment.intersection.reference_road:
        return []
    s = crossing_s(segment, road)
    ends = []
    if s > END_TOLERANCE:
        ends.append('start')
    if s < road.length - END_TOLERANCE:
        ends.append('end')
    return ends


def crossing_s(segment, road):
    """Abscissa of the intersection point on `road`."""
    for p in segment.intersection.points:
        if p.road == road.id:
            return p.s
        if p.ref_road == road.id:
            return p.ref_s
    raise InputError("road '{}' of segment '{}' has no intersection point"
                     .format(road.id, segment.id), line=road.line)


def check_segment(segment):
    lo, hi = segment.kind.road_count
    n = len(segment.roads)
    if n < lo or (hi is not None and n > hi):
        raise InputError(
            "{} '{}' has {} roads; allowed are {}".format(
                segment.kind.value, segment.id, n,
                "{}".format(lo) if lo == hi else
                "{} to {}".format(lo, hi if hi is not None else "any")),
            line=segment.line)

    counts = Counter(road.id for road in segment.roads)
    for road_id, count in counts.items():
        if count > 1:
            raise InputError("road id '{}' used twice in segment '{}'".format(
                road_id, segment.id), line=segment.line)

    for road in segment.roads:
        _check_lanes(road)

    if not segment.kind.is_junction:
        if segment.intersection is not None:
            raise InputError("connection road '{}' cannot have an "
                             "intersection point".format(segment.id),
                             line=segment.line)
        return

    if segment.intersection is None:
        raise InputError("{} '{}' needs intersection points".format(
            segment.kind.value, segment.id), line=segment.line)

    points = segment.intersection.points
    ref = points[0].ref_road
    if not segment.has_road(ref):
        raise InputError("unknown reference road '{}'".format(ref),
                         line=points[0].line)
    ref_road = segment.road(ref)

    for p in points:
        if p.ref_road != ref:
            raise InputError(
                "all intersection points of a segment share one reference "
                "road; got '{}' and '{}'".format(ref, p.ref_road),
                line=p.line)
        if not segment.has_road(p.road):
            raise InputError("unknown road '{}'".format(p.road), line=p.line)
        if p.road == ref:
            raise InputError("road '{}' intersects itself".format(p.road),
                             line=p.line)
        if p.ref_s > ref_road.length + END_TOLERANCE:
            raise InputError("refS={} beyond length {:.6g} of road '{}'"
                             .format(p.ref_s, ref_road.length, ref),
                             line=p.line)
        length = segment.road(p.road).length
        if p.s > length + END_TOLERANCE:
            raise InputError("s={} beyond length {:.6g} of road '{}'".format(
                p.s, length, p.road), line=p.line)
        if abs(math.sin(p.alpha)) < 1e-6:
            raise InputError("road '{}' is tangent to the reference road"
                             .format(p.road), line=p.line)

    on_points = Counter(p.road for p in points)
    for road in segment.roads:
        if road.id != ref and on_points[road.id] != 1:
            raise InputError(
                "road '{}' needs exactly one intersection point, has {}"
                .format(road.id, on_points[road.id]), line=road.line)

    if segment.kind is SegmentKind.ROUNDABOUT:
        _check_roundabout(segment, ref_road)
    else:
        ref_s = points[0].ref_s
        for p in points:
            if abs(p.ref_s - ref_s) > END_TOLERANCE:
                raise InputError(
                    "intersection points of a junction meet at one refS; "
                    "got {} and {}".format(ref_s, p.ref_s), line=p.line)
        arms = sum(len(arm_ends(segment, road)) for road in segment.roads)
        if arms != segment.kind.arm_count:
            raise InputError(
                "{} '{}' has {} arms, needs {}".format(
                    segment.kind.value, segment.id, arms,
                    segment.kind.arm_count), line=segment.line)

    _check_coupler(segment)


def _check_roundabout(segment, ring):
    elements = ring.reference_line
    if len(elements) != 1 or elements[0].kind.value != 'arc':
        raise InputError("roundabout ring '{}' must be a single arc".format(
            ring.id), line=ring.line)
    arc = elements[0]
    circumference = 2 * math.pi * abs(arc.radius)
    if abs(arc.length - circumference) > 1e-6 * circumference:
        raise InputError(
            "roundabout ring '{}' must close: length {:.6g} != 2πR = {:.6g}"
            .format(ring.id, arc.length, circumference), line=ring.line)
    for p in segment.intersection.points:
        road = segment.road(p.road)
        if END_TOLERANCE < p.s < road.length - END_TOLERANCE:
            raise InputError(
                "access road '{}' must meet the ring with one of its ends"
                .format(p.road), line=p.line)


def _check_coupler(segment):
    coupler = segment.intersection.coupler
    for area in coupler.junction_areas:
        if not segment.has_road(area.road):
            raise InputError("junction area names unknown road '{}'".format(
                area.road), line=area.line)
    for lane in coupler.additional_lanes:
        _check_arm(segment, lane.road, lane.end, lane.line)
    for c in coupler.connections:
        _check_arm(segment, c.from_road, c.from_end, c.line)
        _check_arm(segment, c.to_road, c.to_end, c.line)
        if (c.from_road, c.from_end) == (c.to_road, c.to_end):
            raise InputError("U-turn connections are not supported",
                             line=c.line)


def _check_arm(segment, road_id, end, line):
    if not segment.has_road(road_id):
        raise InputError("unknown road '{}'".format(road_id), line=line)
    if end not in arm_ends(segment, segment.road(road_id)):
        raise InputError("road '{}' has no arm at its {}".format(
            road_id, end), line=line)


def _check_lanes(road):
    if road.lanes is None:
        return
    for change in road.lanes.changes:
        if change.s + change.length > road.length + LENGTH_EPS:
            raise InputError(
                "lane {} over [{}, {}] beyond length {:.6g} of road '{}'"
                .format(change.kind, change.s, change.s + change.length,
                        road.length, road.id), line=change.line)


def check_network(network, line=None):
    ids = Counter(s.id for s in network.segments)
    for segment_id, count in ids.items():
        if count > 1:
            raise InputError("segment id '{}' used twice".format(segment_id))

    if not network.has_segment(network.reference_segment):
        raise InputError("unknown reference segment '{}'".format(
            network.reference_segment), line=line)

    used = {}
    for pair in network.links + network.close_requests:
        for end in (pair.a, pair.b):
            check_end(network, end, pair.line)
            if end in used:
                raise InputError(
                    "road end {} used twice (also on line {})".format(
                        end, used[end]), line=pair.line)
            used[end] = pair.line
        if pair.a == pair.b:
            raise InputError("road end {} linked to itself".format(pair.a),
                             line=pair.line)


def check_end(network, end, line=None):
    if not network.has_segment(end.segment):
        raise InputError("unknown segment '{}'".format(end.segment),
                         line=line)
    segment = network.segment(end.segment)
    if not segment.has_road(end.road):
        raise InputError("unknown road '{}' in segment '{}'".format(
            end.road, end.segment), line=line)
    if end.end not in arm_ends(segment, segment.road(end.road)):
        raise InputError("road end {} lies inside the junction".format(end),
                         line=line)


# serializer


def _num(x):
    return repr(float(x))


def _derived(x):
    """Values recomputed from stored ones (radii, degrees) are written with
    12 significant digits, so that writing is a fixpoint."""
    return '{:.12g}'.format(x)


def _radius(r):
    return 'straight' if r is STRAIGHT else _derived(r)


def _pair_attributes(pair):
    return {'fromSegment': pair.a.segment, 'fromRoad': pair.a.road,
            'fromEnd': pair.a.end, 'toSegment': pair.b.segment,
            'toRoad': pair.b.road, 'toEnd': pair.b.end}


def _serialize_road(parent, road):
    el = etree.SubElement(parent, 'road', id=road.id,
                          classification=road.classification.value)
    ref = etree.SubElement(el, 'referenceLine')
    for e in road.reference_line:
        if e.kind.value == 'line':
            etree.SubElement(ref, 'line', length=_num(e.length))
        elif e.kind.value == 'arc':
            etree.SubElement(ref, 'arc', length=_num(e.length),
                             radius=_radius(e.radius))
        else:
            etree.SubElement(ref, 'spiral', length=_num(e.length),
                             startRadius=_radius(e.radius_start),
                             endRadius=_radius(e.radius_end))
    if road.lanes is None:
        return
    lanes = etree.SubElement(el, 'lanes')
    if road.lanes.center_marking is not None:
        lanes.set('centerMarking', road.lanes.center_marking.value)
    for lane in road.lanes.lanes:
        item = etree.SubElement(lanes, 'lane', side=lane.side.value,
                                type=lane.lane_type.value)
        if lane.marking is not None:
            item.set('marking', lane.marking.value)
        if lane.width is not None:
            item.set('width', _num(lane.width))
    for change in road.lanes.changes:
        tag = 'laneWidening' if change.kind == 'widening' else 'laneLapse'
        item = etree.SubElement(
            lanes, tag, side=change.side.value, s=_num(change.s),
            length=_num(change.length), type=change.lane_type.value)
        if change.width is not None:
            item.set('width', _num(change.width))


def _serialize_coupler(parent, coupler):
    el = etree.SubElement(parent, 'coupler')
    if coupler.left_turn_lanes is not None:
        el.set('leftTurnLanes', coupler.left_turn_lanes.value)
    for area in coupler.junction_areas:
        item = etree.SubElement(el, 'junctionArea', road=area.road)
        if area.s_minus is not None:
            item.set('sMinus', _num(area.s_minus))
        if area.s_plus is not None:
            item.set('sPlus', _num(area.s_plus))
    for lane in coupler.additional_lanes:
        item = etree.SubElement(el, 'additionalLane', road=lane.road,
                                end=lane.end, turn=lane.turn.value)
        if lane.min_radius is not None:
            item.set('minRadius', _num(lane.min_radius))
    for c in coupler.connections:
        item = etree.SubElement(el, 'connection', fromRoad=c.from_road,
                                fromEnd=c.from_end, toRoad=c.to_road,
                                toEnd=c.to_end)
        if c.from_lane is not None:
            item.set('fromLane', str(c.from_lane))
        if c.to_lane is not None:
            item.set('toLane', str(c.to_lane))


def serialize(network):
    """Write `network` back in the input format. All defaults are written
    out explicitly; parsing the result gives an equivalent network.

    :rtype: str
    """
    root = etree.Element('roadNetwork')
    header = etree.SubElement(
        root, 'header', name=network.name,
        xOffset=_num(network.world_offset.x),
        yOffset=_num(network.world_offset.y),
        alphaOffset=_derived(math.degrees(network.world_offset.alpha)),
        referenceSegment=network.reference_segment)
    if network.date is not None:
        header.set('date', network.date)

    segments = etree.SubElement(root, 'segments')
    for segment in network.segments:
        el = etree.SubElement(segments, segment.kind.value, id=segment.id)
        for road in segment.roads:
            _serialize_road(el, road)
        if segment.intersection is None:
            continue
        for p in segment.intersection.points:
            etree.SubElement(el, 'intersectionPoint', refRoad=p.ref_road,
                             refS=_num(p.ref_s), road=p.road, s=_num(p.s),
                             angle=_derived(math.degrees(p.alpha)))
        _serialize_coupler(el, segment.intersection.coupler)

    if network.links:
        links = etree.SubElement(root, 'links')
        for link in network.links:
            etree.SubElement(links, 'segmentLink', **_pair_attributes(link))
    if network.close_requests:
        closes = etree.SubElement(root, 'closeRoadNetwork')
        for close in network.close_requests:
            etree.SubElement(closes, 'closeRoad', **_pair_attributes(close))

    return etree.tostring(root, pretty_print=True, xml_declaration=True,
                          encoding='UTF-8').decode('utf-8')
