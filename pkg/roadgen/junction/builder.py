"""
Junction builder
================

Turns one logical segment into concrete roads. For a junction this means:
position the roads in the junction frame, cut out the junction area, add
turn lanes, and build one connecting road per permitted pair of incoming
and outgoing lanes. Each connecting road carries a single lane to the
right of its reference line.

Which lanes connect is decided per incoming arm. Without explicit
``<connection>`` entries every other arm is reachable: straight on lane by
lane from the inside, left turns from the left-turn lane or the innermost
through lane into the innermost lane, right turns from the right-turn lane
or the outermost through lane into the outermost lane. Explicit entries
replace this for their incoming arm.
"""

import math
from collections import defaultdict

from ..errors import ConnectError, InputError, JunctionError
from ..geometry import normalize_angle
from ..lanes import (
    Side, LaneType, Marking, LaneTrack, RoadLanes, constant_width,
    transition, turn_lane_track)
from ..logical import (SegmentKind, Turn, road_lanes)
from ..network.model import (
    BuiltRoad, BuiltSegment, Contact, EndRef, JunctionConnection,
    JunctionRecord)
from ..run.logging import make_logger
from .connect import (connect, connect_offset, OFFSET_EPS)
from .frame import (ORIGIN, ArmGroup, position_arms, cut_junction_area)

logger = make_logger('junction')

WIDTH_EPS = 1e-9


def classify_turn(a, b, tolerance):
    """Turn from arm `a` into arm `b`; `tolerance` in radians."""
    delta = normalize_angle(b.heading_out - a.heading_in)
    if abs(delta) < tolerance:
        return Turn.STRAIGHT
    return Turn.LEFT if delta > 0 else Turn.RIGHT


def policy_pairs(a, b, turn):
    """Lane pairs ``(incoming lane id, outgoing lane id)`` for the default
    connection policy."""
    incoming = a.incoming_lanes
    outgoing = b.outgoing_lanes
    if not incoming or not outgoing:
        return []
    through = [lane for lane in incoming if not lane.tag] or incoming

    if turn is Turn.STRAIGHT:
        return [(i.index, o.index) for i, o in zip(through, outgoing)]

    tag = turn.value
    tagged = [lane for lane in incoming if lane.tag == tag]
    if turn is Turn.LEFT:
        source = tagged[0] if tagged else through[0]
        return [(source.index, outgoing[0].index)]
    source = tagged[-1] if tagged else through[-1]
    return [(source.index, outgoing[-1].index)]


def _explicit_pairs(spec, a, b, turn):
    pairs = policy_pairs(a, b, turn)
    if spec.from_lane is None and spec.to_lane is None:
        return pairs
    fallback = pairs[0] if pairs else (None, None)
    from_lane = spec.from_lane if spec.from_lane is not None \
        else fallback[0]
    to_lane = spec.to_lane if spec.to_lane is not None else fallback[1]
    if from_lane not in [lane.index for lane in a.incoming_lanes]:
        raise InputError("lane {} is not an incoming lane of {}.{}".format(
            from_lane, spec.from_road, spec.from_end), line=spec.line)
    if to_lane not in [lane.index for lane in b.outgoing_lanes]:
        raise InputError("lane {} is not an outgoing lane of {}.{}".format(
            to_lane, spec.to_road, spec.to_end), line=spec.line)
    return [(from_lane, to_lane)]


def _lane_width_poly(w_in, w_out, length):
    if abs(w_in - w_out) < WIDTH_EPS:
        return constant_width(w_in, 0.0, length)
    return transition(w_in, w_out, 0.0, length)


def build_connecting_road(key, segment_id, junction_key, a, in_lane,
                          b, out_lane, role, road_type='town',
                          min_radius=None):
    """Connecting road from lane `in_lane` of arm `a` to lane `out_lane` of
    arm `b`, starting on the incoming lane's midline.

    :return: ``(BuiltRoad, JunctionConnection)``
    :raises ConnectError: if no line/arc connection exists.
    """
    A = a.anchor(in_lane)
    B = b.anchor(out_lane)
    try:
        if abs(normalize_angle(B.phi - A.phi)) < OFFSET_EPS:
            geometry = connect_offset(A, B, min_radius)
        else:
            geometry = connect(A, B, min_radius)
    except ConnectError as exc:
        raise ConnectError("{} lane {} -> {} lane {}: {}".format(
            a.key, in_lane, b.key, out_lane, exc.msg), line=a.line)

    length = geometry.length
    width = _lane_width_poly(a.lane_width(in_lane), b.lane_width(out_lane),
                             length)
    track = LaneTrack(Side.RIGHT, LaneType.DRIVING, Marking.NONE, (width,))
    road = BuiltRoad(
        key=key,
        segment=segment_id,
        profile=geometry.profile,
        start=A,
        lanes=RoadLanes(length, (track,), Marking.NONE),
        classification=a.classification,
        road_type=road_type,
        lane_offset=width.scaled(0.5),
        junction=junction_key,
        role=role,
        predecessor=Contact.road(a.key, a.contact_point),
        successor=Contact.road(b.key, b.contact_point),
        start_lane_links=((-1, in_lane),),
        end_lane_links=((-1, out_lane),),
        source="{}:{} -> {}:{}".format(a.key, in_lane, b.key, out_lane))
    connection = JunctionConnection(a.key, key, 'start', ((in_lane, -1),))
    return road, connection


def _add_turn_lane(arm, turn, defaults):
    tag = turn.value
    if any(track.tag == tag for track in arm.lanes.tracks):
        return arm
    jd = defaults.junction
    width = defaults.road(arm.classification).lane_width
    track = turn_lane_track(
        arm.incoming_side, width, jd.turn_widening_length,
        jd.turn_storage_length, arm.length, arm.junction_at_end, tag)
    logger.debug("arm '%s': %s turn lane added", arm.key, tag)
    return arm.with_lanes(arm.lanes.with_track(track,
                                               inner=turn is Turn.LEFT))


def add_turn_lanes(arms, coupler, defaults):
    """Arms with the turn lanes asked for by the coupler: a left-turn lane
    on every incoming arm of the ``leftTurnLanes`` class that has a left
    turn, and one lane per ``<additionalLane>``."""
    tolerance = math.radians(defaults.junction.straight_tolerance_deg)
    arms = list(arms)

    if coupler.left_turn_lanes is not None:
        cls = coupler.left_turn_lanes.value
        for k, a in enumerate(arms):
            if a.classification != cls or not a.incoming_lanes:
                continue
            if any(classify_turn(a, b, tolerance) is Turn.LEFT
                   for b in arms if b is not a and b.outgoing_lanes):
                arms[k] = _add_turn_lane(a, Turn.LEFT, defaults)

    for extra in coupler.additional_lanes:
        if extra.turn is Turn.STRAIGHT:
            raise InputError("additional lanes turn left or right",
                             line=extra.line)
        for k, a in enumerate(arms):
            if a.road_id == extra.road and a.end == extra.end:
                try:
                    arms[k] = _add_turn_lane(a, extra.turn, defaults)
                except InputError as exc:
                    raise InputError(exc.msg, line=extra.line)
    return tuple(arms)


def _min_radii(coupler):
    return {(extra.road, extra.end, extra.turn): extra.min_radius
            for extra in coupler.additional_lanes
            if extra.min_radius is not None}


def _junction_movements(group, coupler, tolerance):
    """List of ``(a, b, turn, pairs)`` for all movements of a junction."""
    explicit = defaultdict(list)
    for spec in coupler.connections:
        explicit[(spec.from_road, spec.from_end)].append(spec)

    movements = []
    for a in group.arms:
        if not a.incoming_lanes:
            continue
        specs = explicit.get((a.road_id, a.end))
        if specs:
            for spec in specs:
                b = group.arm(spec.to_road, spec.to_end)
                turn = classify_turn(a, b, tolerance)
                movements.append(
                    (a, b, turn, _explicit_pairs(spec, a, b, turn)))
            continue
        for b in group.arms:
            if b is a:
                continue
            turn = classify_turn(a, b, tolerance)
            movements.append((a, b, turn, policy_pairs(a, b, turn)))
    return movements


def _roundabout_movements(group):
    before, after, access = group.arms

    def outer_first(a, b):
        return [(i.index, o.index) for i, o in zip(
            reversed(a.incoming_lanes), reversed(b.outgoing_lanes))]

    circulating = [(i.index, o.index) for i, o in zip(
        before.incoming_lanes, after.outgoing_lanes)]
    return [(access, after, 'entry', outer_first(access, after)),
            (before, access, 'exit', outer_first(before, access)),
            (before, after, 'circulating', circulating)]


def _exit_road(segment, arm, defaults):
    return BuiltRoad(
        key=arm.key,
        segment=segment.id,
        profile=arm.profile,
        start=arm.start,
        lanes=arm.lanes,
        classification=arm.classification,
        road_type=defaults.road(arm.classification).road_type,
        source=arm.road_id,
        line=arm.line)


def _build_group(segment, group, movements, defaults, min_radii):
    roads = []
    connections = []
    for a, b, turn, pairs in movements:
        role = turn.value if isinstance(turn, Turn) else turn
        radius = min_radii.get((a.road_id, a.end, turn))
        for in_lane, out_lane in pairs:
            key = "{}.{}".format(group.key, len(roads))
            road, connection = build_connecting_road(
                key, segment.id, group.key, a, in_lane, b, out_lane, role,
                defaults.road(a.classification).road_type, radius)
            roads.append(road)
            connections.append(connection)
    record = JunctionRecord(group.key, segment.id, group.key,
                            tuple(connections))
    return roads, record


def _assemble(segment, groups, connecting, records, defaults):
    exits = {}
    for group in groups:
        for arm in group.arms:
            road = exits.get(arm.key) or _exit_road(segment, arm, defaults)
            exits[arm.key] = road.linked(arm.contact_point,
                                         Contact.junction(group.key))

    ring = {arm.key for group in groups for arm in group.arms
            if arm.end is None}
    order = [key for key in exits if key not in ring] + \
        [key for key in exits if key in ring]
    ends = {}
    for group in groups:
        for arm in group.arms:
            if arm.end is not None:
                ends[(arm.road_id, arm.end)] = EndRef(arm.key,
                                                      arm.open_contact)
    roads = tuple(exits[key] for key in order) + tuple(connecting)
    return BuiltSegment(segment.id, segment.kind.value, roads,
                        tuple(records), ends)


def build_junction(segment, defaults):
    """Exit roads, connecting roads and the junction record of a T- or
    X-junction.

    :rtype: :py:class:`roadgen.network.BuiltSegment`
    """
    frame = cut_junction_area(position_arms(segment, defaults), defaults)
    coupler = segment.intersection.coupler
    tolerance = math.radians(defaults.junction.straight_tolerance_deg)
    group = frame.groups[0]
    group = ArmGroup(group.key,
                     add_turn_lanes(group.arms, coupler, defaults))

    movements = _junction_movements(group, coupler, tolerance)
    roads, record = _build_group(segment, group, movements, defaults,
                                 _min_radii(coupler))
    if not roads:
        raise JunctionError("junction '{}' has no connections".format(
            segment.id), line=segment.line)
    logger.debug("junction '%s': %d arms, %d connecting roads",
                 segment.id, len(group.arms), len(roads))
    return _assemble(segment, (group,), roads, (record,), defaults)


def build_roundabout(segment, defaults):
    """Ring pieces, access arms and one junction per access point, each
    with an entry, an exit and a circulating connection per lane pair.

    :rtype: :py:class:`roadgen.network.BuiltSegment`
    """
    frame = cut_junction_area(position_arms(segment, defaults), defaults)
    connecting = []
    records = []
    for group in frame.groups:
        roads, record = _build_group(segment, group,
                                     _roundabout_movements(group),
                                     defaults, {})
        connecting.extend(roads)
        records.append(record)
    logger.debug("roundabout '%s': %d access points, %d connecting roads",
                 segment.id, len(frame.groups), len(connecting))
    return _assemble(segment, frame.groups, connecting, records, defaults)


def build_connection_road(segment, defaults):
    """A connection road segment: the road itself, starting in the origin
    of the segment frame."""
    spec = segment.roads[0]
    key = "{}.{}".format(segment.id, spec.id)
    road = BuiltRoad(
        key=key,
        segment=segment.id,
        profile=spec.profile,
        start=ORIGIN,
        lanes=road_lanes(spec, defaults),
        classification=spec.classification.value,
        road_type=defaults.road(spec.classification.value).road_type,
        source=spec.id,
        line=spec.line)
    ends = {(spec.id, 'start'): EndRef(key, 'start'),
            (spec.id, 'end'): EndRef(key, 'end')}
    return BuiltSegment(segment.id, segment.kind.value, (road,), (), ends)


def build_segment(segment, defaults):
    """Build any logical segment in its own frame.

    :param segment: :py:class:`roadgen.logical.SegmentSpec`
    :param defaults: :py:class:`roadgen.config.Defaults`
    :rtype: :py:class:`roadgen.network.BuiltSegment`
    """
    if segment.kind is SegmentKind.CONNECTION_ROAD:
        built = build_connection_road(segment, defaults)
    elif segment.kind is SegmentKind.ROUNDABOUT:
        built = build_roundabout(segment, defaults)
    else:
        built = build_junction(segment, defaults)
    logger.debug("segment '%s': %d roads, %d junctions", segment.id,
                 len(built.roads), len(built.junctions))
    return built
