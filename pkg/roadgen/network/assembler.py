"""
Network assembly
================

Segments are built in their own frames. The reference segment is put at
the world offset; every other segment follows from the links, found by a
breadth-first walk over the link graph in input order. Two linked ends
meet head to tail: the same point, opposite outward headings. Only ends
with zero curvature can be linked.

After placement the road links across segments are set, and every close
request gets a closing road from :py:func:`roadgen.network.close_gap`.
"""

import math
from collections import defaultdict, deque

from ..errors import (PlacementError, RoadGenError)
from ..geometry import (Pose, from_frame)
from ..lanes import (RoadLanes, Side, constant_track)
from ..lib import parallel_map
from ..run.logging import make_logger
from .compound import close_gap
from .model import (BuiltRoad, Contact, NetworkModel, PlacedSegment)

logger = make_logger('assemble')

KAPPA_EPS = 1e-12
POSITION_EPS = 1e-6
HEADING_EPS = 1e-8


def _check_straight(road, contact_point, end, line):
    kappa = road.kappa_at(contact_point)
    if abs(kappa) >= KAPPA_EPS:
        raise PlacementError(
            "end {} has curvature {:.6g} 1/m; only ends with zero curvature "
            "can be linked".format(end, kappa), line=line)


def _outward(built, end):
    ref = built.end(end.road, end.end)
    return built.road(ref.road).outward_pose(ref.contact_point)


def frame_for(outward, target):
    """Frame that puts the segment-local pose `outward` on the world pose
    `target`."""
    phi = target.phi - outward.phi
    c, s = math.cos(phi), math.sin(phi)
    return Pose.make(target.x - (c * outward.x - s * outward.y),
                     target.y - (s * outward.x + c * outward.y), phi)


def _meeting(frame, outward):
    """World pose the other side of a link must take: same point, opposite
    heading."""
    return from_frame(outward, frame).reversed()


def _end_ref(built, end, line):
    try:
        return built.end(end.road, end.end)
    except KeyError:
        raise PlacementError(
            "end {} is not open after building its segment".format(end),
            line=line)


def place_all(network, built_segments):
    """Move every built segment into world coordinates.

    :param network: :py:class:`roadgen.logical.LogicalNetwork`
    :param built_segments: :py:class:`BuiltSegment` list, in segment order.
    :rtype: list of :py:class:`PlacedSegment`, in segment order.
    :raises PlacementError: curved linked ends, segments not reachable
        from the reference segment, or links that contradict each other.
    """
    built = {b.id: b for b in built_segments}
    neighbours = defaultdict(list)
    for link in network.links:
        for this, other in ((link.a, link.b), (link.b, link.a)):
            ref = _end_ref(built[this.segment], this, link.line)
            road = built[this.segment].road(ref.road)
            _check_straight(road, ref.contact_point, this, link.line)
            neighbours[this.segment].append((this, other, link))

    reference = network.reference_segment or network.segments[0].id
    offset = network.world_offset
    frames = {reference: Pose.make(offset.x, offset.y, offset.alpha)}
    queue = deque([reference])
    while queue:
        current = queue.popleft()
        for this, other, link in neighbours[current]:
            target = _meeting(frames[current],
                              _outward(built[current], this))
            implied = frame_for(_outward(built[other.segment], other),
                                target)
            known = frames.get(other.segment)
            if known is None:
                frames[other.segment] = implied
                queue.append(other.segment)
                logger.debug("segment '%s' placed at %s", other.segment,
                             implied)
            elif math.hypot(known.x - implied.x, known.y - implied.y) > \
                    POSITION_EPS or \
                    known.heading_difference(implied) > HEADING_EPS:
                raise PlacementError(
                    "links over-determine segment '{}': placed at {} but "
                    "link {} - {} implies {}".format(
                        other.segment, known, this, other, implied),
                    line=link.line)

    missing = [s.id for s in network.segments if s.id not in frames]
    if missing:
        raise PlacementError(
            "segments {} are not linked to the reference segment '{}'"
            .format(", ".join("'{}'".format(m) for m in missing),
                    reference))

    return [PlacedSegment.place(built[s.id], frames[s.id])
            for s in network.segments]


def lane_links(road, contact_point, other, other_contact):
    """Lane pairs ``(own lane, other lane)`` across the contact of `road`
    with `other`. Across an end-to-start contact lane ids stay the same;
    meeting at like ends flips their sign."""
    section = road.section_at(contact_point)
    other_section = other.section_at(other_contact)
    sign = 1 if contact_point != other_contact else -1
    return tuple(
        (lane.index, sign * lane.index) for lane in
        sorted(section.lanes, key=lambda lane: lane.index)
        if other_section.has_lane(sign * lane.index))


def _lane_note(road, contact_point, other, other_contact):
    counts = []
    for r, c in ((road, contact_point), (other, other_contact)):
        section = r.section_at(c)
        counts.append(len(section.lanes))
    if counts[0] != counts[1]:
        return "roads '{}' and '{}' meet with {} and {} lanes".format(
            road.key, other.key, counts[0], counts[1])
    return None


def _connect(roads, key, contact_point, other_key, other_contact, notes):
    road = roads[key]
    other = roads[other_key]
    note = _lane_note(road, contact_point, other, other_contact)
    if note is not None:
        notes.append(note)
        logger.warning(note)
    roads[key] = road.linked(
        contact_point, Contact.road(other_key, other_contact),
        lane_links(road, contact_point, other, other_contact))
    roads[other_key] = other.linked(
        other_contact, Contact.road(key, contact_point),
        lane_links(other, other_contact, road, contact_point))


def closing_lanes(road, contact_point, length):
    """Lane layout of a closing road leaving `road` at `contact_point`: the
    lanes there, constant in width. Leaving at a start the sides swap."""
    section = road.section_at(contact_point)
    s = section.length if contact_point == 'end' else 0.0
    tracks = []
    for side in (Side.RIGHT, Side.LEFT):
        new_side = side if contact_point == 'end' else side.opposite
        for lane in section.lanes_on(side):
            tracks.append(constant_track(
                new_side, lane.width_at(s), length, lane.lane_type,
                lane.marking))
    tracks.sort(key=lambda t: t.side.value)
    return RoadLanes(length, tuple(tracks), section.center_marking)


def _close_one(job):
    key, road, contact_point, goal, settings, line = job
    start = road.outward_pose(contact_point)
    try:
        curve = close_gap(start, goal, settings)
    except RoadGenError as exc:
        if exc.line is None:
            exc.line = line
        raise
    return key, curve


def assemble(network, built_segments, defaults, n_threads=1):
    """Place the segments, link them and close the requested gaps.

    :param defaults: :py:class:`roadgen.config.Defaults`.
    :param n_threads: worker threads for the closing curves.
    :rtype: :py:class:`NetworkModel`
    """
    placed = place_all(network, built_segments)
    by_id = {p.id: p for p in placed}
    roads = {}
    for segment in placed:
        for road in segment.roads:
            roads[road.key] = road
    notes = []

    for link in network.links:
        ref_a = by_id[link.a.segment].segment.end(link.a.road, link.a.end)
        ref_b = by_id[link.b.segment].segment.end(link.b.road, link.b.end)
        _connect(roads, ref_a.road, ref_a.contact_point,
                 ref_b.road, ref_b.contact_point, notes)

    jobs = []
    ends = []
    for n, request in enumerate(network.close_requests):
        refs = []
        for end in (request.a, request.b):
            ref = _end_ref(by_id[end.segment].segment, end, request.line)
            _check_straight(roads[ref.road], ref.contact_point, end,
                            request.line)
            refs.append(ref)
        ref_a, ref_b = refs
        goal = roads[ref_b.road].outward_pose(ref_b.contact_point).reversed()
        key = "close.{}".format(n)
        jobs.append((key, roads[ref_a.road], ref_a.contact_point, goal,
                     defaults.close, request.line))
        ends.append((ref_a, ref_b))

    curves = parallel_map(_close_one, jobs, n_threads)

    for (key, curve), (ref_a, ref_b) in zip(curves, ends):
        a = roads[ref_a.road]
        classification = a.classification
        roads[key] = BuiltRoad(
            key=key,
            segment='close',
            profile=curve.profile,
            start=curve.start,
            lanes=closing_lanes(a, ref_a.contact_point, curve.length),
            classification=classification,
            road_type=defaults.road(classification).road_type,
            role='closing',
            source="{} -> {}".format(ref_a.road, ref_b.road))
        _connect(roads, key, 'start', ref_a.road, ref_a.contact_point,
                 notes)
        _connect(roads, key, 'end', ref_b.road, ref_b.contact_point, notes)

    junctions = tuple(j for segment in placed
                      for j in segment.segment.junctions)
    logger.info("assembled %d segments, %d roads, %d junctions, %d closing "
                "roads", len(placed), len(roads), len(junctions),
                len(curves))
    return NetworkModel(network.name, tuple(roads.values()), junctions,
                        network.date, tuple(notes), tuple(placed))
