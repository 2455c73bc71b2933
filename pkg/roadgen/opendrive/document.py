"""
OpenDRIVE document model
========================

The emitter works in two steps. :py:func:`build_document` assigns numeric
ids and turns the :py:class:`roadgen.network.NetworkModel` into the flat
records below, one per XML element that carries information. The writer
only formats these records.

Road ids run from 1 in model order, junction ids from
``config['first_junction_id']``.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..config import config
from ..geometry import ElementKind
from ..lanes import Side
from ..run.logging import make_logger

logger = make_logger('opendrive')

VERSIONS = ('1.4', '1.5')

GEO_REFERENCE = ("+proj=tmerc +lat_0=0 +lon_0=0 +k=1 +x_0=0 +y_0=0 "
                 "+ellps=WGS84 +units=m +no_defs")

BOUNDS_STEP = 1.0
LENGTH_TOLERANCE = 1e-9


@dataclass(frozen=True)
class OdrHeader:
    rev_minor: int
    name: str
    date: Optional[str]
    north: float
    south: float
    east: float
    west: float
    rev_major: int = 1
    geo_reference: str = GEO_REFERENCE


@dataclass(frozen=True)
class OdrGeometry:
    s: float
    x: float
    y: float
    hdg: float
    length: float
    kind: ElementKind
    curv_start: float = 0.0
    curv_end: float = 0.0


@dataclass(frozen=True)
class OdrLink:
    element_type: str
    element_id: str
    contact_point: Optional[str] = None


@dataclass(frozen=True)
class OdrLane:
    id: int
    lane_type: str
    marking: str
    width: Tuple[Tuple[float, float, float, float, float], ...]
    predecessor: Optional[int] = None
    successor: Optional[int] = None


@dataclass(frozen=True)
class OdrLaneSection:
    s: float
    left: Tuple[OdrLane, ...]
    right: Tuple[OdrLane, ...]
    center_marking: str


@dataclass(frozen=True)
class OdrRoad:
    id: str
    name: str
    length: float
    junction: str
    road_type: str
    geometry: Tuple[OdrGeometry, ...]
    sections: Tuple[OdrLaneSection, ...]
    predecessor: Optional[OdrLink] = None
    successor: Optional[OdrLink] = None
    lane_offset: Optional[Tuple[float, float, float, float]] = None

    def link_at(self, contact_point):
        return self.predecessor if contact_point == 'start' \
            else self.successor

    def section_at(self, contact_point):
        return self.sections[0] if contact_point == 'start' \
            else self.sections[-1]


@dataclass(frozen=True)
class OdrConnection:
    id: str
    incoming: str
    connecting: str
    contact_point: str
    lane_links: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class OdrJunction:
    id: str
    name: str
    connections: Tuple[OdrConnection, ...]


@dataclass(frozen=True)
class OdrDocument:
    version: str
    header: OdrHeader
    roads: Tuple[OdrRoad, ...]
    junctions: Tuple[OdrJunction, ...]

    def road(self, road_id):
        for road in self.roads:
            if road.id == road_id:
                return road
        raise KeyError(road_id)


def _geometry(road):
    records = []
    for r in road.resolved.records:
        e = r.element
        records.append(OdrGeometry(
            r.s_offset, r.start.x, r.start.y, r.start.phi, e.length, e.kind,
            e.kappa_start, e.kappa_end))
    return tuple(records)


def _link(contact, road_ids, junction_ids):
    if contact is None:
        return None
    if contact.element_type == 'junction':
        return OdrLink('junction', junction_ids[contact.target])
    return OdrLink('road', road_ids[contact.target], contact.contact_point)


def _sections(road):
    sections = road.sections
    start_links = dict(road.start_lane_links)
    end_links = dict(road.end_lane_links)
    result = []
    last = len(sections) - 1
    for k, section in enumerate(sections):
        lanes = {Side.LEFT: [], Side.RIGHT: []}
        for lane in section.lanes:
            predecessor = lane.predecessor if k > 0 \
                else start_links.get(lane.index)
            successor = lane.successor if k < last \
                else end_links.get(lane.index)
            width = tuple((p.valid_from,) + p.odr_coefficients
                          for p in lane.width)
            lanes[lane.side].append(OdrLane(
                lane.index, lane.lane_type.odr_name, lane.marking.value,
                width, predecessor, successor))
        result.append(OdrLaneSection(
            section.s_start,
            tuple(sorted(lanes[Side.LEFT], key=lambda lane: -lane.id)),
            tuple(sorted(lanes[Side.RIGHT], key=lambda lane: -lane.id)),
            section.center_marking.value))
    return tuple(result)


def bounds(model, step=BOUNDS_STEP):
    """``(north, south, east, west)`` of all reference lines, sampled every
    `step` meters."""
    xs, ys = [], []
    for road in model.roads:
        for _, pose in road.resolved.sample(step):
            xs.append(pose.x)
            ys.append(pose.y)
    if not xs:
        return 0.0, 0.0, 0.0, 0.0
    return max(ys), min(ys), max(xs), min(xs)


def build_document(model, version='1.4'):
    """Number roads and junctions and collect the records to emit.

    :param model: :py:class:`roadgen.network.NetworkModel`
    :param version: ``'1.4'`` or ``'1.5'``.
    :rtype: :py:class:`OdrDocument`
    """
    if version not in VERSIONS:
        raise ValueError("unsupported OpenDRIVE version {}".format(version))

    road_ids = {road.key: str(n) for n, road in enumerate(model.roads, 1)}
    first = config['first_junction_id']
    junction_ids = {j.key: str(first + n)
                    for n, j in enumerate(model.junctions)}

    roads = []
    for road in model.roads:
        lane_offset = None
        if road.lane_offset is not None:
            lane_offset = road.lane_offset.odr_coefficients
        roads.append(OdrRoad(
            id=road_ids[road.key],
            name=road.key,
            length=road.length,
            junction=junction_ids[road.junction]
            if road.junction is not None else '-1',
            road_type=road.road_type,
            geometry=_geometry(road),
            sections=_sections(road),
            predecessor=_link(road.predecessor, road_ids, junction_ids),
            successor=_link(road.successor, road_ids, junction_ids),
            lane_offset=lane_offset))

    junctions = []
    for j in model.junctions:
        connections = tuple(
            OdrConnection(str(n), road_ids[c.incoming],
                          road_ids[c.connecting], c.contact_point,
                          c.lane_links)
            for n, c in enumerate(j.connections))
        junctions.append(OdrJunction(junction_ids[j.key], j.name,
                                     connections))

    north, south, east, west = bounds(model)
    header = OdrHeader(int(version.split('.')[1]), model.name, model.date,
                       north, south, east, west)
    logger.debug("document: %d roads, %d junctions", len(roads),
                 len(junctions))
    return OdrDocument(version, header, tuple(roads), tuple(junctions))


def _lane_ids(section):
    return {lane.id for lane in section.left + section.right}


def check_document(document):
    """Internal consistency of a document: junction ids on connecting
    roads, links that point back, positive geometry lengths that add up to
    the road length, and lane links that name existing lanes.

    :return: list of problem descriptions, empty if consistent.
    """
    problems = []
    roads = {road.id: road for road in document.roads}

    for road in document.roads:
        if any(g.length <= 0 for g in road.geometry):
            problems.append("road {}: geometry of zero length".format(
                road.id))
        total = math.fsum(g.length for g in road.geometry)
        if abs(total - road.length) > LENGTH_TOLERANCE * max(
                1.0, road.length):
            problems.append("road {}: geometry lengths add up to {} not {}"
                            .format(road.id, total, road.length))

        for contact_point in ('start', 'end'):
            link = road.link_at(contact_point)
            if link is None or link.element_type != 'road':
                continue
            other = roads.get(link.element_id)
            if other is None:
                problems.append("road {}: link to unknown road {}".format(
                    road.id, link.element_id))
                continue
            back = other.link_at(link.contact_point)
            if road.junction != '-1' and other.junction == '-1':
                expected = OdrLink('junction', road.junction)
            else:
                expected = OdrLink('road', road.id, contact_point)
            if back != expected:
                problems.append(
                    "road {} {}: road {} does not link back".format(
                        road.id, contact_point, other.id))

    for junction in document.junctions:
        for c in junction.connections:
            connecting = roads[c.connecting]
            incoming = roads[c.incoming]
            if connecting.junction != junction.id:
                problems.append(
                    "junction {}: connecting road {} carries junction {}"
                    .format(junction.id, connecting.id, connecting.junction))
            at = 'end' if incoming.successor == OdrLink(
                'junction', junction.id) else 'start'
            incoming_ids = _lane_ids(incoming.section_at(at))
            connecting_ids = _lane_ids(connecting.section_at(
                c.contact_point))
            for from_lane, to_lane in c.lane_links:
                if from_lane not in incoming_ids or \
                        to_lane not in connecting_ids:
                    problems.append(
                        "junction {} connection {}: lane link {} -> {} "
                        "names a missing lane".format(
                            junction.id, c.id, from_lane, to_lane))
    return problems
