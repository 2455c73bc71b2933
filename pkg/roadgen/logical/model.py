"""
Logical network model
=====================

Immutable records for a parsed logical road network. Everything here is in
input units except angles, which the parser has already turned into
radians. Road ends are addressed by ``(segment, road, end)`` with `end`
either ``'start'`` or ``'end'`` of the logical road.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from ..geometry import (CurvatureProfile, ProfileElement)
from ..lanes import (Side, LaneType, Marking)

END_NAMES = ('start', 'end')


class SegmentKind(Enum):
    CONNECTION_ROAD = 'connectionRoad'
    TJUNCTION = 'tjunction'
    XJUNCTION = 'xjunction'
    ROUNDABOUT = 'roundabout'

    @property
    def is_junction(self):
        return self is not SegmentKind.CONNECTION_ROAD

    @property
    def road_count(self):
        """Allowed ``(min, max)`` number of roads."""
        return {
            SegmentKind.CONNECTION_ROAD: (1, 1),
            SegmentKind.TJUNCTION: (2, 3),
            SegmentKind.XJUNCTION: (2, 4),
            SegmentKind.ROUNDABOUT: (2, None)}[self]

    @property
    def arm_count(self):
        return {SegmentKind.TJUNCTION: 3, SegmentKind.XJUNCTION: 4}.get(self)


class Classification(Enum):
    MAIN = 'main'
    ACCESS = 'access'
    ROUNDABOUT = 'roundabout'


class Turn(Enum):
    LEFT = 'left'
    RIGHT = 'right'
    STRAIGHT = 'straight'


@dataclass(frozen=True)
class LaneEntry:
    """An explicitly listed lane; `width` is None for the class default."""
    side: Side
    lane_type: LaneType = LaneType.DRIVING
    marking: Optional[Marking] = None
    width: Optional[float] = None


@dataclass(frozen=True)
class LaneChangeSpec:
    """A lane that appears (``widening``) or vanishes (``lapse``) over
    ``[s, s + length]``."""
    kind: str
    side: Side
    s: float
    length: float
    lane_type: LaneType = LaneType.DRIVING
    width: Optional[float] = None
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class LanesSpec:
    lanes: Tuple[LaneEntry, ...] = ()
    changes: Tuple[LaneChangeSpec, ...] = ()
    center_marking: Optional[Marking] = None


@dataclass(frozen=True)
class RoadSpec:
    id: str
    classification: Classification
    reference_line: Tuple[ProfileElement, ...]
    lanes: Optional[LanesSpec] = None
    line: Optional[int] = field(default=None, compare=False)

    @property
    def profile(self):
        return CurvatureProfile.build(self.reference_line)

    @property
    def length(self):
        return self.profile.total_length


@dataclass(frozen=True)
class IntersectionPoint:
    """Road `road` crosses (or touches) `ref_road`: the point lies at `ref_s`
    on the reference road and at `s` on `road`, where `road` has heading
    `alpha` relative to the reference road's tangent."""
    ref_road: str
    ref_s: float
    road: str
    s: float
    alpha: float
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class JunctionArea:
    """Cut distances along `road` before and after its intersection
    point(s); None means the computed default."""
    road: str
    s_minus: Optional[float] = None
    s_plus: Optional[float] = None
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class AdditionalLane:
    """Extra turn lane on the arm of `road` that contains its logical
    `end`."""
    road: str
    end: str
    turn: Turn
    min_radius: Optional[float] = None
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class ConnectionSpec:
    """An explicitly permitted movement. Lanes are OpenDRIVE lane ids on
    the respective arm; None lets the connection policy choose."""
    from_road: str
    from_end: str
    to_road: str
    to_end: str
    from_lane: Optional[int] = None
    to_lane: Optional[int] = None
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class CouplerSpec:
    junction_areas: Tuple[JunctionArea, ...] = ()
    additional_lanes: Tuple[AdditionalLane, ...] = ()
    connections: Tuple[ConnectionSpec, ...] = ()
    left_turn_lanes: Optional[Classification] = None

    def area_for(self, road_id):
        for area in self.junction_areas:
            if area.road == road_id:
                return area
        return None


@dataclass(frozen=True)
class IntersectionSpec:
    points: Tuple[IntersectionPoint, ...]
    coupler: CouplerSpec = CouplerSpec()

    @property
    def reference_road(self):
        return self.points[0].ref_road


@dataclass(frozen=True)
class SegmentSpec:
    id: str
    kind: SegmentKind
    roads: Tuple[RoadSpec, ...]
    intersection: Optional[IntersectionSpec] = None
    line: Optional[int] = field(default=None, compare=False)

    def road(self, road_id):
        for road in self.roads:
            if road.id == road_id:
                return road
        raise KeyError(road_id)

    def has_road(self, road_id):
        return any(road.id == road_id for road in self.roads)


@dataclass(frozen=True)
class EndSpec:
    segment: str
    road: str
    end: str

    def __str__(self):
        return "{}.{}.{}".format(self.segment, self.road, self.end)


@dataclass(frozen=True)
class LinkSpec:
    a: EndSpec
    b: EndSpec
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class CloseSpec:
    a: EndSpec
    b: EndSpec
    line: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class WorldOffset:
    x: float = 0.0
    y: float = 0.0
    alpha: float = 0.0


@dataclass(frozen=True)
class LogicalNetwork:
    """The parsed input.

    .. py:attribute:: defaults_applied

        Human readable notes for every default the parser filled in.
    """
    name: str
    segments: Tuple[SegmentSpec, ...]
    links: Tuple[LinkSpec, ...] = ()
    close_requests: Tuple[CloseSpec, ...] = ()
    world_offset: WorldOffset = WorldOffset()
    reference_segment: Optional[str] = None
    date: Optional[str] = None
    defaults_applied: Tuple[str, ...] = field(default=(), compare=False)

    def segment(self, segment_id):
        for segment in self.segments:
            if segment.id == segment_id:
                return segment
        raise KeyError(segment_id)

    def has_segment(self, segment_id):
        return any(s.id == segment_id for s in self.segments)
