"""
Built roads and segments
========================

The concrete side of the pipeline. A |BuiltRoad| is a road as OpenDRIVE
will see it: a curvature profile with a start pose, lane tracks, links to
its neighbours. Segments are built in their own frame and moved into
world coordinates by the assembler; every record here is immutable, so
moving a segment produces new records.

Roads and junctions are identified by string keys until the emitter
assigns numeric OpenDRIVE ids.

.. |BuiltRoad| replace:: :py:class:`BuiltRoad`
"""

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, Optional, Tuple

from ..geometry import (Pose, CurvatureProfile, resolve, from_frame)
from ..lanes import (RoadLanes, WidthPoly)


@dataclass(frozen=True)
class Contact:
    """Target of a road link: another road (with the contact point on that
    road) or a junction."""
    element_type: str
    target: str
    contact_point: Optional[str] = None

    @staticmethod
    def road(key, contact_point):
        return Contact('road', key, contact_point)

    @staticmethod
    def junction(key):
        return Contact('junction', key)


@dataclass(frozen=True)
class BuiltRoad:
    """A concrete road.

    .. py:attribute:: lane_offset

        Optional lateral shift of the lane reference line, as a width
        polynomial. Junction connecting roads use it to put their single
        right lane on the reference line.

    .. py:attribute:: start_lane_links, end_lane_links

        Lane links to the road across the start and end contact, as
        ``((own lane, other lane), ...)``.
    """
    key: str
    segment: str
    profile: CurvatureProfile
    start: Pose
    lanes: RoadLanes
    classification: str
    road_type: str = 'town'
    lane_offset: Optional[WidthPoly] = None
    junction: Optional[str] = None
    role: Optional[str] = None
    predecessor: Optional[Contact] = None
    successor: Optional[Contact] = None
    start_lane_links: Tuple[Tuple[int, int], ...] = ()
    end_lane_links: Tuple[Tuple[int, int], ...] = ()
    source: Optional[str] = None
    line: Optional[int] = field(default=None, compare=False)

    @cached_property
    def resolved(self):
        return resolve(self.profile, self.start)

    @cached_property
    def sections(self):
        return self.lanes.sections()

    @property
    def length(self):
        return self.profile.total_length

    def pose_at_contact(self, contact_point):
        """Pose at the start or end, heading along the reference line."""
        if contact_point == 'start':
            return self.resolved.start
        return self.resolved.end_pose

    def outward_pose(self, contact_point):
        """Pose at a road end with the heading pointing away from the
        road."""
        pose = self.pose_at_contact(contact_point)
        return pose if contact_point == 'end' else pose.reversed()

    def kappa_at(self, contact_point):
        if contact_point == 'start':
            return self.profile.kappa_start
        return self.profile.kappa_end

    def section_at(self, contact_point):
        return self.sections[0] if contact_point == 'start' \
            else self.sections[-1]

    def placed(self, frame):
        """The same road with its start pose taken from the segment frame
        into the enclosing frame `frame`."""
        return replace(self, start=from_frame(self.start, frame))

    def linked(self, contact_point, contact, lane_links=()):
        """Set the link at one end."""
        if contact_point == 'start':
            return replace(self, predecessor=contact,
                           start_lane_links=tuple(lane_links))
        return replace(self, successor=contact,
                       end_lane_links=tuple(lane_links))


@dataclass(frozen=True)
class JunctionConnection:
    incoming: str
    connecting: str
    contact_point: str = 'start'
    lane_links: Tuple[Tuple[int, int], ...] = ()


@dataclass(frozen=True)
class JunctionRecord:
    key: str
    segment: str
    name: str
    connections: Tuple[JunctionConnection, ...] = ()


@dataclass(frozen=True)
class EndRef:
    """Open end of a segment: the road with key `road`, at its start or
    end."""
    road: str
    contact_point: str


@dataclass(frozen=True)
class BuiltSegment:
    """Output of building one logical segment, in the segment frame.

    .. py:attribute:: ends

        Dictionary from logical ``(road id, end)`` to :py:class:`EndRef`.
    """
    id: str
    kind: str
    roads: Tuple[BuiltRoad, ...]
    junctions: Tuple[JunctionRecord, ...] = ()
    ends: Dict[Tuple[str, str], EndRef] = field(
        default_factory=dict, compare=False, hash=False)

    def road(self, key):
        for road in self.roads:
            if road.key == key:
                return road
        raise KeyError(key)

    def end(self, road_id, end):
        return self.ends[(road_id, end)]

    def outward_pose(self, road_id, end):
        ref = self.end(road_id, end)
        return self.road(ref.road).outward_pose(ref.contact_point)


@dataclass(frozen=True)
class PlacedSegment:
    """A segment moved into world coordinates: `frame` is the world pose
    of the segment frame's origin."""
    segment: BuiltSegment
    frame: Pose
    roads: Tuple[BuiltRoad, ...]

    @staticmethod
    def place(segment, frame):
        return PlacedSegment(segment, frame,
                             tuple(r.placed(frame) for r in segment.roads))

    @property
    def id(self):
        return self.segment.id

    def road(self, key):
        for road in self.roads:
            if road.key == key:
                return road
        raise KeyError(key)

    def outward_pose(self, road_id, end):
        ref = self.segment.end(road_id, end)
        return self.road(ref.road).outward_pose(ref.contact_point)


@dataclass(frozen=True)
class NetworkModel:
    """Everything the emitter needs: roads in id order, junctions, and the
    notes collected on the way."""
    name: str
    roads: Tuple[BuiltRoad, ...]
    junctions: Tuple[JunctionRecord, ...]
    date: Optional[str] = None
    notes: Tuple[str, ...] = ()
    segments: Tuple[PlacedSegment, ...] = field(default=(), compare=False)

    def road(self, key):
        for road in self.roads:
            if road.key == key:
                return road
        raise KeyError(key)
