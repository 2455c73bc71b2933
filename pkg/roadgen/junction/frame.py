"""
Junction frame
==============

All roads of a junction segment are moved into one frame whose origin is
the junction midpoint and whose x-axis is the reference road's tangent
there. A road crossing the reference road at its own abscissa `s` with
angle `α` is moved so that its pose at `s` becomes ``(0, 0, α)``.

Cutting the junction area out of every road leaves the |Arm| records: the
road pieces that survive, each with one end at the junction. For a
roundabout every ring piece between two access areas shows up twice, once
for the junction at either end.

.. |Arm| replace:: :py:class:`Arm`
"""

import math
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, Optional, Tuple

from ..errors import JunctionError
from ..geometry import (
    Pose, CurvatureProfile, ProfileElement, ResolvedReferenceLine, resolve,
    rigid_transform, to_frame, from_frame)
from ..lanes import (Side, RoadLanes)
from ..logical import (SegmentKind, SegmentSpec, crossing_s, road_lanes)
from ..logical.parser import END_TOLERANCE
from ..run.logging import make_logger

logger = make_logger('junction')

LENGTH_EPS = 1e-9
ORIGIN = Pose(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class Arm:
    """A road piece that ends at a junction.

    :param key: key of the built road.
    :param road_id: id of the logical road the piece was cut from.
    :param end: logical end of that road the piece contains, None for
        roundabout ring pieces.
    :param junction_at_end: True if the junction lies at the piece's end.
    :param s_range: interval of the logical road covered by the piece.
    """
    key: str
    road_id: str
    end: Optional[str]
    profile: CurvatureProfile
    start: Pose
    lanes: RoadLanes
    junction_at_end: bool
    s_range: Tuple[float, float]
    classification: str = 'main'
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

    @property
    def contact_point(self):
        """Contact point of the piece at the junction."""
        return 'end' if self.junction_at_end else 'start'

    @property
    def open_contact(self):
        return 'start' if self.junction_at_end else 'end'

    @property
    def junction_pose(self):
        if self.junction_at_end:
            return self.resolved.end_pose
        return self.resolved.start

    @property
    def heading_in(self):
        """Travel direction into the junction."""
        phi = self.junction_pose.phi
        return phi if self.junction_at_end else phi + math.pi

    @property
    def heading_out(self):
        """Travel direction out of the junction."""
        return self.heading_in + math.pi

    @property
    def junction_section(self):
        return self.sections[-1] if self.junction_at_end \
            else self.sections[0]

    @property
    def junction_s(self):
        """Section-local s of the junction end."""
        return self.junction_section.length if self.junction_at_end else 0.0

    @property
    def incoming_side(self):
        return Side.RIGHT if self.junction_at_end else Side.LEFT

    @property
    def outgoing_side(self):
        return self.incoming_side.opposite

    def _drivable(self, side):
        return [lane for lane in self.junction_section.lanes_on(side)
                if lane.lane_type.is_drivable]

    @property
    def incoming_lanes(self):
        """Drivable lanes leading into the junction, inner to outer."""
        return self._drivable(self.incoming_side)

    @property
    def outgoing_lanes(self):
        return self._drivable(self.outgoing_side)

    def lane_width(self, lane_id):
        return self.junction_section.lane(lane_id).width_at(self.junction_s)

    def anchor(self, lane_id):
        """Pose on the midline of lane `lane_id` at the junction end, heading
        in the lane's direction of travel."""
        section = self.junction_section
        if not section.has_lane(lane_id):
            raise JunctionError("arm '{}' has no lane {}".format(
                self.key, lane_id), line=self.line)
        t = section.lane_center_offset(lane_id, self.junction_s)
        pose = self.junction_pose.lateral(t)
        if lane_id > 0:
            pose = pose.reversed()
        return pose

    def with_lanes(self, lanes):
        return replace(self, lanes=lanes)


@dataclass(frozen=True)
class ArmGroup:
    """The arms meeting in one junction."""
    key: str
    arms: Tuple[Arm, ...]

    def arm(self, road_id, end):
        for arm in self.arms:
            if arm.road_id == road_id and arm.end == end:
                return arm
        raise KeyError((road_id, end))


@dataclass(frozen=True)
class JunctionFrame:
    """Roads of a junction segment in the segment frame.

    .. py:attribute:: lines

        Dictionary from road id to its resolved reference line, moved into
        the frame.

    .. py:attribute:: lanes

        Dictionary from road id to the lane tracks over the full road.

    .. py:attribute:: groups

        One :py:class:`ArmGroup` per junction; empty until
        :py:func:`cut_junction_area` ran.
    """
    segment: SegmentSpec
    lines: Dict[str, ResolvedReferenceLine]
    lanes: Dict[str, RoadLanes]
    midpoint: Pose = ORIGIN
    groups: Tuple[ArmGroup, ...] = ()

    @property
    def arms(self):
        """Every arm once per junction it touches."""
        return tuple(arm for group in self.groups for arm in group.arms)


def position_arms(segment, defaults):
    """Move all roads of a junction or roundabout segment into the junction
    frame.

    The reference road is moved so that its pose at the intersection
    point lies in the origin with heading 0. Every other road is rotated
    and shifted so that its pose at its own intersection abscissa becomes
    ``(0, 0, α)`` for a junction; for a roundabout the pose lands on the
    ring at ``refS`` with heading ring tangent plus ``α``. The ring itself
    keeps its start pose in the origin.

    :rtype: :py:class:`JunctionFrame`
    """
    intersection = segment.intersection
    ref_id = intersection.reference_road
    ref_road = segment.road(ref_id)
    ref_line = resolve(ref_road.profile, ORIGIN)
    lines = {}
    lanes = {road.id: road_lanes(road, defaults) for road in segment.roads}

    if segment.kind is SegmentKind.ROUNDABOUT:
        lines[ref_id] = ref_line
        for p in intersection.points:
            line = resolve(segment.road(p.road).profile, ORIGIN)
            Q = line.pose_at(p.s)
            T = ref_line.pose_at(p.ref_s)
            G = Pose.make(T.x, T.y, T.phi + p.alpha)
            lines[p.road] = line.transformed(
                lambda q, Q=Q, G=G: from_frame(to_frame(q, Q), G))
    else:
        P = ref_line.pose_at(intersection.points[0].ref_s)
        lines[ref_id] = ref_line.transformed(lambda q: to_frame(q, P))
        for p in intersection.points:
            line = resolve(segment.road(p.road).profile, ORIGIN)
            Q = line.pose_at(p.s)
            lines[p.road] = line.transformed(
                lambda q, Q=Q, tphi=Q.phi - p.alpha:
                rigid_transform(q, Q.x, Q.y, tphi))

    logger.debug("segment '%s': %d roads positioned", segment.id, len(lines))
    return JunctionFrame(segment, lines, lanes)


def _half_width(lanes, s):
    return max(lanes.outer_offset(Side.LEFT, s),
               lanes.outer_offset(Side.RIGHT, s))


def default_area(frame, margin):
    """Cut distance used where the coupler gives none: the widest half
    road width over the sine of the crossing angle, plus `margin`, taken
    as maximum over all intersection points."""
    segment = frame.segment
    values = []
    for p in segment.intersection.points:
        half = max(_half_width(frame.lanes[p.ref_road], p.ref_s),
                   _half_width(frame.lanes[p.road], p.s))
        values.append(half / abs(math.sin(p.alpha)))
    return max(values) + margin


def _area(coupler, road_id, default):
    area = coupler.area_for(road_id)
    s_minus = default if area is None or area.s_minus is None \
        else area.s_minus
    s_plus = default if area is None or area.s_plus is None \
        else area.s_plus
    return s_minus, s_plus


def _cut(segment, road, frame, s0, s1, end, junction_at_end):
    line = frame.lines[road.id]
    return Arm(
        key="{}.{}.{}".format(segment.id, road.id, end),
        road_id=road.id,
        end=end,
        profile=road.profile.extract(s0, s1),
        start=line.start if s0 <= 0.0 else line.pose_at(s0),
        lanes=frame.lanes[road.id].clip(s0, s1),
        junction_at_end=junction_at_end,
        s_range=(s0, s1),
        classification=road.classification.value,
        line=road.line)


def _road_arms(segment, road, frame, s_minus, s_plus):
    s_c = crossing_s(segment, road)
    length = road.length
    arms = []
    if s_c > END_TOLERANCE:
        s1 = s_c - s_minus
        if s1 <= LENGTH_EPS:
            raise JunctionError(
                "junction area sMinus={:.6g} exceeds the {:.6g} m of road "
                "'{}' before the intersection point".format(
                    s_minus, s_c, road.id), line=road.line)
        arms.append(_cut(segment, road, frame, 0.0, s1, 'start', True))
    if s_c < length - END_TOLERANCE:
        s0 = s_c + s_plus
        if s0 >= length - LENGTH_EPS:
            raise JunctionError(
                "junction area sPlus={:.6g} exceeds the {:.6g} m of road "
                "'{}' after the intersection point".format(
                    s_plus, length - s_c, road.id), line=road.line)
        arms.append(_cut(segment, road, frame, s0, length, 'end', False))
    return arms


def _junction_cut(frame, coupler, default):
    segment = frame.segment
    arms = []
    for road in segment.roads:
        s_minus, s_plus = _area(coupler, road.id, default)
        arms.extend(_road_arms(segment, road, frame, s_minus, s_plus))
    return (ArmGroup("{}.j0".format(segment.id), tuple(arms)),)


def _check_uniform(ring, lanes):
    length = lanes.length
    for track in lanes.tracks:
        if len(track.pieces) > 1 or track.begin > LENGTH_EPS or \
                track.end < length - LENGTH_EPS or \
                not track.pieces[0].is_constant:
            raise JunctionError(
                "lane changes on roundabout ring '{}' are not supported"
                .format(ring.id), line=ring.line)


def _roundabout_cut(frame, coupler, default):
    segment = frame.segment
    ring_id = segment.intersection.reference_road
    ring = segment.road(ring_id)
    ring_line = frame.lines[ring_id]
    ring_lanes = frame.lanes[ring_id]
    _check_uniform(ring, ring_lanes)
    circumference = ring.length
    kappa = ring.profile.kappa_start
    center = ORIGIN.lateral(1.0 / kappa).point
    radius = abs(1.0 / kappa)

    ring_minus, ring_plus = _area(coupler, ring_id, default)
    points = sorted(segment.intersection.points, key=lambda p: p.ref_s)
    areas = [(p.ref_s - ring_minus, p.ref_s + ring_plus) for p in points]

    n = len(points)
    pieces = []
    for k in range(n):
        lo_next = areas[(k + 1) % n][0] + (circumference if k + 1 == n
                                           else 0.0)
        length = lo_next - areas[k][1]
        if length <= LENGTH_EPS:
            raise JunctionError(
                "junction areas of access roads '{}' and '{}' overlap on "
                "ring '{}'".format(points[k].road, points[(k + 1) % n].road,
                                   ring_id), line=points[k].line)
        s0 = areas[k][1] % circumference
        pieces.append(Arm(
            key="{}.{}.{}".format(segment.id, ring_id, k),
            road_id=ring_id,
            end=None,
            profile=CurvatureProfile((ProfileElement.arc(
                length, 1.0 / kappa),)),
            start=ring_line.pose_at(s0),
            lanes=ring_lanes.clip(0.0, length),
            junction_at_end=False,
            s_range=(areas[k][1], lo_next),
            classification=ring.classification.value,
            line=ring.line))

    groups = []
    for k, p in enumerate(points):
        road = segment.road(p.road)
        s_minus, s_plus = _area(coupler, road.id, default)
        access = _road_arms(segment, road, frame, s_minus, s_plus)
        if len(access) != 1:
            raise JunctionError(
                "access road '{}' must meet the ring with one end".format(
                    road.id), line=p.line)
        arm = access[0]
        far = arm.resolved.start if arm.junction_at_end \
            else arm.resolved.end_pose
        if math.hypot(far.x - center[0], far.y - center[1]) <= radius:
            raise JunctionError(
                "access road '{}' ends inside ring '{}'; check its angle"
                .format(road.id, ring_id), line=p.line)
        before = replace(pieces[k - 1], junction_at_end=True)
        after = pieces[k]
        groups.append(ArmGroup("{}.j{}".format(segment.id, k),
                               (before, after, arm)))
    return tuple(groups)


def cut_junction_area(frame, defaults):
    """Cut the junction area out of every road of `frame`.

    Distances come from the coupler's ``<junctionArea>`` entries, or from
    :py:func:`default_area`. On a roundabout the ring's entry (if any)
    applies around every access point.

    :rtype: :py:class:`JunctionFrame` with :py:attr:`groups` set.
    :raises JunctionError: a cut distance exceeding the road, overlapping
        areas on a ring, or an access road ending inside the ring.
    """
    segment = frame.segment
    coupler = segment.intersection.coupler
    default = default_area(frame, defaults.junction.area_margin)
    logger.debug("segment '%s': default junction area %.3f m",
                 segment.id, default)
    if segment.kind is SegmentKind.ROUNDABOUT:
        groups = _roundabout_cut(frame, coupler, default)
    else:
        groups = _junction_cut(frame, coupler, default)
    return replace(frame, groups=groups)
