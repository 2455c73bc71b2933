"""
Lane layouts
============

Lanes live in the moving s,t-frame of a road's reference line: `t` is the
signed lateral offset, positive to the left. OpenDRIVE numbers lanes
outward from the center lane 0: left lanes 1, 2, ..., right lanes -1, -2,
....

While a road is being built, each lane is a |LaneTrack|: a lane that
exists over an s-interval of the road, with a width given piecewise in road
coordinates. Tracks are easy to clip when a road is cut at a junction and
easy to extend with turn lanes. |RoadLanes.sections| turns the tracks into
lane sections, the form OpenDRIVE wants: inside a section the set of lanes
is fixed and every width polynomial is expressed in section-local `s`.

.. |LaneTrack| replace:: :py:class:`LaneTrack`
.. |RoadLanes.sections| replace:: :py:meth:`RoadLanes.sections`
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Tuple

from ..errors import InputError
from .width import (WidthPoly, constant_width, widening, lapse)

EPS = 1e-9


class Side(Enum):
    LEFT = 'left'
    RIGHT = 'right'

    @property
    def sign(self):
        return 1 if self is Side.LEFT else -1

    @property
    def opposite(self):
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class LaneType(Enum):
    DRIVING = 'driving'
    TURN = 'turn'
    BORDER = 'border'
    SHOULDER = 'shoulder'
    SIDEWALK = 'sidewalk'
    PARKING = 'parking'
    MEDIAN = 'median'
    BIKING = 'biking'
    NONE = 'none'

    @property
    def odr_name(self):
        # OpenDRIVE 1.4/1.5 know no turn lanes
        return 'driving' if self is LaneType.TURN else self.value

    @property
    def is_drivable(self):
        return self in (LaneType.DRIVING, LaneType.TURN)


class Marking(Enum):
    NONE = 'none'
    SOLID = 'solid'
    BROKEN = 'broken'
    SOLID_SOLID = 'solid solid'
    SOLID_BROKEN = 'solid broken'
    BROKEN_SOLID = 'broken solid'
    BROKEN_BROKEN = 'broken broken'
    BOTTS_DOTS = 'botts dots'
    GRASS = 'grass'
    CURB = 'curb'


def parse_enum(cls, value, what):
    try:
        return cls(value)
    except ValueError:
        raise InputError("unknown {} '{}'; expected one of {}".format(
            what, value, ", ".join(m.value for m in cls)))


@dataclass(frozen=True)
class LaneSpec:
    """One lane inside a lane section. `width` holds the section's width
    polynomials, each with ``valid_from`` relative to the section start."""
    side: Side
    index: int
    lane_type: LaneType
    marking: Marking
    width: Tuple[WidthPoly, ...]
    predecessor: Optional[int] = None
    successor: Optional[int] = None
    tag: str = ''

    def width_at(self, s):
        poly = self.width[0]
        for p in self.width[1:]:
            if p.valid_from <= s + EPS:
                poly = p
        return poly(min(max(s - poly.valid_from, 0.0), poly.length))


@dataclass(frozen=True)
class LaneSectionPlan:
    s_start: float
    length: float
    lanes: Tuple[LaneSpec, ...]
    center_marking: Marking

    def lanes_on(self, side):
        return sorted((lane for lane in self.lanes if lane.side is side),
                      key=lambda lane: abs(lane.index))

    def lane(self, index):
        for lane in self.lanes:
            if lane.index == index:
                return lane
        raise KeyError(index)

    def has_lane(self, index):
        return any(lane.index == index for lane in self.lanes)

    def outer_offset(self, side, s):
        return outer_offset(self.lanes, side, s)

    def lane_center_offset(self, index, s):
        """Signed t of the midline of lane `index` at section-local `s`."""
        lane = self.lane(index)
        inner = math.fsum(
            other.width_at(s) for other in self.lanes
            if other.side is lane.side and abs(other.index) < abs(index))
        return lane.side.sign * (inner + 0.5 * lane.width_at(s))

    def boundaries(self, side, s):
        """Signed t of every lane boundary on `side`, inner to outer,
        starting at the center lane."""
        t = 0.0
        result = [0.0]
        for lane in self.lanes_on(side):
            t += lane.width_at(s)
            result.append(side.sign * t)
        return result


def outer_offset(lanes, side, s):
    """Sum of the widths of all lanes on `side` at section-local `s`."""
    return math.fsum(lane.width_at(s) for lane in lanes if lane.side is side)


def check_indices(lanes):
    """Lane indices per side must run ±1, ±2, ... without gaps."""
    for side in Side:
        indices = sorted(abs(lane.index) for lane in lanes
                         if lane.side is side)
        if indices != list(range(1, len(indices) + 1)):
            raise InputError("{} lane indices {} are not consecutive".format(
                side.value, indices))
        if any(lane.index * side.sign <= 0 for lane in lanes
               if lane.side is side):
            raise InputError("{} lanes need {} indices".format(
                side.value, 'positive' if side is Side.LEFT else 'negative'))


@dataclass(frozen=True)
class LaneTrack:
    """A lane over an s-interval of a road. `pieces` are width polynomials
    with ``valid_from``/``valid_to`` in road coordinates; together they
    cover the interval where the lane exists without gaps."""
    side: Side
    lane_type: LaneType
    marking: Marking
    pieces: Tuple[WidthPoly, ...]
    tag: str = ''

    @property
    def begin(self):
        return self.pieces[0].valid_from

    @property
    def end(self):
        return self.pieces[-1].valid_to

    def piece_at(self, s):
        for p in self.pieces:
            if p.valid_from - EPS <= s <= p.valid_to + EPS:
                return p
        return None

    def width_at(self, s):
        p = self.piece_at(s)
        if p is None:
            return 0.0
        return p(min(max(s - p.valid_from, 0.0), p.length))

    def clip(self, s0, s1):
        """Part of the track over road ``[s0, s1]``, re-based so that `s0`
        becomes 0. Returns None if nothing is left."""
        pieces = []
        for p in self.pieces:
            lo = max(p.valid_from, s0)
            hi = min(p.valid_to, s1)
            if hi - lo <= EPS:
                continue
            q = p.shifted(lo - p.valid_from) if lo > p.valid_from else p
            pieces.append(q.moved(lo - s0, hi - s0))
        if not pieces:
            return None
        return replace(self, pieces=tuple(pieces))


@dataclass(frozen=True)
class RoadLanes:
    """All lanes of one road over ``[0, length]``. Tracks are listed inner
    to outer per side."""
    length: float
    tracks: Tuple[LaneTrack, ...]
    center_marking: Marking

    def tracks_on(self, side):
        return [t for t in self.tracks if t.side is side]

    def outer_offset(self, side, s):
        return math.fsum(t.width_at(s) for t in self.tracks_on(side))

    def clip(self, s0, s1):
        tracks = tuple(filter(None, (t.clip(s0, s1) for t in self.tracks)))
        return RoadLanes(s1 - s0, tracks, self.center_marking)

    def with_track(self, track, inner=False):
        """Add a track on its side, innermost or outermost."""
        same = self.tracks_on(track.side)
        other = self.tracks_on(track.side.opposite)
        same = [track] + same if inner else same + [track]
        return replace(self, tracks=tuple(same + other))

    def boundaries(self):
        result = {0.0, self.length}
        for t in self.tracks:
            for p in t.pieces:
                result.update((p.valid_from, p.valid_to))
        ordered = []
        for b in sorted(b for b in result if -EPS <= b <= self.length + EPS):
            if not ordered or b - ordered[-1] > EPS:
                ordered.append(b)
        ordered[0] = 0.0
        ordered[-1] = self.length
        return ordered

    def sections(self):
        """Lane sections with section-local width polynomials and lane links
        between consecutive sections."""
        bounds = self.boundaries()
        raw = []
        for b, e in zip(bounds[:-1], bounds[1:]):
            present = {}
            for side in Side:
                index = 0
                for key, t in enumerate(self.tracks):
                    if t.side is not side:
                        continue
                    p = t.piece_at(0.5 * (b + e))
                    if p is None or t.begin > b + EPS or t.end < e - EPS:
                        continue
                    index += 1
                    local = p.shifted(b - p.valid_from) \
                        if b > p.valid_from + EPS else p
                    present[key] = (t, side.sign * index,
                                    local.moved(0.0, e - b))
            raw.append((b, e, present))

        sections = []
        for k, (b, e, present) in enumerate(raw):
            prev = raw[k - 1][2] if k > 0 else {}
            nxt = raw[k + 1][2] if k + 1 < len(raw) else {}
            lanes = []
            for key, (t, index, poly) in present.items():
                lanes.append(LaneSpec(
                    t.side, index, t.lane_type, t.marking, (poly,),
                    predecessor=prev[key][1] if key in prev else None,
                    successor=nxt[key][1] if key in nxt else None,
                    tag=t.tag))
            lanes.sort(key=lambda lane: (lane.side.value, abs(lane.index)))
            sections.append(LaneSectionPlan(b, e - b, tuple(lanes),
                                            self.center_marking))
        return tuple(sections)

    def first_section(self):
        return self.sections()[0]

    def last_section(self):
        return self.sections()[-1]


def constant_track(side, width, length, lane_type=LaneType.DRIVING,
                   marking=Marking.BROKEN, tag=''):
    return LaneTrack(side, lane_type, marking,
                     (constant_width(width, 0.0, length),), tag)


def default_lanes(road_defaults, length, one_way=False):
    """Lane layout from a :py:class:`roadgen.config.RoadDefaults` entry:
    `lanes_per_direction` constant lanes per side (right side only for
    one-way roads)."""
    lane_type = parse_enum(LaneType, road_defaults.lane_type, 'lane type')
    marking = parse_enum(Marking, road_defaults.lane_marking, 'marking')
    center = parse_enum(Marking, road_defaults.center_marking, 'marking')
    sides = (Side.RIGHT,) if one_way else (Side.RIGHT, Side.LEFT)
    tracks = tuple(
        constant_track(side, road_defaults.lane_width, length, lane_type,
                       marking)
        for side in sides
        for _ in range(road_defaults.lanes_per_direction))
    return RoadLanes(length, tracks, center)


def lane_change_track(side, width, s, ds, length, kind,
                      lane_type=LaneType.DRIVING, marking=Marking.BROKEN,
                      tag=''):
    """A lane that appears (`kind` = ``'widening'``) at `s` and keeps its
    width to the road end, or one that exists from the road start and
    vanishes (`kind` = ``'lapse'``) at ``s + ds``."""
    if s < -EPS or s + ds > length + EPS:
        raise InputError(
            "lane {} over [{}, {}] leaves the road [0, {}]".format(
                kind, s, s + ds, length))
    if kind == 'widening':
        pieces = [widening(width, s, ds)]
        if s + ds < length - EPS:
            pieces.append(constant_width(width, s + ds, length))
    elif kind == 'lapse':
        pieces = [lapse(width, s, ds)]
        if s > EPS:
            pieces.insert(0, constant_width(width, 0.0, s))
    else:
        raise ValueError(kind)
    return LaneTrack(side, lane_type, marking, tuple(pieces), tag)


def turn_lane_track(side, width, widening_length, storage_length,
                    length, junction_at_end, tag='turn'):
    """Turn lane ending at the junction. With the junction at the road end
    the lane widens before its storage stretch; with the junction at the
    road start the layout is mirrored, so it lapses after it."""
    total = widening_length + storage_length
    if total > length + EPS:
        raise InputError(
            "arm of length {:.3f} too short for a turn lane needing {:.3f}"
            .format(length, total))
    if junction_at_end:
        return lane_change_track(side, width, length - total,
                                 widening_length, length, 'widening',
                                 LaneType.TURN, Marking.BROKEN, tag)
    return lane_change_track(side, width, storage_length, widening_length,
                             length, 'lapse', LaneType.TURN, Marking.BROKEN,
                             tag)
