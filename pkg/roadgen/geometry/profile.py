"""
Curvature profiles
==================

A reference line is described by its curvature over arc length: a
piecewise-linear function :math:`\\kappa(s)` assembled from lines
(:math:`\\kappa = 0`), arcs (constant :math:`\\kappa`) and spirals
(:math:`\\kappa` linear in `s`). Together with a start pose this fixes the
curve completely; |resolve| integrates it into one start pose per element,
which is what OpenDRIVE's plan view needs.

Radii are what users write; curvatures are what we store. An infinite
radius is the :py:data:`STRAIGHT` sentinel, so that zero-curvature joints
compare exactly equal.

.. |resolve| replace:: :py:func:`resolve`
"""

import math
from dataclasses import (dataclass, replace)
from enum import Enum
from typing import NamedTuple, Tuple

from ..errors import ProfileError
from .kernel import (Pose, line_pose, arc_pose, spiral_pose, SpiralParam)

LENGTH_EPS = 1e-9
KAPPA_RTOL = 1e-12


class Straight:
    """Sentinel for an infinite radius."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'STRAIGHT'

    def __reduce__(self):
        return (Straight, ())


STRAIGHT = Straight()


def curvature_from_radius(radius):
    if radius is STRAIGHT:
        return 0.0
    if radius == 0 or not math.isfinite(radius):
        raise ProfileError(
            "radius must be finite and non-zero, or STRAIGHT; got {}"
            .format(radius))
    return 1.0 / radius


def radius_from_curvature(kappa):
    return STRAIGHT if kappa == 0 else 1.0 / kappa


def curvature_matches(a, b):
    """Equal up to rounding, e.g. a curvature and the inverse of its
    radius."""
    return abs(a - b) <= KAPPA_RTOL * max(1.0, abs(a), abs(b))


def _snapped(e, kappa):
    """`e` starting at exactly `kappa`."""
    if e.kappa_start == kappa or e.kind is ElementKind.LINE:
        return e
    if e.kind is ElementKind.ARC:
        return replace(e, kappa_start=kappa, kappa_end=kappa)
    return replace(e, kappa_start=kappa)


class ElementKind(Enum):
    LINE = 'line'
    ARC = 'arc'
    SPIRAL = 'spiral'


@dataclass(frozen=True)
class ProfileElement:
    """One primitive of the curvature graph. Use the :py:meth:`line`,
    :py:meth:`arc` and :py:meth:`spiral` constructors."""
    kind: ElementKind
    length: float
    kappa_start: float
    kappa_end: float

    def __post_init__(self):
        if not (math.isfinite(self.length) and self.length > 0):
            raise ProfileError(
                "{} length must be positive, got {}".format(
                    self.kind.value, self.length))
        if self.kind is ElementKind.LINE and \
                (self.kappa_start != 0 or self.kappa_end != 0):
            raise ProfileError("line with non-zero curvature")
        if self.kind is ElementKind.ARC and \
                (self.kappa_start != self.kappa_end or self.kappa_start == 0):
            raise ProfileError("arc needs constant non-zero curvature")
        if self.kind is ElementKind.SPIRAL and \
                self.kappa_start == self.kappa_end:
            raise ProfileError(
                "spiral needs different start and end radius")

    @staticmethod
    def line(length):
        return ProfileElement(ElementKind.LINE, float(length), 0.0, 0.0)

    @staticmethod
    def arc(length, radius):
        kappa = curvature_from_radius(radius)
        return ProfileElement(ElementKind.ARC, float(length), kappa, kappa)

    @staticmethod
    def spiral(length, radius_start, radius_end):
        return ProfileElement(
            ElementKind.SPIRAL, float(length),
            curvature_from_radius(radius_start),
            curvature_from_radius(radius_end))

    @staticmethod
    def from_curvature(length, kappa_start, kappa_end):
        """Pick the kind from the curvature values."""
        if kappa_start == kappa_end:
            kind = ElementKind.LINE if kappa_start == 0 else ElementKind.ARC
        else:
            kind = ElementKind.SPIRAL
        return ProfileElement(kind, float(length), kappa_start, kappa_end)

    @property
    def radius(self):
        return radius_from_curvature(self.kappa_start)

    @property
    def radius_start(self):
        return radius_from_curvature(self.kappa_start)

    @property
    def radius_end(self):
        return radius_from_curvature(self.kappa_end)

    @property
    def sharpness(self):
        return (self.kappa_end - self.kappa_start) / self.length

    @property
    def spiral_param(self):
        """Clothoid parameter at the end of this spiral, measured from the
        zero-curvature origin of its clothoid."""
        if self.kind is not ElementKind.SPIRAL:
            raise ProfileError("only spirals have a clothoid parameter")
        kappa = max(abs(self.kappa_start), abs(self.kappa_end))
        return SpiralParam.from_curvature(kappa, kappa / abs(self.sharpness))

    @property
    def turn(self):
        """Heading change over the element."""
        return 0.5 * (self.kappa_start + self.kappa_end) * self.length

    def curvature_at(self, s):
        if self.kind is ElementKind.SPIRAL:
            if s >= self.length:
                return self.kappa_end
            return self.kappa_start + self.sharpness * s
        return self.kappa_start

    def pose_at(self, s, start):
        if self.kind is ElementKind.LINE:
            return line_pose(s, start)
        if self.kind is ElementKind.ARC:
            return arc_pose(s, self.kappa_start, start)
        return spiral_pose(s, self.kappa_start, self.kappa_end,
                           self.length, start)

    def end_pose(self, start):
        return self.pose_at(self.length, start)

    def extract(self, s0, s1):
        """The part of this element over local ``[s0, s1]``. A cut spiral
        keeps its sharpness; its end curvatures are re-evaluated at the
        cut points."""
        k0 = self.kappa_start if s0 <= 0 else self.curvature_at(s0)
        k1 = self.kappa_end if s1 >= self.length else self.curvature_at(s1)
        if self.kind is ElementKind.SPIRAL:
            return ProfileElement(ElementKind.SPIRAL, s1 - s0, k0, k1)
        return ProfileElement(self.kind, s1 - s0, k0, k1)

    def __str__(self):
        if self.kind is ElementKind.LINE:
            return "line(L={:g})".format(self.length)
        if self.kind is ElementKind.ARC:
            return "arc(L={:g}, R={:g})".format(self.length, self.radius)
        return "spiral(L={:g}, R_s={}, R_e={})".format(
            self.length, self.radius_start, self.radius_end)


@dataclass(frozen=True)
class CurvatureProfile:
    """Immutable sequence of elements with continuous curvature. Profiles
    of junction connecting roads may set ``allow_discontinuity``: their
    line/arc pieces jump in curvature."""
    elements: Tuple[ProfileElement, ...] = ()
    allow_discontinuity: bool = False

    @staticmethod
    def build(elements, allow_discontinuity=False):
        profile = CurvatureProfile((), allow_discontinuity)
        for e in elements:
            profile = profile.append(e)
        return profile

    @property
    def total_length(self):
        return math.fsum(e.length for e in self.elements)

    @property
    def kappa_start(self):
        return self.elements[0].kappa_start if self.elements else 0.0

    @property
    def kappa_end(self):
        return self.elements[-1].kappa_end if self.elements else 0.0

    @property
    def offsets(self):
        """Start abscissa of every element."""
        result = []
        s = 0.0
        for e in self.elements:
            result.append(s)
            s += e.length
        return result

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def append(self, e):
        """A new profile with `e` added at the end.

        :raises ProfileError: if the curvature jumps at the joint.
        """
        if self.elements and not self.allow_discontinuity:
            kappa = self.elements[-1].kappa_end
            if not curvature_matches(kappa, e.kappa_start):
                raise ProfileError(
                    "curvature jumps from {:.6g} to {:.6g} at s={:.6g}"
                    .format(kappa, e.kappa_start, self.total_length))
            e = _snapped(e, kappa)
        return CurvatureProfile(self.elements + (e,),
                                self.allow_discontinuity)

    def locate(self, s):
        """Index of the element containing `s`, and the local abscissa."""
        self._check_range(s)
        offset = 0.0
        for i, e in enumerate(self.elements):
            if s <= offset + e.length or i == len(self.elements) - 1:
                return i, min(max(s - offset, 0.0), e.length)
            offset += e.length

    def curvature_at(self, s):
        i, local = self.locate(s)
        return self.elements[i].curvature_at(local)

    def extract(self, s0, s1):
        """Sub-profile over ``[s0, s1]``. Remainders shorter than
        :py:data:`LENGTH_EPS` are dropped."""
        self._check_range(s0)
        self._check_range(s1)
        pieces = []
        offset = 0.0
        for e in self.elements:
            lo = max(s0 - offset, 0.0)
            hi = min(s1 - offset, e.length)
            if hi - lo > LENGTH_EPS:
                if lo <= LENGTH_EPS and hi >= e.length - LENGTH_EPS:
                    pieces.append(e)
                else:
                    pieces.append(e.extract(lo, hi))
            offset += e.length
        return CurvatureProfile(tuple(pieces), self.allow_discontinuity)

    def split(self, s_lo, s_hi):
        """Cut out ``(s_lo, s_hi)``; returns the parts before and after."""
        if not s_lo <= s_hi:
            raise ProfileError(
                "split needs s_lo <= s_hi, got {} > {}".format(s_lo, s_hi))
        return self.extract(0.0, s_lo), self.extract(s_hi, self.total_length)

    def _check_range(self, s):
        length = self.total_length
        if s < -LENGTH_EPS or s > length + LENGTH_EPS:
            raise ProfileError(
                "s={:.9g} outside profile range [0, {:.9g}]".format(
                    s, length))

    def __str__(self):
        return " + ".join(str(e) for e in self.elements) or "<empty>"


class ResolvedElement(NamedTuple):
    element: ProfileElement
    s_offset: float
    start: Pose

    @property
    def end(self):
        return self.element.end_pose(self.start)


class ResolvedReferenceLine:
    """A profile integrated from a start pose: one start pose per element.

    .. py:attribute:: records

        List of :py:class:`ResolvedElement`.
    """
    def __init__(self, profile, records):
        self.profile = profile
        self.records = records

    @property
    def start(self):
        return self.records[0].start

    @property
    def length(self):
        return self.profile.total_length

    @property
    def end_pose(self):
        return self.records[-1].end

    def pose_at(self, s):
        i, local = self.profile.locate(s)
        record = self.records[i]
        return record.element.pose_at(local, record.start)

    def transformed(self, move):
        """Apply the pose map `move` to every record start pose."""
        return ResolvedReferenceLine(
            self.profile,
            [r._replace(start=move(r.start)) for r in self.records])

    def sample(self, step=0.5):
        """List of ``(s, Pose)`` at spacing no larger than `step`,
        including every element boundary."""
        result = []
        for record in self.records:
            length = record.element.length
            n = max(1, int(math.ceil(length / step)))
            first = 0 if not result else 1
            for j in range(first, n + 1):
                local = length * j / n
                result.append((record.s_offset + local,
                               record.element.pose_at(local, record.start)))
        return result


def append(profile, e):
    return profile.append(e)


def curvature_at(profile, s):
    return profile.curvature_at(s)


def split(profile, s_lo, s_hi):
    return profile.split(s_lo, s_hi)


def resolve(profile, start):
    """Integrate `profile` from `start`.

    :param profile: :py:class:`CurvatureProfile`, not empty.
    :param start: :py:class:`Pose` at s=0.
    :rtype: :py:class:`ResolvedReferenceLine`
    """
    if not profile.elements:
        raise ProfileError("cannot resolve an empty profile")

    records = []
    pose = Pose.make(*start)
    offset = 0.0
    for e in profile.elements:
        records.append(ResolvedElement(e, offset, pose))
        pose = e.end_pose(pose)
        offset += e.length

    return ResolvedReferenceLine(profile, records)
