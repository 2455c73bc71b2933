"""
Connecting lanes
================

A connecting lane runs from an incoming lane end pose `A` to an outgoing
lane start pose `B` and consists of straight lines and arcs only. The
construction extends both end poses to rays that meet in the point `I`.
The end closer to `I` is joined to `I` by an arc; the other one is first
extended by a straight line up to the point `H`, at the same distance from
`I`. With :math:`\\beta = \\varphi_B - \\varphi_A`,

.. math::

    r = \\frac{|H - A|}{2 \\sin(\\beta/2)}, \\quad l = |r \\beta|,

where `A` stands for whichever end the arc starts from. The curvature
jumps at the joints; at junction speeds that is acceptable.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..errors import ConnectError
from ..geometry import (Pose, ProfileElement, CurvatureProfile,
                        normalize_angle)

COLLINEAR_EPS = 1e-9
OFFSET_EPS = 1e-6
LENGTH_EPS = 1e-9


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class ConnectionGeometry:
    """Result of :py:func:`connect` or :py:func:`connect_offset`.

    :param pieces: profile elements from `A` to `B`.
    :param r: signed radius of the arc (positive turns left), ``inf`` for
        a straight connection.
    :param l: length of the arc(s).
    """
    pieces: Tuple[ProfileElement, ...]
    A: Pose
    B: Pose
    I: Optional[Tuple[float, float]]
    H: Optional[Tuple[float, float]]
    r: float
    l: float
    beta: float

    @property
    def profile(self):
        return CurvatureProfile.build(self.pieces, allow_discontinuity=True)

    @property
    def length(self):
        return math.fsum(p.length for p in self.pieces)

    @property
    def max_curvature(self):
        return max(abs(p.kappa_start) for p in self.pieces)


def _check_radius(r, min_radius):
    if min_radius is not None and abs(r) < min_radius:
        raise ConnectError(
            "connecting arc radius {:.3f} m is below the minimal radius "
            "{:.3f} m; enlarge the junction area".format(abs(r), min_radius))


def connect(A, B, min_radius=None):
    """Line/arc connection from pose `A` to pose `B`.

    :param min_radius: reject arcs tighter than this.
    :rtype: :py:class:`ConnectionGeometry`
    :raises ConnectError: anti-parallel headings, parallel headings with a
        lateral offset, intersection point behind `A` or beyond `B`, or a
        radius below `min_radius`.
    """
    beta = normalize_angle(B.phi - A.phi)
    a = A.point
    b = B.point
    da = A.direction
    db = B.direction
    ab = b - a

    if abs(beta) < COLLINEAR_EPS:
        offset = _cross(da, ab)
        ahead = float(np.dot(da, ab))
        if abs(offset) >= OFFSET_EPS or ahead <= LENGTH_EPS:
            raise ConnectError(
                "parallel end poses {} and {} are offset by {:.6g} m; no "
                "line/arc connection exists".format(A, B, offset))
        return ConnectionGeometry(
            (ProfileElement.line(ahead),), A, B, None, None,
            math.inf, 0.0, beta)

    if abs(abs(beta) - math.pi) < COLLINEAR_EPS:
        raise ConnectError(
            "end poses {} and {} are anti-parallel; enlarge the junction "
            "area".format(A, B))

    sin_beta = math.sin(beta)
    lam = _cross(ab, db) / sin_beta
    mu = _cross(da, ab) / sin_beta
    if lam < -LENGTH_EPS:
        raise ConnectError(
            "intersection point lies behind the start pose {}; enlarge the "
            "junction area".format(A))
    if mu < -LENGTH_EPS:
        raise ConnectError(
            "intersection point lies beyond the end pose {}; enlarge the "
            "junction area".format(B))

    lam = max(lam, 0.0)
    mu = max(mu, 0.0)
    i = a + lam * da
    d = min(lam, mu)
    pieces = []

    if lam >= mu:
        h = i - d * da
        chord = float(np.linalg.norm(b - h))
        if lam - mu > LENGTH_EPS:
            pieces.append(ProfileElement.line(lam - mu))
    else:
        h = i + d * db
        chord = float(np.linalg.norm(h - a))

    if chord < LENGTH_EPS:
        raise ConnectError(
            "end poses {} and {} meet in one point; enlarge the junction "
            "area".format(A, B))
    r = chord / (2.0 * math.sin(0.5 * beta))
    _check_radius(r, min_radius)
    l = abs(r * beta)
    arc = ProfileElement.arc(l, r)

    if lam >= mu:
        pieces.append(arc)
    else:
        pieces.append(arc)
        if mu - lam > LENGTH_EPS:
            pieces.append(ProfileElement.line(mu - lam))

    return ConnectionGeometry(
        tuple(pieces), A, B, (float(i[0]), float(i[1])),
        (float(h[0]), float(h[1])), r, l, beta)


def connect_offset(A, B, min_radius=None):
    """Reverse curve between parallel poses with a lateral offset: two
    arcs of equal radius turning by ``θ`` and ``-θ``, where
    ``θ = 2 atan(d / D)`` for lateral offset `d` and distance `D` along
    the heading, and ``r = D / (2 sin θ)``.

    :raises ConnectError: if the headings are not parallel or `B` is not
        ahead of `A`.
    """
    beta = normalize_angle(B.phi - A.phi)
    if abs(beta) >= OFFSET_EPS:
        raise ConnectError(
            "reverse curve needs parallel end poses, headings differ by "
            "{:.6g} rad".format(beta))
    ab = B.point - A.point
    d = _cross(A.direction, ab)
    D = float(np.dot(A.direction, ab))
    if D <= LENGTH_EPS:
        raise ConnectError("end pose {} is not ahead of {}".format(B, A))
    if abs(d) < OFFSET_EPS:
        return connect(A, B, min_radius)

    theta = 2.0 * math.atan2(abs(d), D)
    r = D / (2.0 * math.sin(theta))
    _check_radius(r, min_radius)
    sign = 1.0 if d > 0 else -1.0
    l = r * theta
    pieces = (ProfileElement.arc(l, sign * r),
              ProfileElement.arc(l, -sign * r))
    mid = A.point + 0.5 * ab
    return ConnectionGeometry(
        pieces, A, B, None, (float(mid[0]), float(mid[1])),
        sign * r, 2.0 * l, beta)
