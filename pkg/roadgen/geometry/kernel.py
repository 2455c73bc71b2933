"""
Geometry kernel
===============

Poses along the three plan-view primitives used by the road generator:
lines, arcs and clothoids (Euler spirals). Every function here is pure and
returns a new |Pose| with its heading normalised to (-π, π].

Clothoids are evaluated through the Fresnel integrals

.. math::

    C(u) = \\int_0^u \\cos(t^2) dt, \\quad S(u) = \\int_0^u \\sin(t^2) dt,

summed as alternating power series. A clothoid with sharpness ``c`` (rate
of change of curvature) has, measured from its zero-curvature origin,

.. math::

    x(\\sigma) = C(a\\sigma)/a, \\quad y(\\sigma) = S(a\\sigma)/a,
    \\quad a = \\sqrt{|c|/2}.

A spiral piece with non-zero entry curvature is the stretch between two
offsets on that standard clothoid, moved onto its start pose by a rigid
transform. Pieces that would take the series past :py:data:`FRESNEL_U_MAX`
are integrated by Gauss-Legendre quadrature in chained sub-pieces instead.

.. |Pose| replace:: :py:class:`Pose`
"""

import math
from typing import NamedTuple

import numpy as np

from ..errors import (SeriesBoundError, ProfileError)

FRESNEL_U_MAX = 2.5
FRESNEL_TERM_EPS = 1e-15
ARC_KAPPA_EPS = 1e-12

# Gauss-Legendre rule for spiral pieces beyond the series bound; each piece
# turns by at most MAX_PIECE_TURN radians.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)
MAX_PIECE_TURN = 0.25


def normalize_angle(phi):
    """Map an angle onto (-π, π]."""
    r = math.remainder(phi, 2.0 * math.pi)
    if r <= -math.pi:
        r += 2.0 * math.pi
    return r


class Pose(NamedTuple):
    """Planar position and heading. Heading is counter-clockwise from the
    x-axis, in radians."""
    x: float
    y: float
    phi: float

    @staticmethod
    def make(x, y, phi):
        return Pose(float(x), float(y), normalize_angle(phi))

    @property
    def point(self):
        return np.array([self.x, self.y])

    @property
    def direction(self):
        return np.array([math.cos(self.phi), math.sin(self.phi)])

    def lateral(self, t):
        """Point at signed lateral offset `t` (left positive), same
        heading."""
        return Pose(self.x - t * math.sin(self.phi),
                    self.y + t * math.cos(self.phi), self.phi)

    def reversed(self):
        """Same point, opposite heading."""
        return Pose.make(self.x, self.y, self.phi + math.pi)

    def distance(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)

    def heading_difference(self, other):
        return abs(normalize_angle(self.phi - other.phi))


class SpiralParam(NamedTuple):
    """Clothoid parameter `a` together with the arc length `s` measured from
    the zero-curvature origin."""
    a: float
    s: float

    @staticmethod
    def from_curvature(kappa, s):
        """:math:`a = \\sqrt{\\kappa / (2s)}` for the point where curvature
        `kappa` is reached after arc length `s`."""
        if s <= 0 or kappa == 0:
            raise ProfileError(
                "spiral parameter needs positive length and curvature")
        return SpiralParam(math.sqrt(abs(kappa) / (2.0 * s)), s)


def line_pose(s, start):
    """Translate `start` by `s` along its heading."""
    return Pose.make(start.x + s * math.cos(start.phi),
                     start.y + s * math.sin(start.phi),
                     start.phi)


def arc_pose(s, kappa, start):
    """Pose after arc length `s` on a circle of curvature `kappa`
    (positive turns left). Curvatures below :py:data:`ARC_KAPPA_EPS` are
    treated as a line."""
    if abs(kappa) < ARC_KAPPA_EPS:
        return line_pose(s, start)

    # chord form of x = (sin φ - sin φ0)/κ, y = (cos φ0 - cos φ)/κ
    turn = s * kappa
    chord = 2.0 * math.sin(0.5 * turn) / kappa
    mid = start.phi + 0.5 * turn
    return Pose.make(start.x + chord * math.cos(mid),
                     start.y + chord * math.sin(mid),
                     start.phi + turn)


def fresnel(u):
    """Fresnel integrals ``(C(u), S(u))`` of :math:`\\cos(t^2)` and
    :math:`\\sin(t^2)` by their power series, truncated once a term drops
    below :py:data:`FRESNEL_TERM_EPS`.

    :raises SeriesBoundError: if ``|u| > FRESNEL_U_MAX``.
    """
    if abs(u) > FRESNEL_U_MAX:
        raise SeriesBoundError(
            "Fresnel argument {:.6g} exceeds series bound {}; subdivide the "
            "spiral".format(u, FRESNEL_U_MAX))

    u4 = u ** 4
    c_coef = u           # (-1)^n u^(4n+1) / (2n)!
    s_coef = u ** 3      # (-1)^n u^(4n+3) / (2n+1)!
    c_sum = 0.0
    s_sum = 0.0
    n = 0
    while True:
        c_term = c_coef / (4 * n + 1)
        s_term = s_coef / (4 * n + 3)
        c_sum += c_term
        s_sum += s_term
        if abs(c_term) < FRESNEL_TERM_EPS and abs(s_term) < FRESNEL_TERM_EPS:
            break
        c_coef *= -u4 / ((2 * n + 1) * (2 * n + 2))
        s_coef *= -u4 / ((2 * n + 2) * (2 * n + 3))
        n += 1

    return c_sum, s_sum


def _standard_clothoid(sigma, sharpness):
    """Point and heading on the clothoid through the origin with heading 0
    and curvature ``sharpness * sigma``."""
    a = math.sqrt(abs(sharpness) / 2.0)
    c, s = fresnel(a * sigma)
    sign = 1.0 if sharpness > 0 else -1.0
    return c / a, sign * s / a, 0.5 * sharpness * sigma * sigma


def _clothoid_series(s, kappa0, sharpness, start):
    sigma0 = kappa0 / sharpness
    sigma1 = sigma0 + s
    x0, y0, phi0 = _standard_clothoid(sigma0, sharpness)
    x1, y1, _ = _standard_clothoid(sigma1, sharpness)

    # rigid transform taking the standard pose at sigma0 onto `start`
    rot = start.phi - phi0
    dx, dy = x1 - x0, y1 - y0
    cos_r, sin_r = math.cos(rot), math.sin(rot)
    turn = s * kappa0 + 0.5 * sharpness * s * s
    return Pose.make(start.x + cos_r * dx - sin_r * dy,
                     start.y + sin_r * dx + cos_r * dy,
                     start.phi + turn)


def _clothoid_quadrature(s, kappa0, sharpness, start):
    kappa1 = kappa0 + sharpness * s
    total_turn = s * max(abs(kappa0), abs(kappa1))
    n_pieces = max(1, int(math.ceil(total_turn / MAX_PIECE_TURN)))
    h = s / n_pieces
    pose = start
    for i in range(n_pieces):
        k = kappa0 + sharpness * i * h
        t = 0.5 * h * (_GL_NODES + 1.0)
        phi = pose.phi + k * t + 0.5 * sharpness * t * t
        dx = 0.5 * h * np.dot(_GL_WEIGHTS, np.cos(phi))
        dy = 0.5 * h * np.dot(_GL_WEIGHTS, np.sin(phi))
        pose = Pose.make(pose.x + dx, pose.y + dy,
                         pose.phi + k * h + 0.5 * sharpness * h * h)
    return pose


def _clothoid(s, kappa0, sharpness, start):
    """Clothoid piece of one-signed curvature."""
    a = math.sqrt(abs(sharpness) / 2.0)
    sigma_max = max(abs(kappa0 / sharpness), abs(kappa0 / sharpness + s))
    if a * sigma_max <= FRESNEL_U_MAX:
        return _clothoid_series(s, kappa0, sharpness, start)
    return _clothoid_quadrature(s, kappa0, sharpness, start)


def spiral_pose(s, kappa_start, kappa_end, length, start):
    """Pose after arc length `s` on a spiral whose curvature changes
    linearly from `kappa_start` to `kappa_end` over `length`.

    Spirals whose end curvatures have opposite signs are split at the
    zero crossing. Pieces that would leave the series bound are chained
    from short sub-pieces integrated with a Gauss-Legendre rule.
    """
    if kappa_start == kappa_end:
        raise ProfileError("spiral needs different start and end curvature")
    if s < 0 or s > length * (1 + 1e-12):
        raise ProfileError(
            "spiral abscissa {} outside [0, {}]".format(s, length))
    if s == 0:
        return Pose.make(*start)

    sharpness = (kappa_end - kappa_start) / length

    if kappa_start * kappa_end < 0:
        s_zero = -kappa_start / sharpness
        if s > s_zero:
            middle = _clothoid(s_zero, kappa_start, sharpness, start)
            return _clothoid(s - s_zero, 0.0, sharpness, middle)

    return _clothoid(s, kappa_start, sharpness, start)


def rigid_transform(p, tx, ty, tphi):
    """Express pose `p` in the frame with origin ``(tx, ty)`` and x-axis at
    heading `tphi`: shift by the offset, rotate by ``-tphi`` and subtract
    `tphi` from the heading."""
    dx, dy = p.x - tx, p.y - ty
    cos_t, sin_t = math.cos(tphi), math.sin(tphi)
    return Pose.make(cos_t * dx + sin_t * dy,
                     -sin_t * dx + cos_t * dy,
                     p.phi - tphi)


def inverse_transform(p, tx, ty, tphi):
    """Inverse of :py:func:`rigid_transform`: take a pose given in the frame
    ``(tx, ty, tphi)`` back to the enclosing frame."""
    cos_t, sin_t = math.cos(tphi), math.sin(tphi)
    return Pose.make(tx + cos_t * p.x - sin_t * p.y,
                     ty + sin_t * p.x + cos_t * p.y,
                     p.phi + tphi)


def to_frame(p, frame):
    """:py:func:`rigid_transform` with the frame given as a Pose."""
    return rigid_transform(p, frame.x, frame.y, frame.phi)


def from_frame(p, frame):
    """:py:func:`inverse_transform` with the frame given as a Pose."""
    return inverse_transform(p, frame.x, frame.y, frame.phi)
