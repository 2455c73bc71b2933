"""
Closing curves
==============

A loose pair of road ends is closed by a compound curve: a clothoid from
zero curvature up to `k`, an arc of curvature `k`, and a clothoid back to
zero. Its end pose depends on the spiral length(s), the arc length and
`k`; these unknowns are found by damped least squares on the pose
residual. The Jacobian comes from central differences of the forward
resolution, so the solver never needs anything but
:py:func:`roadgen.geometry.resolve`.

The problem is solved in the frame of the start pose. Without a heading
change and lateral offset the curve is a line. Otherwise the symmetric
curve (equal spirals, three unknowns) is tried from several initial
guesses; if none reaches the goal and the fallback is enabled, the entry
and exit spirals get independent lengths.
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..config import CloseDefaults
from ..errors import CloseGapError, RoadGenError
from ..geometry import (
    Pose, ProfileElement, CurvatureProfile, normalize_angle, resolve,
    to_frame)
from ..run.logging import (make_logger, _sugar)

logger = make_logger('close')

MIN_SPIRAL = 1e-3
MIN_ARC = 1e-6
DAMPING_START = 1e-3
DAMPING_MAX = 1e12

DEFAULT_SETTINGS = CloseDefaults(
    max_iterations=200, position_tolerance=1e-3, heading_tolerance=1e-4,
    asymmetric_fallback=True)

# (spiral, arc) scale factors of the initial guesses
START_SCALES = ((1.0, 1.0), (0.5, 1.0), (2.0, 1.0), (1.0, 0.5),
                (0.5, 0.5), (2.0, 0.5), (0.25, 1.5), (1.5, 0.25))

ORIGIN = Pose(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class CompoundCurve:
    """Spiral-arc-spiral (or line) from `start` to `goal`.

    :param parameters: ``(L_sp, L_arc, k)`` for a symmetric curve,
        ``(L_1, L_arc, L_2, k)`` for an asymmetric one, ``(L,)`` for a
        line.
    :param residual: ``(dx, dy, dphi)`` of the resolved end against the
        goal, in the start frame.
    """
    profile: CurvatureProfile
    start: Pose
    goal: Pose
    parameters: Tuple[float, ...]
    residual: Tuple[float, float, float]
    symmetric: bool = True
    restarts: int = 0

    @property
    def length(self):
        return self.profile.total_length

    @property
    def end_pose(self):
        return resolve(self.profile, self.start).end_pose

    @property
    def curvature(self):
        return self.parameters[-1] if len(self.parameters) > 1 else 0.0

    @property
    def radius(self):
        k = self.curvature
        return math.inf if k == 0 else 1.0 / k


def symmetric_profile(l_sp, l_arc, k):
    return _profile(l_sp, l_arc, l_sp, k)


def asymmetric_profile(l_1, l_arc, l_2, k):
    return _profile(l_1, l_arc, l_2, k)


def _profile(l_1, l_arc, l_2, k):
    elements = [ProfileElement.from_curvature(l_1, 0.0, k)]
    if l_arc > MIN_ARC:
        elements.append(ProfileElement.from_curvature(l_arc, k, k))
    elements.append(ProfileElement.from_curvature(l_2, k, 0.0))
    return CurvatureProfile.build(tuple(elements))


def _residual(profile, goal):
    end = resolve(profile, ORIGIN).end_pose
    return np.array([end.x - goal.x, end.y - goal.y,
                     normalize_angle(end.phi - goal.phi)])


def _jacobian(fun, x, r0):
    J = np.zeros((r0.size, x.size))
    for i in range(x.size):
        h = 1e-6 * max(1.0, abs(x[i]))
        up = x.copy()
        down = x.copy()
        up[i] += h
        down[i] -= h
        J[:, i] = (fun(up) - fun(down)) / (2.0 * h)
    return J


def _converged(r, settings, scale=1.0):
    return (math.hypot(r[0], r[1]) <= scale * settings.position_tolerance
            and abs(r[2]) <= scale * settings.heading_tolerance)


def levenberg_marquardt(fun, x0, lower, settings):
    """Minimise ``|fun(x)|²`` subject to ``x >= lower``.

    Steps solve ``(JᵀJ + λ diag(JᵀJ)) δ = -Jᵀr``; λ shrinks after an
    improving step and grows otherwise.

    :return: ``(x, r)`` with the best point found.
    """
    x = np.maximum(np.asarray(x0, dtype=float), lower)
    r = fun(x)
    cost = float(r @ r)
    lam = DAMPING_START
    for _ in range(settings.max_iterations):
        if _converged(r, settings, 0.01):
            break
        J = _jacobian(fun, x, r)
        A = J.T @ J
        g = J.T @ r
        while lam < DAMPING_MAX:
            M = A + lam * np.diag(np.diag(A) + 1e-12)
            try:
                step = np.linalg.solve(M, -g)
            except np.linalg.LinAlgError:
                lam *= 4.0
                continue
            x_new = np.maximum(x + step, lower)
            r_new = fun(x_new)
            cost_new = float(r_new @ r_new)
            if cost_new < cost:
                x, r, cost = x_new, r_new, cost_new
                lam = max(lam / 3.0, 1e-12)
                break
            lam *= 4.0
        else:
            break
    return x, r


def _safe(fun):
    def checked(x):
        try:
            return fun(x)
        except RoadGenError:
            return np.full(3, 1e6)
    return checked


def _initial_guesses(goal):
    chord = math.hypot(goal.x, goal.y)
    turn = goal.phi
    # a half turn is ambiguous: turn towards the side the goal lies on
    if abs(abs(turn) - math.pi) < 1e-6 and goal.y != 0.0:
        turn = math.copysign(math.pi, goal.y)
    if abs(turn) > 1e-9:
        radius = chord / (2.0 * math.sin(0.5 * turn))
    else:
        radius = chord
    l_arc = abs(radius * turn)
    l_sp = 0.2 * chord
    for sp_scale, arc_scale in START_SCALES:
        sp = max(l_sp * sp_scale, MIN_SPIRAL)
        arc = l_arc * arc_scale
        yield np.array([sp, arc, turn / (sp + arc)])


def _best(candidates):
    return min(candidates, key=lambda c: float(c[1] @ c[1]))


def close_gap(start, goal, settings=None):
    """Compound curve with zero curvature at both ends from `start` to
    `goal`.

    :param settings: :py:class:`roadgen.config.CloseDefaults`.
    :rtype: :py:class:`CompoundCurve`
    :raises CloseGapError: if the goal coincides with the start or no
        curve reaches it within tolerance; carries the best residual.
    """
    settings = settings or DEFAULT_SETTINGS
    local = to_frame(goal, start)
    chord = math.hypot(local.x, local.y)
    if chord < 1e-9:
        raise CloseGapError("closing goal {} coincides with start {}".format(
            goal, start))

    if abs(local.y) <= settings.position_tolerance * 1e-3 and \
            abs(local.phi) <= settings.heading_tolerance * 1e-3 and \
            local.x > 0:
        profile = CurvatureProfile.build((ProfileElement.line(local.x),))
        residual = tuple(_residual(profile, local))
        logger.debug("closing %s -> %s by a line of %.3f m",
                     _sugar(str(start)), _sugar(str(goal)), local.x)
        return CompoundCurve(profile, start, goal, (local.x,), residual)

    fun = _safe(lambda x: _residual(symmetric_profile(*x), local))
    lower = np.array([MIN_SPIRAL, 0.0, -np.inf])
    candidates = []
    for n, x0 in enumerate(_initial_guesses(local)):
        x, r = levenberg_marquardt(fun, x0, lower, settings)
        candidates.append((x, r, True, n))
        logger.debug("closing start %d: residual %s", n, _triple(r))
        if _converged(r, settings):
            break

    x, r, symmetric, restarts = _best(candidates)
    if not _converged(r, settings) and settings.asymmetric_fallback:
        fun4 = _safe(lambda y: _residual(asymmetric_profile(*y), local))
        lower4 = np.array([MIN_SPIRAL, 0.0, MIN_SPIRAL, -np.inf])
        for xs, _, _, _ in list(candidates):
            y0 = np.array([xs[0], xs[1], xs[0], xs[2]])
            y, r4 = levenberg_marquardt(fun4, y0, lower4, settings)
            candidates.append((y, r4, False, len(candidates)))
            if _converged(r4, settings):
                break
        x, r, symmetric, restarts = _best(candidates)

    if not _converged(r, settings):
        residual = tuple(float(v) for v in r)
        raise CloseGapError(
            "no closing curve from {} to {}: best residual dx={:.3g} m, "
            "dy={:.3g} m, dphi={:.3g} rad".format(start, goal, *residual),
            residual=residual)

    profile = symmetric_profile(*x) if symmetric \
        else asymmetric_profile(*x)
    logger.debug("closing curve found after %d restarts, length %.3f m",
                 restarts, profile.total_length)
    return CompoundCurve(profile, start, goal, tuple(float(v) for v in x),
                         tuple(float(v) for v in r), symmetric, restarts)


def _triple(r):
    return "({:.3g}, {:.3g}, {:.3g})".format(*r)
