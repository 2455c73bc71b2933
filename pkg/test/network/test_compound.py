import math
import time

import numpy as np
from pytest import (raises, approx)

from roadgen.config import CloseDefaults
from roadgen.errors import CloseGapError
from roadgen.geometry import (Pose, ElementKind, resolve, to_frame)
from roadgen.network import (close_gap, symmetric_profile,
                             asymmetric_profile)

ORIGIN = Pose(0.0, 0.0, 0.0)


def _goal(profile, start=ORIGIN):
    return resolve(profile, start).end_pose


def _within(curve, position=1e-3, heading=1e-4):
    end = to_frame(curve.end_pose, curve.goal)
    return math.hypot(end.x, end.y) <= position and \
        abs(math.remainder(end.phi, 2 * math.pi)) <= heading


def test_profiles():
    p = symmetric_profile(10.0, 20.0, 0.02)
    assert [e.kind for e in p] == [ElementKind.SPIRAL, ElementKind.ARC,
                                   ElementKind.SPIRAL]
    assert p.kappa_start == 0 and p.kappa_end == 0
    assert p.total_length == approx(40.0)
    q = asymmetric_profile(10.0, 0.0, 30.0, -0.01)
    assert len(q) == 2
    assert q.total_length == approx(40.0)


def test_symmetric_goal():
    goal = _goal(symmetric_profile(20.0, 40.0, 1 / 80))
    curve = close_gap(ORIGIN, goal)
    assert curve.symmetric
    assert _within(curve)
    assert curve.profile.kappa_start == 0
    assert curve.profile.kappa_end == 0
    # several symmetric curves reach this goal; any of them will do
    end = resolve(curve.profile, ORIGIN).end_pose
    assert math.hypot(end.x - goal.x, end.y - goal.y) <= 1e-3


def test_moved_start():
    start = Pose(100.0, -50.0, 2.0)
    goal = _goal(symmetric_profile(15.0, 30.0, -1 / 60), start)
    curve = close_gap(start, goal)
    assert _within(curve)
    assert curve.start == start


def test_asymmetric_goal():
    goal = _goal(asymmetric_profile(10.0, 20.0, 40.0, 1 / 50))
    curve = close_gap(ORIGIN, goal)
    assert _within(curve)


def test_line():
    curve = close_gap(ORIGIN, Pose(25.0, 0.0, 0.0))
    assert curve.parameters == (25.0,)
    assert curve.radius == math.inf
    assert curve.length == approx(25.0)


def test_coincident():
    with raises(CloseGapError):
        close_gap(ORIGIN, Pose(0.0, 0.0, 1.0))


def test_unreachable():
    settings = CloseDefaults(max_iterations=50, position_tolerance=1e-3,
                             heading_tolerance=1e-4,
                             asymmetric_fallback=False)
    with raises(CloseGapError) as info:
        close_gap(ORIGIN, Pose(-10.0, 0.0, math.pi), settings)
    assert len(info.value.residual) == 3
    assert info.value.exit_code == 2


def test_forward_generated_goals():
    rng = np.random.default_rng(8)
    converged = 0
    durations = []
    for _ in range(100):
        l_sp = rng.uniform(5, 50)
        l_arc = rng.uniform(5, 100)
        r = rng.uniform(20.0, 500.0)
        k = rng.choice([-1.0, 1.0]) / r
        goal = _goal(symmetric_profile(l_sp, l_arc, k))
        t0 = time.perf_counter()
        try:
            curve = close_gap(ORIGIN, goal)
        except CloseGapError:
            continue
        finally:
            durations.append(time.perf_counter() - t0)
        assert _within(curve)
        converged += 1
    assert converged >= 95
    assert np.median(durations) < 0.05


def test_half_turn():
    for side in (1.0, -1.0):
        curve = close_gap(ORIGIN, Pose(0.0, side * 150.0, math.pi))
        assert _within(curve)
        assert math.copysign(1.0, curve.curvature) == side
