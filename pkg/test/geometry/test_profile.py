import math

import numpy as np
from pytest import (approx, raises)

from roadgen.errors import ProfileError
from roadgen.geometry import (
    STRAIGHT, ElementKind, ProfileElement, CurvatureProfile, Pose, append,
    resolve, curvature_at, split, normalize_angle)

line = ProfileElement.line
arc = ProfileElement.arc
spiral = ProfileElement.spiral


def test_append():
    p = append(CurvatureProfile(), line(50))
    assert p.total_length == 50
    assert curvature_at(p, 25) == 0.0

    q = append(p, spiral(10, STRAIGHT, 100))
    assert len(q) == 2

    with raises(ProfileError):
        append(p, arc(10, 100))


def test_append_radius_rounding():
    kappa = 0.024175749818613233
    p = CurvatureProfile.build([
        ProfileElement.from_curvature(20, 0.0, kappa),
        arc(30, 1 / kappa),
        spiral(20, 1 / kappa, STRAIGHT)])
    assert [e.kind for e in p] == \
        [ElementKind.SPIRAL, ElementKind.ARC, ElementKind.SPIRAL]
    # joints are exact after appending
    assert p.elements[1].kappa_start == kappa
    assert p.elements[1].kappa_end == kappa
    assert p.elements[2].kappa_start == kappa

    with raises(ProfileError):
        append(CurvatureProfile.build([arc(10, 50)]), arc(10, 50.001))


def test_element_checks():
    with raises(ProfileError):
        line(0)
    with raises(ProfileError):
        arc(10, 0)
    with raises(ProfileError):
        spiral(10, 50, 50)
    with raises(ProfileError):
        ProfileElement(ElementKind.LINE, 10, 0.1, 0.1)


def test_curvature_at():
    assert curvature_at(CurvatureProfile.build([arc(100, 50)]), 50) == \
        approx(0.02)
    p = CurvatureProfile.build([spiral(10, STRAIGHT, 20)])
    assert curvature_at(p, 5) == approx(0.025)
    with raises(ProfileError):
        curvature_at(p, 11)


def test_split():
    before, after = split(CurvatureProfile.build([line(100)]), 40, 60)
    assert before.total_length == approx(40)
    assert after.total_length == approx(40)

    before, after = split(CurvatureProfile.build([arc(100, 50)]), 40, 60)
    assert before.elements[0].radius == approx(50)
    assert after.elements[0].radius == approx(50)
    assert after.total_length == approx(40)

    before, after = split(CurvatureProfile.build(
        [spiral(10, STRAIGHT, 20)]), 4, 6)
    assert before.elements[0].kappa_start == 0.0
    assert before.elements[0].radius_end == approx(50)
    assert after.elements[0].radius_start == approx(1 / 0.03)
    assert after.elements[0].radius_end == approx(20)

    with raises(ProfileError):
        split(CurvatureProfile.build([line(100)]), 60, 40)


def test_resolve_line():
    r = resolve(CurvatureProfile.build([line(10)]), Pose(0, 0, 0))
    assert len(r.records) == 1
    assert r.start == Pose(0, 0, 0)
    assert r.end_pose.x == approx(10)


def test_resolve_heading_monotone():
    profile = CurvatureProfile.build(
        [line(5), spiral(5, STRAIGHT, 20), arc(10, 20)])
    r = resolve(profile, Pose(0, 0, 0))
    headings = [pose.phi for _, pose in r.sample(0.25)]
    assert all(b >= a - 1e-12 for a, b in zip(headings, headings[1:]))


def test_resolve_symmetric_turn():
    l_sp, l_arc, radius = 10.0, 20.0, 40.0
    profile = CurvatureProfile.build([
        line(10), spiral(l_sp, STRAIGHT, radius), arc(l_arc, radius),
        spiral(l_sp, radius, STRAIGHT), line(10)])
    r = resolve(profile, Pose(0, 0, 0))
    assert r.end_pose.phi == approx((l_arc + l_sp) / radius, abs=1e-12)


def random_profile(rng):
    elements = []
    kappa = 0.0
    for _ in range(rng.integers(1, 8)):
        length = rng.uniform(1, 80)
        choice = rng.integers(3)
        if choice == 0 and kappa == 0.0:
            elements.append(line(length))
        elif choice == 1 and kappa != 0.0:
            elements.append(ProfileElement.from_curvature(
                length, kappa, kappa))
        else:
            target = 0.0 if kappa != 0.0 and rng.random() < 0.3 else \
                rng.uniform(-0.05, 0.05)
            elements.append(ProfileElement.from_curvature(
                length, kappa, target))
            kappa = target
    return CurvatureProfile.build(elements)


def test_resolved_records_are_continuous():
    rng = np.random.default_rng(3)
    for _ in range(200):
        profile = random_profile(rng)
        start = Pose.make(*rng.uniform(-500, 500, size=2),
                          rng.uniform(-math.pi, math.pi))
        r = resolve(profile, start)
        for a, b in zip(r.records, r.records[1:]):
            end = a.element.end_pose(a.start)
            assert math.hypot(end.x - b.start.x, end.y - b.start.y) <= 1e-6
            assert abs(normalize_angle(end.phi - b.start.phi)) <= 1e-8
            assert abs(a.element.kappa_end - b.element.kappa_start) <= 1e-9
            assert b.s_offset == approx(a.s_offset + a.element.length)


def test_sample_spacing():
    r = resolve(CurvatureProfile.build(
        [line(10), spiral(4, STRAIGHT, 30), arc(7, 30)]), Pose(0, 0, 0))
    samples = r.sample(0.5)
    s_values = [s for s, _ in samples]
    assert s_values[0] == 0.0
    assert s_values[-1] == approx(21)
    assert 10.0 in s_values and 14.0 in s_values
    assert max(b - a for a, b in zip(s_values, s_values[1:])) <= 0.5 + 1e-12
