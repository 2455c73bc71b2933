import numpy as np
from pytest import (approx, raises)

from roadgen.errors import InputError
from roadgen.lanes import (constant_width, widening, lapse, transition)


def coefficients(poly):
    return poly.a, poly.b, poly.c, poly.d


def test_constant_width():
    assert coefficients(constant_width(3.5)) == (0, 0, 0, 3.5)
    assert coefficients(constant_width(3.0)) == (0, 0, 0, 3.0)
    assert constant_width(3.5).odr_coefficients == (3.5, 0, 0, 0)
    with raises(InputError):
        constant_width(0)


def test_widening():
    w = widening(3, 0, 10)
    assert coefficients(w) == approx((-0.006, 0.09, 0, 0))
    assert w(10) == approx(3)
    assert w.derivative(10) == approx(0, abs=1e-15)
    assert coefficients(widening(1, 0, 1)) == approx((-2, 3, 0, 0))
    with raises(InputError):
        widening(3, 0, 0)


def test_lapse():
    w = lapse(3, 0, 10)
    assert coefficients(w) == approx((0.006, -0.09, 0, 3))
    assert w(5) == approx(1.5)
    assert coefficients(lapse(1, 0, 1)) == approx((2, -3, 0, 1))


def test_boundary_conditions():
    rng = np.random.default_rng(4)
    for w0, ds in zip(rng.uniform(0.5, 5, 1000), rng.uniform(1, 100, 1000)):
        up = widening(w0, 0, ds)
        down = lapse(w0, 0, ds)
        assert abs(up(0)) <= 1e-12
        assert abs(up(ds) - w0) <= 1e-12
        assert abs(up.derivative(0)) <= 1e-12
        assert abs(up.derivative(ds)) <= 1e-12
        assert abs(down(0) - w0) <= 1e-12
        assert abs(down(ds)) <= 1e-12
        assert abs(down.derivative(0)) <= 1e-12
        assert abs(down.derivative(ds)) <= 1e-12


def test_transition_and_shift():
    t = transition(3.0, 4.0, 10.0, 20.0)
    assert t(0) == approx(3.0)
    assert t(20) == approx(4.0)
    assert t.valid_from == 10.0 and t.valid_to == 30.0

    s = t.shifted(5.0)
    assert s.valid_from == 15.0
    for x in np.linspace(0, 15, 7):
        assert s(x) == approx(t(x + 5.0))
