"""
Lane width polynomials :math:`w(s) = a s^3 + b s^2 + c s + d`, with `s`
measured from the polynomial's own start ``valid_from``.
"""

import math
from dataclasses import dataclass, replace

from ..errors import InputError


@dataclass(frozen=True)
class WidthPoly:
    a: float
    b: float
    c: float
    d: float
    valid_from: float = 0.0
    valid_to: float = math.inf

    def __call__(self, ds):
        return ((self.a * ds + self.b) * ds + self.c) * ds + self.d

    def derivative(self, ds):
        return (3.0 * self.a * ds + 2.0 * self.b) * ds + self.c

    @property
    def length(self):
        return self.valid_to - self.valid_from

    @property
    def odr_coefficients(self):
        """Coefficients in OpenDRIVE order, constant term first."""
        return self.d, self.c, self.b, self.a

    @property
    def is_constant(self):
        return self.a == 0 and self.b == 0 and self.c == 0

    def shifted(self, h):
        """The same curve re-expanded around ``valid_from + h``; the start
        moves by `h`, the end stays."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return WidthPoly(
            a,
            3.0 * a * h + b,
            (3.0 * a * h + 2.0 * b) * h + c,
            self(h),
            self.valid_from + h, self.valid_to)

    def scaled(self, factor):
        return WidthPoly(self.a * factor, self.b * factor, self.c * factor,
                         self.d * factor, self.valid_from, self.valid_to)

    def moved(self, valid_from, valid_to=None):
        """Same coefficients on another interval."""
        if valid_to is None:
            valid_to = valid_from + self.length
        return replace(self, valid_from=valid_from, valid_to=valid_to)


def constant_width(w0, valid_from=0.0, valid_to=math.inf):
    """In the simplest case the width is constant: ``a=b=c=0, d=w0``."""
    if not w0 > 0:
        raise InputError("lane width must be positive, got {}".format(w0))
    return WidthPoly(0.0, 0.0, 0.0, float(w0), valid_from, valid_to)


def _check_transition(w0, ds):
    if not ds > 0:
        raise InputError(
            "lane transition length must be positive, got {}".format(ds))
    if not w0 > 0:
        raise InputError("lane width must be positive, got {}".format(w0))


def transition(w0, w1, s0, ds):
    """Cubic from `w0` at `s0` to `w1` at ``s0 + ds`` with zero slope at
    both ends."""
    if not ds > 0:
        raise InputError(
            "lane transition length must be positive, got {}".format(ds))
    dw = w1 - w0
    return WidthPoly(-2.0 * dw / ds ** 3, 3.0 * dw / ds ** 2, 0.0, float(w0),
                     s0, s0 + ds)


def widening(w0, s0, ds):
    """Cubic from 0 at `s0` to `w0` at ``s0 + ds`` with zero slope at both
    ends."""
    _check_transition(w0, ds)
    return WidthPoly(-2.0 * w0 / ds ** 3, 3.0 * w0 / ds ** 2, 0.0, 0.0,
                     s0, s0 + ds)


def lapse(w0, s0, ds):
    """Cubic from `w0` at `s0` to 0 at ``s0 + ds`` with zero slope at both
    ends."""
    _check_transition(w0, ds)
    return WidthPoly(2.0 * w0 / ds ** 3, -3.0 * w0 / ds ** 2, 0.0, float(w0),
                     s0, s0 + ds)
