"""
Diagnostics
===========

Facility to report pipeline failures without stack traces. A stage function
wrapped by ``@stage(name)`` returns a |Fail| record in stead of raising when
it hits a |RoadGenError|. Later stages that receive a |Fail| as one of their
arguments are not run; they pass on a new |Fail| naming the failed input.

.. |Fail| replace:: :py:class:`Fail`
.. |RoadGenError| replace:: :py:class:`roadgen.errors.RoadGenError`
"""

from functools import (wraps)
from itertools import (chain)

from ..errors import (RoadGenError)

try:
    import ujson as json
except ImportError:
    import json

SEVERITIES = ('error', 'warning', 'note')


class Diagnostic:
    """One message of the machine-readable diagnostics stream.

    :param stage: pipeline stage that produced the message.
    :param severity: one of ``error``, ``warning``, ``note``.
    :param message: text.
    :param line: line in the logical input, if known.
    :param exit_code: status the run ends with, for errors.
    """
    def __init__(self, stage, severity, message, line=None, exit_code=0):
        if severity not in SEVERITIES:
            raise ValueError("unknown severity '{}'".format(severity))
        self.stage = stage
        self.severity = severity
        self.message = message
        self.line = line
        self.exit_code = exit_code

    @property
    def is_error(self):
        return self.severity == 'error'

    def as_dict(self):
        d = {'stage': self.stage, 'severity': self.severity,
             'message': self.message}
        if self.line is not None:
            d['line'] = self.line
        if self.is_error:
            d['exit_code'] = self.exit_code
        return d

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)

    def __repr__(self):
        return "Diagnostic({stage}, {severity}: {message})".format(
            **self.as_dict())


class Fail:
    """Signifies a failure in a stage wrapped by ``@stage``. The record
    keeps the stage name, the exception that caused it (for the root cause)
    or the failing inputs (for stages that were skipped)."""
    def __init__(self, stage_name, fails=None, exception=None):
        self.name = stage_name
        self.fails = fails or []
        self.exception = exception

    @property
    def is_root_cause(self):
        """If the field ``exception`` is set in this object, it means
        that we are looking at the root cause of the failure."""
        return self.exception is not None

    @property
    def root(self):
        if self.is_root_cause:
            return self
        return self.fails[0][1].root

    @property
    def exit_code(self):
        return getattr(self.root.exception, 'exit_code', 1)

    def diagnostic(self):
        """Convert the root cause into a :py:class:`Diagnostic`."""
        root = self.root
        return Diagnostic(
            root.name, 'error', getattr(root.exception, 'msg',
                                        str(root.exception)),
            line=getattr(root.exception, 'line', None),
            exit_code=self.exit_code)

    def __bool__(self):
        return False

    def __str__(self):
        msg = "Fail: " + self.name
        if self.exception is not None:
            msg += "\n* {}: ".format(type(self.exception).__name__)
            msg += "\n    ".join(l for l in str(self.exception).split('\n'))
        elif self.fails:
            msg += "\n* failed arguments:\n    "
            msg += "\n    ".join(
                "`{}` ".format(source) + "\n    ".join(
                    l for l in str(fail).split('\n'))
                for source, fail in self.fails)
        return msg


def failed(obj):
    """Returns True if ``obj`` is an instance of ``Fail``."""
    return isinstance(obj, Fail)


def stage(name):
    """Decorator: call the stage in a try/except block, returning a `Fail`
    object if it raises a |RoadGenError|. If any of the arguments to the
    call are Fail objects, the call is not attempted. Other exceptions are
    programming errors and propagate."""
    def decorate(func):
        @wraps(func)
        def stage_wrapped(*args, **kwargs):
            fails = [
                (k, v)
                for k, v in chain(enumerate(args), kwargs.items())
                if isinstance(v, Fail)]

            if fails:
                return Fail(name, fails=fails)

            try:
                return func(*args, **kwargs)

            except RoadGenError as exc:
                return Fail(name, exception=exc)

        stage_wrapped.stage_name = name
        return stage_wrapped

    return decorate
