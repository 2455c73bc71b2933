"""
Errors
======

Every failure that the pipeline can report derives from |RoadGenError|.
The class attribute ``exit_code`` tells the command-line tool which status
to return when the error ends a run.

.. |RoadGenError| replace:: :py:class:`RoadGenError`
"""


class RoadGenError(Exception):
    """Base class of all errors raised by the road generator.

    :param msg: human readable message.
    :param line: line number in the logical input, if known.
    """
    exit_code = 1

    def __init__(self, msg, line=None):
        super(RoadGenError, self).__init__(msg)
        self.msg = msg
        self.line = line

    def __str__(self):
        if self.line is not None:
            return "line {}: {}".format(self.line, self.msg)
        return self.msg


class InputError(RoadGenError):
    """Malformed, unknown or inconsistent logical input."""
    exit_code = 1


class GeometryError(RoadGenError):
    """A geometric construction could not be carried out."""
    exit_code = 2


class SeriesBoundError(GeometryError):
    """The Fresnel power series was asked for an argument outside its
    validity bound. The profile needs subdividing."""


class ProfileError(GeometryError):
    """Invalid curvature profile operation: discontinuous joints,
    out of range abscissae, degenerate elements."""


class ConnectError(GeometryError):
    """No line/arc connection exists between two lane end poses."""


class JunctionError(GeometryError):
    """Junction area or arm layout cannot be built."""


class PlacementError(GeometryError):
    """Segments cannot be placed consistently in world coordinates."""


class CloseGapError(GeometryError):
    """The compound-curve optimisation did not converge.

    :param residual: best residual found, ``(dx, dy, dphi)``.
    """
    def __init__(self, msg, residual=None, line=None):
        super(CloseGapError, self).__init__(msg, line=line)
        self.residual = residual


class ValidationError(RoadGenError):
    """Emitted OpenDRIVE violates a schema, or the schema is unusable."""
    exit_code = 3
