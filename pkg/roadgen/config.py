"""
Configuration
=============

Process-wide switches live in the ``config`` dictionary. Default lane
layouts and junction constants are read from ``defaults.ini`` files with
|load_defaults|; a user file given on the command line overrides the
shipped one key by key.

.. |load_defaults| replace:: :py:func:`load_defaults`
"""

import configparser
from collections import namedtuple
from pathlib import Path

from .errors import InputError

config = {
    # number of worker threads used for segment construction and gap closing
    'threads': 1,
    # junction ids start here; road ids start at 1
    'first_junction_id': 1000,
}

DEFAULTS_FILE = Path(__file__).parent / 'data' / 'defaults.ini'

ROAD_CLASSES = ('main', 'access', 'roundabout')

RoadDefaults = namedtuple('RoadDefaults', [
    'lanes_per_direction', 'lane_width', 'lane_type', 'lane_marking',
    'center_marking', 'road_type'])

JunctionDefaults = namedtuple('JunctionDefaults', [
    'area_margin', 'turn_widening_length', 'turn_storage_length',
    'straight_tolerance_deg'])

CloseDefaults = namedtuple('CloseDefaults', [
    'max_iterations', 'position_tolerance', 'heading_tolerance',
    'asymmetric_fallback'])


class Defaults:
    """Typed view on a defaults file.

    .. py:attribute:: roads

        Dictionary from road classification (``main``, ``access``,
        ``roundabout``) to :py:class:`RoadDefaults`.

    .. py:attribute:: junction

        :py:class:`JunctionDefaults`.

    .. py:attribute:: close

        :py:class:`CloseDefaults`.
    """
    def __init__(self, roads, junction, close, sources):
        self.roads = roads
        self.junction = junction
        self.close = close
        self.sources = sources

    def road(self, classification):
        return self.roads[classification]


def read_config(filename):
    config = configparser.ConfigParser()
    try:
        config.read(filename)
    except configparser.Error as exc:
        raise InputError("{}: {}".format(filename, exc))
    return config


def _check_keys(parser, reference, filename):
    for section in parser.sections():
        if not reference.has_section(section):
            raise InputError("{}: unknown section [{}]".format(
                filename, section))
        for key in parser[section]:
            if not reference.has_option(section, key):
                raise InputError("{}: unknown key '{}' in [{}]".format(
                    filename, key, section))


def load_defaults(path=None):
    """Read the shipped defaults and, if given, a user file on top.

    :param path: optional user defaults file.
    :return: :py:class:`Defaults`
    :raises InputError: unreadable user file, unknown sections or keys,
        values that do not convert.
    """
    parser = read_config(DEFAULTS_FILE)
    sources = [str(DEFAULTS_FILE)]

    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise InputError("defaults file '{}' not found".format(path))
        user = read_config(path)
        _check_keys(user, parser, path)
        parser.read(path)
        sources.append(str(path))

    try:
        roads = {
            name: RoadDefaults(
                lanes_per_direction=parser.getint(name, 'lanes_per_direction'),
                lane_width=parser.getfloat(name, 'lane_width'),
                lane_type=parser.get(name, 'lane_type'),
                lane_marking=parser.get(name, 'lane_marking'),
                center_marking=parser.get(name, 'center_marking'),
                road_type=parser.get(name, 'road_type'))
            for name in ROAD_CLASSES}

        junction = JunctionDefaults(
            area_margin=parser.getfloat('junction', 'area_margin'),
            turn_widening_length=parser.getfloat(
                'junction', 'turn_widening_length'),
            turn_storage_length=parser.getfloat(
                'junction', 'turn_storage_length'),
            straight_tolerance_deg=parser.getfloat(
                'junction', 'straight_tolerance_deg'))

        close = CloseDefaults(
            max_iterations=parser.getint('close', 'max_iterations'),
            position_tolerance=parser.getfloat('close', 'position_tolerance'),
            heading_tolerance=parser.getfloat('close', 'heading_tolerance'),
            asymmetric_fallback=parser.getboolean(
                'close', 'asymmetric_fallback'))

    except ValueError as exc:
        raise InputError("bad value in defaults: {}".format(exc))

    for name, road in roads.items():
        if road.lanes_per_direction < 0 or road.lane_width <= 0:
            raise InputError(
                "defaults [{}]: lane count must be >= 0 and lane width "
                "positive".format(name))

    return Defaults(roads, junction, close, sources)
