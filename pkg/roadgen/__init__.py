"""
roadgen
=======

Compiles compact logical descriptions of road networks into OpenDRIVE.
"""

__version__ = "0.1.0"

from .errors import (
    RoadGenError, InputError, GeometryError, ValidationError)
from .config import (config, load_defaults)
from .logical import (parse, read_file, apply_overrides, serialize)
from .junction import (build_segment, connect)
from .network import (assemble, close_gap)
from .opendrive import (emit, validate)
from .display import render_svg
from .run.pipeline import (compile_network, Outcome)

__all__ = ['RoadGenError', 'InputError', 'GeometryError', 'ValidationError',
           'config', 'load_defaults',
           'parse', 'read_file', 'apply_overrides', 'serialize',
           'build_segment', 'connect', 'assemble', 'close_gap',
           'emit', 'validate', 'render_svg', 'compile_network', 'Outcome',
           '__version__']
