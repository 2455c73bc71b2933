"""
Static top views of assembled networks.
"""

from .svg import (render_svg, draw, road_outlines)

__all__ = ['render_svg', 'draw', 'road_outlines']
