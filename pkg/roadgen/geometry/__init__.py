"""
Plan-view geometry: poses along lines, arcs and clothoids, and the
curvature profiles built from them.
"""

from .kernel import (
    Pose, SpiralParam, normalize_angle, line_pose, arc_pose, fresnel,
    spiral_pose, rigid_transform, inverse_transform, to_frame, from_frame,
    FRESNEL_U_MAX)

from .profile import (
    STRAIGHT, ElementKind, ProfileElement, CurvatureProfile,
    ResolvedElement, ResolvedReferenceLine, curvature_from_radius,
    radius_from_curvature, append, resolve, curvature_at, split)

__all__ = [
    'Pose', 'SpiralParam', 'normalize_angle', 'line_pose', 'arc_pose',
    'fresnel', 'spiral_pose', 'rigid_transform', 'inverse_transform',
    'to_frame', 'from_frame', 'FRESNEL_U_MAX',
    'STRAIGHT', 'ElementKind', 'ProfileElement', 'CurvatureProfile',
    'ResolvedElement', 'ResolvedReferenceLine', 'curvature_from_radius',
    'radius_from_curvature', 'append', 'resolve', 'curvature_at', 'split']
