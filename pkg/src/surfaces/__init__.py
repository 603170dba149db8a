"""Implicit surfaces for voxelization experiments."""

from .base import ImplicitSurface
from .round import RoundSurface
from .torus import TorusSurface
from .function import FunctionSurface
from .factory import create_surface

__all__ = [
    "ImplicitSurface",
    "RoundSurface",
    "TorusSurface",
    "FunctionSurface",
    "create_surface",
]
