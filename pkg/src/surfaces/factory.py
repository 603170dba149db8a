"""Factory for creating implicit surfaces."""

from ..config import ExperimentConfig, Shape
from .base import ImplicitSurface
from .round import RoundSurface
from .torus import TorusSurface


def create_surface(config: ExperimentConfig) -> ImplicitSurface:
    """
    Create the surface described by an experiment configuration.

    Args:
        config: Shape, radii and optional center

    Returns:
        Configured surface instance

    Raises:
        ValueError: If the center does not match the shape's dimension
    """
    center = config.center or (0.0,) * config.dimension
    if len(center) != config.dimension:
        raise ValueError(
            f"{config.shape.value} needs a {config.dimension}D center, got {center}"
        )

    if config.shape in (Shape.CIRCLE, Shape.SPHERE):
        return RoundSurface(center=tuple(center), radius=config.radius)
    elif config.shape == Shape.TORUS:
        return TorusSurface(major=config.radius, minor=config.minor_radius, center=tuple(center))
    else:
        raise ValueError(f"Unknown shape: {config.shape}")
