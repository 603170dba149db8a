"""Circles and spheres with an exact box test."""

import numpy as np

from .base import DEFAULT_TOLERANCE, ImplicitSurface


class RoundSurface(ImplicitSurface):
    """Circle (2D) or sphere (3D) of a given radius around a center."""

    def __init__(self, center: tuple[float, ...], radius: float):
        super().__init__(dimension=len(center), exact=True)
        if radius < 0:
            raise ValueError(f"Radius must be non-negative, got {radius}")
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        return np.linalg.norm(points - self.center, axis=-1) - self.radius

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.center - self.radius, self.center + self.radius

    def intersects(
        self, lo: np.ndarray, hi: np.ndarray, tolerance: float = DEFAULT_TOLERANCE
    ) -> np.ndarray:
        """A closed box meets the sphere iff min-distance <= r <= max-distance to the center."""
        nearest = np.clip(self.center, lo, hi)
        d_min = np.linalg.norm(nearest - self.center, axis=-1)
        farthest = np.maximum(np.abs(lo - self.center), np.abs(hi - self.center))
        d_max = np.linalg.norm(farthest, axis=-1)
        return (d_min <= self.radius + tolerance) & (self.radius <= d_max + tolerance)
