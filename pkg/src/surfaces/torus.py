"""Torus of revolution around the z axis."""

import numpy as np

from .base import ImplicitSurface


class TorusSurface(ImplicitSurface):
    """Torus with tube radius ``minor`` at distance ``major`` from the axis."""

    def __init__(self, major: float, minor: float, center: tuple[float, ...] = (0.0, 0.0, 0.0)):
        super().__init__(dimension=3, exact=False)
        if not 0 < minor < major:
            raise ValueError(f"Need 0 < minor < major, got {minor}, {major}")
        self.major = float(major)
        self.minor = float(minor)
        self.center = np.asarray(center, dtype=float)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        p = points - self.center
        ring = np.hypot(p[..., 0], p[..., 1]) - self.major
        return ring**2 + p[..., 2] ** 2 - self.minor**2

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        reach = np.array([self.major + self.minor, self.major + self.minor, self.minor])
        return self.center - reach, self.center + reach
