"""Base class for implicit surfaces."""

from abc import ABC, abstractmethod
from itertools import product

import numpy as np

DEFAULT_TOLERANCE = 1e-9


class ImplicitSurface(ABC):
    """Zero set of a scalar field in the plane or in space."""

    def __init__(self, dimension: int, exact: bool):
        if dimension not in (2, 3):
            raise ValueError(f"Surfaces live in dimension 2 or 3, got {dimension}")
        self.dimension = dimension
        self.exact = exact

    @abstractmethod
    def evaluate(self, points: np.ndarray) -> np.ndarray:
        """
        Evaluate the field.

        Args:
            points: Array of shape (..., dimension)

        Returns:
            Field values of shape (...)
        """
        pass

    @abstractmethod
    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        """Corners of a box containing the zero set."""
        pass

    def intersects(
        self, lo: np.ndarray, hi: np.ndarray, tolerance: float = DEFAULT_TOLERANCE
    ) -> np.ndarray:
        """Which closed boxes meet the zero set, by corner signs (approximate).

        A box counts when the field changes sign between its corners or is
        within ``tolerance`` of zero at one of them.
        """
        corners = [
            np.where(np.array(bits, dtype=bool), hi, lo)
            for bits in product((0, 1), repeat=self.dimension)
        ]
        values = np.stack([self.evaluate(corner) for corner in corners], axis=-1)
        sign_change = (values.min(axis=-1) < 0) & (values.max(axis=-1) > 0)
        return sign_change | (np.abs(values) <= tolerance).any(axis=-1)
