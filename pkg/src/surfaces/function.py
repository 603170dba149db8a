"""User-supplied scalar fields."""

from collections.abc import Callable

import numpy as np

from .base import ImplicitSurface


class FunctionSurface(ImplicitSurface):
    """Zero set of an arbitrary vectorized field, tested by corner signs."""

    def __init__(
        self,
        field: Callable[[np.ndarray], np.ndarray],
        lo: tuple[float, ...],
        hi: tuple[float, ...],
    ):
        super().__init__(dimension=len(lo), exact=False)
        if len(hi) != len(lo):
            raise ValueError("Bounding box corners differ in dimension")
        self.field = field
        self.lo = np.asarray(lo, dtype=float)
        self.hi = np.asarray(hi, dtype=float)

    def evaluate(self, points: np.ndarray) -> np.ndarray:
        return np.asarray(self.field(points), dtype=float)

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        return self.lo, self.hi
