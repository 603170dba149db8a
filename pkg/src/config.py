"""Defaults for the oracle, thinning and the surface experiments."""

from dataclasses import dataclass
from enum import Enum


class Shape(str, Enum):
    """Implicit surface family."""

    CIRCLE = "circle"
    SPHERE = "sphere"
    TORUS = "torus"


# Oracle
DEFAULT_BUDGET = 10**6
DEFAULT_CACHE_MAX_ENTRIES = 500_000
DEFAULT_ESCALATION_ATTEMPTS = 1
ESCALATION_GROWTH = 10

# Thinning
DEFAULT_MAX_SET_SIZE = 3

# Exhaustive small-graph suites run over every graph up to this order
EXHAUSTIVE_MAX_VERTICES = 7


@dataclass
class ExperimentConfig:
    """Configuration of one voxelization experiment."""

    shape: Shape
    radius: float
    edge_length: float = 1.0
    minor_radius: float = 0.0
    center: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.edge_length <= 0:
            raise ValueError(f"Edge length must be positive, got {self.edge_length}")
        if self.radius < 0:
            raise ValueError(f"Radius must be non-negative, got {self.radius}")
        if self.shape == Shape.TORUS and not 0 < self.minor_radius < self.radius:
            raise ValueError("Torus needs 0 < minor_radius < radius")

    @property
    def dimension(self) -> int:
        return 2 if self.shape == Shape.CIRCLE else 3


EXPERIMENT_PRESETS: dict[str, ExperimentConfig] = {
    # Circles (planar digital 1-spheres)
    "circle-1.5": ExperimentConfig(shape=Shape.CIRCLE, radius=1.5),
    "circle-2.5": ExperimentConfig(shape=Shape.CIRCLE, radius=2.5),
    "circle-3.5": ExperimentConfig(shape=Shape.CIRCLE, radius=3.5),
    # Spheres (digital 2-spheres)
    "sphere-2.5": ExperimentConfig(shape=Shape.SPHERE, radius=2.5),
    "sphere-3.5": ExperimentConfig(shape=Shape.SPHERE, radius=3.5),
    # Torus, corner-sign test only
    "torus-3-1": ExperimentConfig(shape=Shape.TORUS, radius=3.0, minor_radius=1.0),
}


DEFAULT_PRESET = "circle-1.5"


def get_available_presets() -> list[str]:
    """Get list of available experiment presets."""
    return list(EXPERIMENT_PRESETS.keys())
