"""Thinning configuration and report models."""

from dataclasses import dataclass, field

from ..config import DEFAULT_MAX_SET_SIZE
from .certificate import OracleBudget
from .graph import Graph
from .trace import Trace


@dataclass(frozen=True)
class ThinningConfig:
    """Thinning parameters; phases always run points first, then sets."""

    max_set_size: int = DEFAULT_MAX_SET_SIZE
    budget: OracleBudget = field(default_factory=OracleBudget)

    def __post_init__(self) -> None:
        # a singleton contraction only relabels
        if self.max_set_size < 2:
            raise ValueError(f"max_set_size must be at least 2, got {self.max_set_size}")


@dataclass
class ThinningStats:
    """Counters of a thinning run."""

    points_deleted: int = 0
    sets_contracted: int = 0
    undecided_candidates_skipped: int = 0


@dataclass
class ThinningReport:
    """Skeleton with the trace that certifies it."""

    skeleton: Graph
    trace: Trace
    stats: ThinningStats
    max_set_size: int
