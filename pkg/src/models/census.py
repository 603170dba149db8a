"""Small-graph census model."""

from dataclasses import dataclass, field

from .graph import Graph


@dataclass
class CensusRow:
    """Connected isomorphism classes of one order and how many are contractible."""

    n: int
    connected: int = 0
    contractible: int = 0
    exceptions: list[Graph] = field(default_factory=list)
