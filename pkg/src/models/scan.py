"""Results of simple point, edge and set scans."""

from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph


class SimpleSetCheck(str, Enum):
    """Outcome of checking the two requirements of a simple set."""

    SIMPLE = "simple"
    SET_NOT_CONTRACTIBLE = "set_not_contractible"
    UNION_NOT_CONTRACTIBLE = "union_not_contractible"


@dataclass
class SimplePointScan:
    """Simple points in label order; undecided vertices listed apart."""

    simple: list[str] = field(default_factory=list)
    undecided: list[str] = field(default_factory=list)


@dataclass
class SimpleEdgeScan:
    """Simple edges as sorted pairs in sorted order."""

    simple: list[tuple[str, str]] = field(default_factory=list)
    undecided: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class SimpleSetScan:
    """Simple sets as sorted label tuples, ordered by size then labels."""

    simple: list[tuple[str, ...]] = field(default_factory=list)
    undecided: list[tuple[str, ...]] = field(default_factory=list)


@dataclass
class GreedyReduction:
    """Residue and deletions of the greedy simple-point reduction."""

    residue: Graph
    deletions: list[str]
    undecided: bool = False
