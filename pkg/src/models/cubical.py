"""Cubical model."""

from dataclasses import dataclass


@dataclass(frozen=True)
class CubicalModel:
    """Grid cubes of edge length L; index i stands for the box prod [i_k L, (i_k + 1) L]."""

    n: int
    edge_length: float
    cubes: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        if self.edge_length <= 0:
            raise ValueError(f"Edge length must be positive, got {self.edge_length}")
        for index in self.cubes:
            if len(index) != self.n:
                raise ValueError(f"Cube index {index} does not have dimension {self.n}")

    def sorted_cubes(self) -> list[tuple[int, ...]]:
        return sorted(self.cubes)

    def __len__(self) -> int:
        return len(self.cubes)
