"""Clique complex and homology models."""

from dataclasses import dataclass


@dataclass(frozen=True)
class CliqueComplex:
    """Cliques of a graph by dimension, each a sorted label tuple."""

    cliques_by_dim: tuple[tuple[tuple[str, ...], ...], ...]
    max_dim: int

    @property
    def counts(self) -> list[int]:
        return [len(cliques) for cliques in self.cliques_by_dim]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))


@dataclass(frozen=True)
class BettiVector:
    """Ranks b_0..b_max_dim of clique-complex homology over GF(2)."""

    betti: tuple[int, ...]

    def trimmed(self) -> tuple[int, ...]:
        """Betti numbers without trailing zeros (b_0 is always kept)."""
        values = list(self.betti)
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        return tuple(values)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


@dataclass(frozen=True)
class InvariantSummary:
    """Euler characteristic, Betti vector and clique counts of a graph."""

    euler: int
    betti: BettiVector
    clique_counts: tuple[int, ...]
