"""Contractible transformation and trace models."""

from dataclasses import dataclass
from enum import Enum


class TransformKind(str, Enum):
    """Kinds of topology-preserving moves."""

    DELETE_POINT = "delete_point"
    GLUE_POINT = "glue_point"
    DELETE_EDGE = "delete_edge"
    GLUE_EDGE = "glue_edge"
    CONTRACT_SET = "contract_set"


@dataclass(frozen=True)
class Transformation:
    """One recorded move with the labels needed to replay and re-check it.

    delete_point uses ``vertex``; glue_point uses ``vertex`` and ``rim``;
    the edge kinds use ``edge``; contract_set uses ``members`` and ``z``.
    """

    kind: TransformKind
    vertex: str | None = None
    rim: tuple[str, ...] = ()
    edge: tuple[str, str] | None = None
    members: tuple[str, ...] = ()
    z: str | None = None

    def __post_init__(self) -> None:
        if self.kind in (TransformKind.DELETE_POINT, TransformKind.GLUE_POINT):
            if self.vertex is None:
                raise ValueError(f"{self.kind.value} needs a vertex")
        elif self.kind in (TransformKind.DELETE_EDGE, TransformKind.GLUE_EDGE):
            if self.edge is None or self.edge[0] == self.edge[1]:
                raise ValueError(f"{self.kind.value} needs an edge of two vertices")
        elif not self.members or self.z is None:
            raise ValueError("contract_set needs members and z")

    @classmethod
    def delete_point(cls, v: str) -> "Transformation":
        return cls(TransformKind.DELETE_POINT, vertex=v)

    @classmethod
    def glue_point(cls, v: str, rim: frozenset[str] | set[str]) -> "Transformation":
        return cls(TransformKind.GLUE_POINT, vertex=v, rim=tuple(sorted(rim)))

    @classmethod
    def delete_edge(cls, u: str, v: str) -> "Transformation":
        return cls(TransformKind.DELETE_EDGE, edge=(min(u, v), max(u, v)))

    @classmethod
    def glue_edge(cls, u: str, v: str) -> "Transformation":
        return cls(TransformKind.GLUE_EDGE, edge=(min(u, v), max(u, v)))

    @classmethod
    def contract_set(cls, members: frozenset[str] | set[str], z: str) -> "Transformation":
        return cls(TransformKind.CONTRACT_SET, members=tuple(sorted(members)), z=z)


@dataclass(frozen=True)
class Trace:
    """Append-only sequence of transformations from a digested start graph."""

    initial_digest: str
    steps: tuple[Transformation, ...] = ()

    def append(self, step: Transformation) -> "Trace":
        return Trace(self.initial_digest, self.steps + (step,))

    def count(self, kind: TransformKind) -> int:
        return sum(1 for step in self.steps if step.kind == kind)

    def __len__(self) -> int:
        return len(self.steps)
