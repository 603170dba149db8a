"""Oracle budget and contractibility certificate models."""

from dataclasses import dataclass

from ..config import DEFAULT_BUDGET


@dataclass(frozen=True)
class OracleBudget:
    """Cap on recursive oracle calls for one top-level query."""

    max_recursive_calls: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.max_recursive_calls < 1:
            raise ValueError(
                f"Budget must allow at least one call, got {self.max_recursive_calls}"
            )

    def scaled(self, factor: int) -> "OracleBudget":
        return OracleBudget(self.max_recursive_calls * factor)


@dataclass(frozen=True)
class ContractionCertificate:
    """Simple-point deletion order reducing a graph to K1.

    The surviving vertex is the one label missing from ``deletion_order``.
    """

    deletion_order: tuple[str, ...]


@dataclass(frozen=True)
class ContractibilityResult:
    """Oracle answer; ``certificate`` is set exactly when contractible."""

    contractible: bool
    certificate: ContractionCertificate | None = None

    def __bool__(self) -> bool:
        return self.contractible
