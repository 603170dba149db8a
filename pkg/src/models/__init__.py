"""Data models for the digital topology engine."""

from .graph import Graph, VertexLabel, validate_label
from .certificate import ContractibilityResult, ContractionCertificate, OracleBudget
from .scan import (
    GreedyReduction,
    SimpleEdgeScan,
    SimplePointScan,
    SimpleSetCheck,
    SimpleSetScan,
)
from .trace import Trace, Transformation, TransformKind
from .thinning import ThinningConfig, ThinningReport, ThinningStats
from .complex import BettiVector, CliqueComplex, InvariantSummary
from .cubical import CubicalModel
from .census import CensusRow
from .experiment import ExperimentComparison, ExperimentReport

__all__ = [
    "Graph",
    "VertexLabel",
    "validate_label",
    "ContractibilityResult",
    "ContractionCertificate",
    "OracleBudget",
    "GreedyReduction",
    "SimpleEdgeScan",
    "SimplePointScan",
    "SimpleSetCheck",
    "SimpleSetScan",
    "Trace",
    "Transformation",
    "TransformKind",
    "ThinningConfig",
    "ThinningReport",
    "ThinningStats",
    "BettiVector",
    "CliqueComplex",
    "InvariantSummary",
    "CubicalModel",
    "CensusRow",
    "ExperimentComparison",
    "ExperimentReport",
]
