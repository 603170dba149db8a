"""Shared fixtures."""

import pytest

from src.contractibility import ContractibilityCache
from src.models import Graph


@pytest.fixture
def cache():
    """A fresh oracle memo, isolated from the process-wide default."""
    return ContractibilityCache()


@pytest.fixture
def p4():
    """Path a-b-c-d."""
    return Graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture
def k3():
    """Triangle on a, b, c."""
    return Graph(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])
