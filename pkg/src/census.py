"""Census of small connected graphs by contractibility.

Uses the networkx graph atlas, which lists every graph up to seven
vertices once per isomorphism class.
"""

import sys
from collections.abc import Iterable

import networkx as nx

from .config import EXHAUSTIVE_MAX_VERTICES
from .contractibility import DEFAULT_CACHE, ContractibilityCache, greedy_reduce, is_contractible
from .models import CensusRow, Graph, OracleBudget


def connected_atlas_graphs(max_n: int = EXHAUSTIVE_MAX_VERTICES) -> list[Graph]:
    """One graph per connected isomorphism class with 1..max_n vertices, labelled "1".."n"."""
    if not 1 <= max_n <= EXHAUSTIVE_MAX_VERTICES:
        raise ValueError(f"The atlas covers 1..{EXHAUSTIVE_MAX_VERTICES} vertices, got {max_n}")
    graphs = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(h):
            continue
        graphs.append(Graph.from_networkx(nx.relabel_nodes(h, {i: str(i + 1) for i in h})))
    return graphs


def contractible_census(
    max_n: int,
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> list[CensusRow]:
    """Per order n, the number of connected and of contractible classes, plus the exceptions."""
    rows = {n: CensusRow(n=n) for n in range(1, max_n + 1)}
    for g in connected_atlas_graphs(max_n):
        row = rows[len(g)]
        row.connected += 1
        if is_contractible(g, budget, cache).contractible:
            row.contractible += 1
        else:
            row.exceptions.append(g)
    return list(rows.values())


def greedy_oracle_findings(
    graphs: Iterable[Graph],
    budget: OracleBudget | None = None,
    cache: ContractibilityCache | None = DEFAULT_CACHE,
) -> list[Graph]:
    """
    Graphs on which greedy simple-point deletion and the exact oracle disagree.

    Each disagreement is reported on standard error as a finding rather
    than raised.
    """
    findings = []
    for g in graphs:
        greedy = greedy_reduce(g, budget, cache)
        if greedy.undecided:
            continue
        exact = is_contractible(g, budget, cache).contractible
        if (len(greedy.residue) == 1) != exact:
            findings.append(g)
            print(
                f"Finding: greedy residue has {len(greedy.residue)} vertices "
                f"but the oracle says contractible={exact} for edges {list(g.edges)}",
                file=sys.stderr,
            )
    return findings
