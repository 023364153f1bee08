"""Sequence metrics over triple logs.

All counts use multiset semantics over the sequence: a triple is a loop if
its source equals its target; it is a multiple edge if at least one OTHER
triple shares its (source, target) pair; it is an identical triple if at
least one other triple equals it in full. Centrality of a tool is its
in-degree plus out-degree, so a loop contributes two.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .events import InteractionEvent
from .taxonomy import ToolId
from .triples import DEFAULT_MIN_DURATION_S, InteractionTriple, coarsen, derive_triples, kind_map


def count_loops(triples: Iterable[InteractionTriple]) -> int:
    return sum(1 for t in triples if t.tool_src == t.tool_tar)


def count_multiple_edges(triples: Iterable[InteractionTriple]) -> int:
    edge_counts = Counter(t.edge for t in triples)
    return sum(c for c in edge_counts.values() if c >= 2)


def count_identical_triples(triples: Iterable[InteractionTriple]) -> tuple[int, int]:
    """(number of triples occurring more than once, number of distinct such triples)."""
    key_counts = Counter(t.key for t in triples)
    repeated = [c for c in key_counts.values() if c >= 2]
    return (sum(repeated), len(repeated))


def centrality(triples: Iterable[InteractionTriple], tool: ToolId) -> int:
    total = 0
    for t in triples:
        if t.tool_src == tool:
            total += 1
        if t.tool_tar == tool:
            total += 1
    return total


@dataclass(frozen=True)
class ProvenanceMetrics:
    total_triples: int
    loops: int
    multiple_edges: int
    identical_triples: int
    distinct_identical_instances: int
    distinct_tool_combinations: int  # distinct (src, tar) pairs observed
    per_tool_centrality: tuple[tuple[ToolId, int], ...]  # sorted by tool label

    def to_dict(self) -> dict:
        return {
            "totalTriples": self.total_triples,
            "loops": self.loops,
            "multipleEdges": self.multiple_edges,
            "identicalTriples": self.identical_triples,
            "distinctIdenticalInstances": self.distinct_identical_instances,
            "distinctToolCombinations": self.distinct_tool_combinations,
            "centrality": {tool.label: value for tool, value in self.per_tool_centrality},
        }


def analysis_report(
    events: Sequence[InteractionEvent],
    min_duration_s: float = DEFAULT_MIN_DURATION_S,
) -> dict:
    """Full metric report for an event log: fine-grained triples plus the
    kind-level coarsening, in one JSON-ready structure."""
    triples = derive_triples(events, min_duration_s)
    coarse = coarsen(triples, kind_map(triples))
    return {
        "events": len(events),
        "triples": len(triples),
        "minDurationS": min_duration_s,
        "fine": compute_metrics(triples).to_dict(),
        "coarse": compute_metrics(coarse).to_dict(),
    }


def compute_metrics(triples: Sequence[InteractionTriple]) -> ProvenanceMetrics:
    identical, distinct_identical = count_identical_triples(triples)
    by_tool: Counter[ToolId] = Counter()
    for t in triples:
        by_tool[t.tool_src] += 1
        by_tool[t.tool_tar] += 1
    return ProvenanceMetrics(
        total_triples=len(triples),
        loops=count_loops(triples),
        multiple_edges=count_multiple_edges(triples),
        identical_triples=identical,
        distinct_identical_instances=distinct_identical,
        distinct_tool_combinations=len({t.edge for t in triples}),
        per_tool_centrality=tuple(sorted(by_tool.items(), key=lambda kv: kv[0].label)),
    )
