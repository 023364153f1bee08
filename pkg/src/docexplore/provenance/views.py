"""Analyst-facing aggregations: kind transition matrix, process graph, and
the tool/process matrix with recency-weighted transition arrows."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .taxonomy import Taxonomy, ToolId
from .triples import InteractionTriple, UnmappedTool


@dataclass(frozen=True)
class TransitionMatrix:
    kinds: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]  # counts[src][tar]
    warnings: tuple[str, ...]  # observed transitions the UI deems impossible

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def count(self, src_kind: str, tar_kind: str) -> int:
        return self.counts[self.kinds.index(src_kind)][self.kinds.index(tar_kind)]

    def to_dict(self) -> dict:
        return {
            "kinds": list(self.kinds),
            "counts": [list(row) for row in self.counts],
            "total": self.total,
            "warnings": list(self.warnings),
        }


def transition_matrix(
    triples: Sequence[InteractionTriple],
    taxonomy: Taxonomy,
) -> TransitionMatrix:
    """Count kind-to-kind transitions. Transitions the feasibility mask
    forbids stay in the counts and are reported as data-quality warnings."""
    kinds = taxonomy.kind_order()
    index = {name: i for i, name in enumerate(kinds)}
    counts = [[0] * len(kinds) for _ in kinds]
    infeasible: Counter[tuple[str, str]] = Counter()
    for t in triples:
        for tool in (t.tool_src, t.tool_tar):
            if tool.kind not in index:
                raise UnmappedTool(f"tool kind {tool.kind!r} not in taxonomy")
        counts[index[t.tool_src.kind]][index[t.tool_tar.kind]] += 1
        if not taxonomy.is_feasible(t.tool_src.kind, t.tool_tar.kind):
            infeasible[(t.tool_src.kind, t.tool_tar.kind)] += 1
    warnings = tuple(
        f"{count} observed transition(s) {src} -> {tar} are marked infeasible"
        for (src, tar), count in sorted(infeasible.items())
    )
    return TransitionMatrix(
        kinds=tuple(kinds),
        counts=tuple(tuple(row) for row in counts),
        warnings=warnings,
    )


@dataclass(frozen=True)
class ProcessGraph:
    nodes: tuple[tuple[str, float], ...]          # (process, total duration s)
    edges: tuple[tuple[str, str, int], ...]       # (src process, tar process, count)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def to_dict(self) -> dict:
        return {
            "nodes": [{"process": p, "duration_s": d} for p, d in self.nodes],
            "edges": [{"from": a, "to": b, "count": c} for a, b, c in self.edges],
        }


def build_process_graph(triples: Sequence[InteractionTriple]) -> ProcessGraph:
    """Node weight is time spent in a process; an edge counts consecutive
    triples switching from one process to the next (self-edges included)."""
    durations: dict[str, float] = {}
    for t in triples:
        durations[t.process] = durations.get(t.process, 0.0) + t.duration_s
    edge_counts: Counter[tuple[str, str]] = Counter()
    for prev, cur in zip(triples, triples[1:]):
        edge_counts[(prev.process, cur.process)] += 1
    return ProcessGraph(
        nodes=tuple(sorted(durations.items())),
        edges=tuple((a, b, c) for (a, b), c in sorted(edge_counts.items())),
    )


def process_graph_dot(graph: ProcessGraph) -> str:
    """Graphviz rendering: node area tracks duration, edge width tracks count."""
    max_duration = max((d for _, d in graph.nodes), default=0.0)
    max_count = max((c for _, _, c in graph.edges), default=0)
    lines = ["digraph processes {", "  rankdir=LR;", "  node [shape=circle, style=filled, fillcolor=\"#cfe2f3\"];"]
    ids = {name: f"p{i}" for i, (name, _) in enumerate(graph.nodes)}
    for name, duration in graph.nodes:
        share = duration / max_duration if max_duration > 0 else 0.0
        width = 0.6 + 1.4 * share
        lines.append(
            f'  {ids[name]} [label="{name}\\n{duration:.1f}s", width={width:.2f}, fixedsize=true];'
        )
    for src, tar, count in graph.edges:
        pen = 1.0 + (3.0 * count / max_count if max_count > 0 else 0.0)
        lines.append(f'  {ids[src]} -> {ids[tar]} [label="{count}", penwidth={pen:.2f}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MatrixCell:
    tool: ToolId
    process: str
    duration_s: float
    triples: tuple[InteractionTriple, ...]  # hover payload, in log order

    def to_dict(self) -> dict:
        return {
            "tool": self.tool.to_dict(),
            "process": self.process,
            "duration_s": self.duration_s,
            "triples": [t.to_dict() for t in self.triples],
        }


@dataclass(frozen=True)
class MatrixTransition:
    src_tool: ToolId
    src_process: str
    tar_tool: ToolId
    tar_process: str
    alpha: float

    def to_dict(self) -> dict:
        return {
            "from": {"tool": self.src_tool.to_dict(), "process": self.src_process},
            "to": {"tool": self.tar_tool.to_dict(), "process": self.tar_process},
            "alpha": self.alpha,
        }


@dataclass(frozen=True)
class MatrixView:
    rows: tuple[ToolId, ...]       # abstraction rank order, overview first
    cols: tuple[str, ...]          # process column rank order
    cells: tuple[MatrixCell, ...]
    transitions: tuple[MatrixTransition, ...]  # oldest first, alpha rising to 1.0

    def cell(self, tool: ToolId, process: str) -> MatrixCell | None:
        for cell in self.cells:
            if cell.tool == tool and cell.process == process:
                return cell
        return None

    def to_dict(self) -> dict:
        return {
            "rows": [t.to_dict() for t in self.rows],
            "cols": list(self.cols),
            "cells": [c.to_dict() for c in self.cells],
            "transitions": [t.to_dict() for t in self.transitions],
        }


def build_matrix_view(
    triples: Sequence[InteractionTriple],
    taxonomy: Taxonomy,
    max_visible_transitions: int = 10,
) -> MatrixView:
    """Aggregate durations per (source tool, process) cell and attach the
    most recent transitions with linearly rising opacity.

    With m visible transitions the j-th oldest gets alpha (j+1)/m, so the
    latest step is fully opaque and older steps fade out.
    """
    if max_visible_transitions < 1:
        raise ValueError("max_visible_transitions must be >= 1")

    grouped: dict[tuple[ToolId, str], list[InteractionTriple]] = {}
    for t in triples:
        if not taxonomy.has_kind(t.tool_src.kind) or not taxonomy.has_kind(t.tool_tar.kind):
            missing = t.tool_src.kind if not taxonomy.has_kind(t.tool_src.kind) else t.tool_tar.kind
            raise UnmappedTool(f"tool kind {missing!r} not in taxonomy")
        taxonomy.process(t.process)  # raises TaxonomyError when unknown
        grouped.setdefault((t.tool_src, t.process), []).append(t)

    decl = {k.name: i for i, k in enumerate(taxonomy.kinds)}
    rows = sorted(
        {tool for tool, _ in grouped},
        key=lambda tool: (taxonomy.rank_of(tool), decl[tool.kind], tool.chapter or 0),
    )
    cols = sorted({proc for _, proc in grouped}, key=taxonomy.column_rank)

    cells = []
    for tool in rows:
        for proc in cols:
            members = grouped.get((tool, proc))
            if members:
                cells.append(MatrixCell(
                    tool=tool,
                    process=proc,
                    duration_s=sum(t.duration_s for t in members),
                    triples=tuple(members),
                ))

    pairs = list(zip(triples, triples[1:]))
    visible = pairs[-min(max_visible_transitions, len(pairs)):] if pairs else []
    m = len(visible)
    transitions = tuple(
        MatrixTransition(
            src_tool=prev.tool_src, src_process=prev.process,
            tar_tool=cur.tool_src, tar_process=cur.process,
            alpha=(j + 1) / m,
        )
        for j, (prev, cur) in enumerate(visible)
    )
    return MatrixView(rows=tuple(rows), cols=tuple(cols), cells=tuple(cells), transitions=transitions)
