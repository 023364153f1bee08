"""Deriving tool-process-tool triples from event streams, and coarsening them.

A triple pairs each surviving event's tool and process with the NEXT
surviving event's tool; the final event closes on itself so that every
surviving event produces exactly one triple and consecutive triples chain
(target of i == source of i+1).
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .events import InteractionEvent
from .taxonomy import ToolId

DEFAULT_MIN_DURATION_S = 1.0


class UnorderedEvents(Exception):
    """Event timestamps regress within the sequence."""


class UnmappedTool(Exception):
    """A coarsening map does not cover every tool in the sequence."""


@dataclass(frozen=True)
class InteractionTriple:
    tool_src: ToolId
    process: str
    tool_tar: ToolId
    duration_s: float
    ts_ms: int

    @property
    def key(self) -> tuple[ToolId, str, ToolId]:
        return (self.tool_src, self.process, self.tool_tar)

    @property
    def edge(self) -> tuple[ToolId, ToolId]:
        return (self.tool_src, self.tool_tar)

    def to_dict(self) -> dict:
        return {
            "src": self.tool_src.to_dict(),
            "process": self.process,
            "tar": self.tool_tar.to_dict(),
            "duration_s": self.duration_s,
            "ts_ms": self.ts_ms,
        }


def derive_triples(
    events: Sequence[InteractionEvent],
    min_duration_s: float = DEFAULT_MIN_DURATION_S,
) -> list[InteractionTriple]:
    """Drop events shorter than the threshold, then pair neighbours.

    Events at exactly the threshold survive. Raises UnorderedEvents if the
    input timestamps ever regress.
    """
    for prev, cur in zip(events, events[1:]):
        if cur.ts_ms < prev.ts_ms:
            raise UnorderedEvents(
                f"timestamp {cur.ts_ms} after {prev.ts_ms} in session {cur.session!r}"
            )
    surviving = [e for e in events if e.duration_s >= min_duration_s]
    triples = []
    for i, event in enumerate(surviving):
        nxt = surviving[i + 1] if i + 1 < len(surviving) else event
        triples.append(InteractionTriple(
            tool_src=event.tool,
            process=event.process,
            tool_tar=nxt.tool,
            duration_s=event.duration_s,
            ts_ms=event.ts_ms,
        ))
    return triples


def coarsen(
    triples: Iterable[InteractionTriple],
    tool_map: Mapping[ToolId, ToolId],
) -> list[InteractionTriple]:
    """Map every triple's tools pointwise; order and length are preserved."""
    out = []
    for triple in triples:
        try:
            src = tool_map[triple.tool_src]
            tar = tool_map[triple.tool_tar]
        except KeyError as exc:
            raise UnmappedTool(f"coarsening map misses tool {exc.args[0]!r}") from None
        out.append(replace(triple, tool_src=src, tool_tar=tar))
    return out


def kind_map(triples: Iterable[InteractionTriple]) -> dict[ToolId, ToolId]:
    """The standard coarsening: forget chapters, keep the high-level kind."""
    mapping: dict[ToolId, ToolId] = {}
    for triple in triples:
        for tool in (triple.tool_src, triple.tool_tar):
            mapping.setdefault(tool, ToolId(kind=tool.kind))
    return mapping
