"""Interaction events and their JSONL wire format.

One event per line: {"session", "task"?, "ts_ms", "tool": {"kind", "chapter"?},
"process", "duration_s", "target"?}. The optional target ({"doc", "term"|"image"})
marks click events so the history views can be replayed from the log alone.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .taxonomy import ToolId


class InvalidEvent(Exception):
    """An event record does not match the wire format."""


class TimestampRegression(Exception):
    """An appended event is older than the session's latest event."""


@dataclass(frozen=True)
class EventTarget:
    doc: str
    term: str | None = None
    image: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"doc": self.doc}
        if self.term is not None:
            out["term"] = self.term
        if self.image is not None:
            out["image"] = self.image
        return out


@dataclass(frozen=True)
class InteractionEvent:
    session: str
    ts_ms: int
    tool: ToolId
    process: str
    duration_s: float
    task: str | None = None
    target: EventTarget | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "session": self.session,
            "ts_ms": self.ts_ms,
            "tool": self.tool.to_dict(),
            "process": self.process,
            "duration_s": self.duration_s,
        }
        if self.task is not None:
            out["task"] = self.task
        if self.target is not None:
            out["target"] = self.target.to_dict()
        return out


def _expect_str(data: Mapping, key: str, optional: bool = False) -> str | None:
    value = data.get(key)
    if value is None and optional:
        return None
    if not isinstance(value, str) or not value:
        raise InvalidEvent(f"{key!r} must be a non-empty string, got {value!r}")
    return value


def _parse_tool(raw: object) -> ToolId:
    if not isinstance(raw, Mapping):
        raise InvalidEvent(f"'tool' must be an object, got {raw!r}")
    kind = raw.get("kind")
    if not isinstance(kind, str) or not kind:
        raise InvalidEvent(f"'tool.kind' must be a non-empty string, got {kind!r}")
    chapter = raw.get("chapter")
    if chapter is not None and (not isinstance(chapter, int) or isinstance(chapter, bool) or chapter < 1):
        raise InvalidEvent(f"'tool.chapter' must be a positive integer, got {chapter!r}")
    return ToolId(kind=kind, chapter=chapter)


def _parse_target(raw: object) -> EventTarget | None:
    if raw is None:
        return None
    if not isinstance(raw, Mapping):
        raise InvalidEvent(f"'target' must be an object, got {raw!r}")
    doc = raw.get("doc")
    if not isinstance(doc, str) or not doc:
        raise InvalidEvent("'target.doc' must be a non-empty string")
    term = raw.get("term")
    image = raw.get("image")
    if term is not None and image is not None:
        raise InvalidEvent("'target' may carry 'term' or 'image', not both")
    if term is None and image is None:
        raise InvalidEvent("'target' needs a 'term' or an 'image'")
    unknown = set(raw) - {"doc", "term", "image"}
    if unknown:
        raise InvalidEvent(f"unknown target keys: {sorted(unknown)}")
    for key, value in (("term", term), ("image", image)):
        if value is not None and (not isinstance(value, str) or not value):
            raise InvalidEvent(f"'target.{key}' must be a non-empty string")
    return EventTarget(doc=doc, term=term, image=image)


def event_from_dict(data: Mapping) -> InteractionEvent:
    if not isinstance(data, Mapping):
        raise InvalidEvent(f"event must be an object, got {data!r}")
    session = _expect_str(data, "session")
    ts_ms = data.get("ts_ms")
    if not isinstance(ts_ms, int) or isinstance(ts_ms, bool) or ts_ms < 0:
        raise InvalidEvent(f"'ts_ms' must be a non-negative integer, got {ts_ms!r}")
    process = _expect_str(data, "process")
    duration = data.get("duration_s")
    if isinstance(duration, bool) or not isinstance(duration, (int, float)) or duration <= 0:
        raise InvalidEvent(f"'duration_s' must be a positive number, got {duration!r}")
    unknown = set(data) - {"session", "task", "ts_ms", "tool", "process", "duration_s", "target"}
    if unknown:
        raise InvalidEvent(f"unknown event keys: {sorted(unknown)}")
    return InteractionEvent(
        session=session,
        ts_ms=ts_ms,
        tool=_parse_tool(data.get("tool")),
        process=process,
        duration_s=float(duration),
        task=_expect_str(data, "task", optional=True),
        target=_parse_target(data.get("target")),
    )


def event_from_json(line: str) -> InteractionEvent:
    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        raise InvalidEvent(f"event line is not valid JSON: {exc}") from exc
    return event_from_dict(data)


def event_to_json(event: InteractionEvent) -> str:
    return json.dumps(event.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def read_events(path: str | Path) -> list[InteractionEvent]:
    """Parse a JSONL event log; blank lines are tolerated."""
    events = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                events.append(event_from_json(line))
            except InvalidEvent as exc:
                raise InvalidEvent(f"{path}:{lineno}: {exc}") from exc
    return events


def write_events(path: str | Path, events: Iterable[InteractionEvent]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for event in events:
            handle.write(event_to_json(event) + "\n")


def append_event(path: str | Path, event: InteractionEvent) -> None:
    with open(path, "a", encoding="utf-8") as handle:
        handle.write(event_to_json(event) + "\n")
