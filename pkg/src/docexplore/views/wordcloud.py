"""Word cloud input vectors and the two layout engines (spiral and list).

Glyph metrics come from a fixed monospace table (0.6 * fontSize per character,
1.2 * fontSize line height), so layouts are deterministic and independent of
any font engine. Collision handling uses plain axis-aligned integer boxes.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from ..analysis.lda import TopicModel, dominant_topic, top_terms

MIN_FONT = 12.0
MAX_FONT = 48.0
CHAR_WIDTH = 0.6   # fraction of fontSize per character
LINE_HEIGHT = 1.2  # fraction of fontSize

# Fixed qualitative palette, one slot per topic.
PALETTE = ("#4c78a8", "#f58518", "#54a24b", "#e45756", "#b279a2")

_SPIRAL_GROWTH = 2.0  # canvas units of radius per radian
_SPIRAL_STEP = 0.35   # radians per candidate position


class CanvasTooSmall(Exception):
    """The first (heaviest) word cannot be placed at all."""


@dataclass(frozen=True)
class CloudEntry:
    term: str
    weight: float
    topic_id: int
    click_count: int = 0


@dataclass(frozen=True)
class WordCloudSpec:
    entries: tuple[CloudEntry, ...]
    k: int

    def __post_init__(self):
        for e in self.entries:
            if e.weight < 0 or e.click_count < 0:
                raise ValueError(f"negative weight/click count for {e.term!r}")
            if not 0 <= e.topic_id < self.k:
                raise ValueError(f"topic id {e.topic_id} out of range for k={self.k}")
            if not e.term:
                raise ValueError("empty term in cloud spec")


@dataclass(frozen=True)
class PlacedWord:
    term: str
    box: tuple[int, int, int, int]  # x, y, w, h in canvas units
    font_size: float
    topic_id: int
    color_index: int


@dataclass(frozen=True)
class WordleLayout:
    placed: tuple[PlacedWord, ...]
    dropped: tuple[str, ...]
    canvas: tuple[int, int]


@dataclass(frozen=True)
class ListLayout:
    placed: tuple[PlacedWord, ...]
    canvas: tuple[int, int]


def build_word_cloud(
    model: TopicModel,
    terms_per_topic: int = 10,
    click_counts: Mapping[str, int] | None = None,
) -> WordCloudSpec:
    """Concatenate every topic's heaviest terms; duplicates across topics stay."""
    clicks = click_counts or {}
    entries = []
    for t in range(model.k):
        for term, weight in top_terms(model, t, terms_per_topic):
            entries.append(CloudEntry(
                term=term, weight=weight, topic_id=t,
                click_count=int(clicks.get(term, 0)),
            ))
    return WordCloudSpec(entries=tuple(entries), k=model.k)


def build_history_cloud(
    click_counts: Mapping[str, int],
    base: WordCloudSpec | None = None,
    inverted: bool = False,
) -> WordCloudSpec:
    """Cloud sized by click counts; inverted mode lists the unclicked terms instead."""
    k = base.k if base is not None else 1
    if inverted:
        if base is None:
            raise ValueError("inverted history cloud needs the base cloud spec")
        clicked = {term for term, count in click_counts.items() if count > 0}
        seen: set[str] = set()
        entries = []
        for e in base.entries:
            if e.term in clicked or e.term in seen:
                continue
            seen.add(e.term)
            entries.append(CloudEntry(term=e.term, weight=e.weight, topic_id=e.topic_id, click_count=0))
        return WordCloudSpec(entries=tuple(entries), k=k)

    topic_of: dict[str, int] = {}
    if base is not None:
        for e in sorted(base.entries, key=lambda e: (e.term, -e.weight, e.topic_id)):
            topic_of.setdefault(e.term, e.topic_id)
    entries = [
        CloudEntry(term=term, weight=float(count), topic_id=topic_of.get(term, 0), click_count=int(count))
        for term, count in sorted(click_counts.items())
        if count >= 1
    ]
    entries.sort(key=lambda e: (-e.weight, e.term))
    return WordCloudSpec(entries=tuple(entries), k=k)


def font_sizes(
    spec: WordCloudSpec,
    min_font: float = MIN_FONT,
    max_font: float = MAX_FONT,
) -> dict[str, float]:
    """Shared (term -> fontSize) mapping used identically by both layouts."""
    w_min, w_max = _weight_range(spec)
    return {
        e.term: _font_size(e.weight, w_min, w_max, min_font, max_font)
        for e in spec.entries
    }


def _weight_range(spec: WordCloudSpec) -> tuple[float, float]:
    weights = [e.weight for e in spec.entries]
    return min(weights), max(weights)


def _font_size(weight, w_min, w_max, min_font, max_font) -> float:
    if w_max == w_min:
        return (min_font + max_font) / 2.0
    return min_font + (max_font - min_font) * (weight - w_min) / (w_max - w_min)


def _glyph_box(term: str, font_size: float) -> tuple[int, int]:
    return (
        max(1, math.ceil(CHAR_WIDTH * font_size * len(term))),
        max(1, math.ceil(LINE_HEIGHT * font_size)),
    )


def _overlaps(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> bool:
    ax, ay, aw, ah = a
    bx, by, bw, bh = b
    return ax < bx + bw and bx < ax + aw and ay < by + bh and by < ay + ah


def _ordered_entries(spec: WordCloudSpec) -> list[CloudEntry]:
    return sorted(spec.entries, key=lambda e: (-e.weight, e.term, e.topic_id))


def layout_wordle(
    spec: WordCloudSpec,
    canvas: tuple[int, int] = (800, 600),
    seed: int = 0,
    min_font: float = MIN_FONT,
    max_font: float = MAX_FONT,
) -> WordleLayout:
    """Greedy spiral placement: heaviest word first, each word walks an
    Archimedean spiral out from the canvas center until its box neither
    collides with a placed box nor leaves the canvas.

    Words that find no spot are dropped and reported in the result.
    """
    if not spec.entries:
        raise ValueError("cannot lay out an empty cloud spec")
    width, height = canvas
    if width <= 0 or height <= 0:
        raise ValueError("canvas dimensions must be positive")

    w_min, w_max = _weight_range(spec)
    rng = random.Random(seed)
    cx, cy = width / 2.0, height / 2.0
    max_radius = math.hypot(width, height)

    placed: list[PlacedWord] = []
    boxes: list[tuple[int, int, int, int]] = []
    # centers and bounding radii of placed boxes, for a cheap distance prefilter
    rough: list[tuple[float, float, float]] = []
    dropped: list[str] = []

    for order, entry in enumerate(_ordered_entries(spec)):
        size = _font_size(entry.weight, w_min, w_max, min_font, max_font)
        bw, bh = _glyph_box(entry.term, size)
        spot = None
        if bw <= width and bh <= height:
            spot = _walk_spiral(bw, bh, cx, cy, width, height, max_radius,
                                rng.uniform(0.0, 2.0 * math.pi), boxes, rough)
        if spot is None:
            if order == 0:
                raise CanvasTooSmall(
                    f"word {entry.term!r} ({bw}x{bh}) does not fit on canvas {width}x{height}"
                )
            dropped.append(entry.term)
            continue
        box = (spot[0], spot[1], bw, bh)
        boxes.append(box)
        rough.append((spot[0] + bw / 2.0, spot[1] + bh / 2.0, math.hypot(bw, bh) / 2.0))
        placed.append(PlacedWord(
            term=entry.term, box=box, font_size=size,
            topic_id=entry.topic_id, color_index=entry.topic_id % len(PALETTE),
        ))

    return WordleLayout(placed=tuple(placed), dropped=tuple(dropped), canvas=(width, height))


def _walk_spiral(bw, bh, cx, cy, width, height, max_radius, theta0, boxes, rough):
    t = 0.0
    half_diag = math.hypot(bw, bh) / 2.0
    while True:
        radius = _SPIRAL_GROWTH * t
        if radius > max_radius:
            return None
        x = int(round(cx + radius * math.cos(theta0 + t) - bw / 2.0))
        y = int(round(cy + radius * math.sin(theta0 + t) - bh / 2.0))
        t += _SPIRAL_STEP
        if x < 0 or y < 0 or x + bw > width or y + bh > height:
            continue
        mx, my = x + bw / 2.0, y + bh / 2.0
        candidate = (x, y, bw, bh)
        hit = False
        for i, (ox, oy, orad) in enumerate(rough):
            dx = mx - ox
            dy = my - oy
            reach = orad + half_diag
            if dx * dx + dy * dy < reach * reach and _overlaps(candidate, boxes[i]):
                hit = True
                break
        if not hit:
            return (x, y)


def layout_list(
    spec: WordCloudSpec,
    min_font: float = MIN_FONT,
    max_font: float = MAX_FONT,
    column_gap: int = 32,
    row_gap: int = 6,
    padding: int = 16,
) -> ListLayout:
    """Alternative arrangement: one column block per topic, the topic's
    keywords stacked under each other in descending weight. Shares the exact
    fontSize mapping with the spiral layout; never overlaps by construction.
    """
    if not spec.entries:
        raise ValueError("cannot lay out an empty cloud spec")
    w_min, w_max = _weight_range(spec)

    by_topic: dict[int, list[CloudEntry]] = {}
    for entry in spec.entries:
        by_topic.setdefault(entry.topic_id, []).append(entry)

    placed: list[PlacedWord] = []
    x_cursor = padding
    total_height = 0
    for topic_id in sorted(by_topic):
        entries = sorted(by_topic[topic_id], key=lambda e: (-e.weight, e.term))
        column_width = 0
        y_cursor = padding
        for entry in entries:
            size = _font_size(entry.weight, w_min, w_max, min_font, max_font)
            bw, bh = _glyph_box(entry.term, size)
            placed.append(PlacedWord(
                term=entry.term, box=(x_cursor, y_cursor, bw, bh), font_size=size,
                topic_id=topic_id, color_index=topic_id % len(PALETTE),
            ))
            y_cursor += bh + row_gap
            column_width = max(column_width, bw)
        total_height = max(total_height, y_cursor - row_gap)
        x_cursor += column_width + column_gap

    canvas = (x_cursor - column_gap + padding, total_height + padding)
    return ListLayout(placed=tuple(placed), canvas=canvas)
