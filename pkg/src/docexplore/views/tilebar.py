"""Term distribution grids: one row per chapter, one cell per token chunk.

Cell values are lemma-based occurrence counts, so the grid total always
equals the document-wide count for the query term no matter how the chunk
size slices the chapters.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..analysis.pipeline import Pipeline
from ..corpus import DEFAULT_CHUNK_SIZE, Document, chunk_chapter


@dataclass(frozen=True)
class TileBarRow:
    chapter_number: int
    chapter_title: str
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class TileBarGrid:
    term: str
    lemma: str
    chunk_size: int
    rows: tuple[TileBarRow, ...]
    max_count: int

    @property
    def total(self) -> int:
        return sum(row.total for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "term": self.term,
            "lemma": self.lemma,
            "chunkSize": self.chunk_size,
            "maxCount": self.max_count,
            "total": self.total,
            "rows": [
                {
                    "chapter": row.chapter_number,
                    "title": row.chapter_title,
                    "counts": list(row.counts),
                }
                for row in self.rows
            ],
        }


def compute_tilebar(
    document: Document,
    term: str,
    pipeline: Pipeline,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> TileBarGrid:
    """Count the query term per chunk, matching on canonical lemma."""
    if chunk_size < 1:
        raise ValueError("chunk size must be >= 1")
    if not term.strip():
        raise ValueError("query term must be non-empty")
    lemma = pipeline.canonical_lemma(term)

    rows = []
    max_count = 0
    for chapter in document.chapters:
        tokens = pipeline.chapter_tokens(document, chapter)
        chunks = chunk_chapter(chapter, chunk_size)
        counts = [0] * len(chunks)
        for token in tokens:
            if token.lemma == lemma:
                counts[token.token_index // chunk_size] += 1
        if counts:
            max_count = max(max_count, max(counts))
        rows.append(TileBarRow(
            chapter_number=chapter.number,
            chapter_title=chapter.title,
            counts=tuple(counts),
        ))
    return TileBarGrid(
        term=term, lemma=lemma, chunk_size=chunk_size,
        rows=tuple(rows), max_count=max_count,
    )
