"""Library previews: document metadata plus a most-frequent-terms histogram."""
from __future__ import annotations

from dataclasses import dataclass

from ..analysis.pipeline import Pipeline
from ..corpus import Document


@dataclass(frozen=True)
class DocumentPreview:
    document_id: str
    title: str
    metadata: dict
    chapter_count: int
    histogram: tuple[tuple[str, int], ...]  # (lemma, count), heaviest first

    def to_dict(self) -> dict:
        return {
            "id": self.document_id,
            "title": self.title,
            "metadata": dict(self.metadata),
            "chapters": self.chapter_count,
            "histogram": [{"term": t, "count": c} for t, c in self.histogram],
        }


def document_preview(document: Document, pipeline: Pipeline, top_n: int = 10) -> DocumentPreview:
    """Top noun lemmas by document-wide frequency; ties break lexicographically."""
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    counts = pipeline.document_noun_counts(document)
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return DocumentPreview(
        document_id=document.id,
        title=document.title,
        metadata=dict(document.metadata),
        chapter_count=len(document.chapters),
        histogram=tuple(ordered[:top_n]),
    )
