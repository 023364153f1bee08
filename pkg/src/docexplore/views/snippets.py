"""Query-in-context snippets with sentence-step expansion.

Every sentence whose lemmatized tokens contain the query lemma yields one
hit. A hit starts as a single-sentence window and can grow one sentence at a
time toward either end of its section; at the section boundary expansion is
a no-op rather than an error.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

from ..analysis.pipeline import Pipeline
from ..analysis.tokenizer import token_spans
from ..corpus import Document, Section

Direction = Literal["before", "after"]


@dataclass(frozen=True)
class SnippetHit:
    chapter_number: int
    chapter_title: str
    section_heading: str
    sentence_index: int
    window: tuple[int, int]  # inclusive sentence-index range currently shown
    section: Section = field(compare=False, repr=False)
    lemma: str = field(compare=False)

    @property
    def sentence_text(self) -> str:
        return self.section.sentences[self.sentence_index].text

    @property
    def context_text(self) -> str:
        lo, hi = self.window
        return " ".join(s.text for s in self.section.sentences[lo:hi + 1])

    @property
    def can_expand_before(self) -> bool:
        return self.window[0] > 0

    @property
    def can_expand_after(self) -> bool:
        return self.window[1] < len(self.section.sentences) - 1

    def to_dict(self) -> dict:
        return {
            "chapter": self.chapter_number,
            "chapterTitle": self.chapter_title,
            "section": self.section_heading,
            "sentenceIndex": self.sentence_index,
            "window": list(self.window),
            "sentence": self.sentence_text,
            "context": self.context_text,
            "canExpandBefore": self.can_expand_before,
            "canExpandAfter": self.can_expand_after,
        }


def find_snippets(document: Document, term: str, pipeline: Pipeline) -> list[SnippetHit]:
    """One hit per sentence that contains the query term (lemma match).

    Hits come back in reading order: chapters, then sections, then sentences.
    """
    if not term.strip():
        raise ValueError("query term must be non-empty")
    lemma = pipeline.canonical_lemma(term)
    hits: list[SnippetHit] = []
    for chapter in document.chapters:
        for section in chapter.sections:
            for index in sorted(_matching_sentences(section, lemma, pipeline)):
                hits.append(SnippetHit(
                    chapter_number=chapter.number,
                    chapter_title=chapter.title,
                    section_heading=section.heading,
                    sentence_index=index,
                    window=(index, index),
                    section=section,
                    lemma=lemma,
                ))
    return hits


def _matching_sentences(section: Section, lemma: str, pipeline: Pipeline) -> set[int]:
    tagged = pipeline.tag(section.text)
    spans = token_spans(section.text)
    matched: set[int] = set()
    cursor = 0
    sentences = section.sentences
    for token, (start, _end) in zip(tagged, spans):
        if token.lemma != lemma:
            continue
        while cursor < len(sentences) and start >= sentences[cursor].char_span[1]:
            cursor += 1
        if cursor < len(sentences):
            matched.add(cursor)
    return matched


def expand_snippet(hit: SnippetHit, direction: Direction) -> SnippetHit:
    """Widen the context window by one sentence; clamped at the section edge,
    so expanding an already-maximal side returns an equal hit."""
    lo, hi = hit.window
    if direction == "before":
        window = (max(0, lo - 1), hi)
    elif direction == "after":
        window = (lo, min(len(hit.section.sentences) - 1, hi + 1))
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if window == hit.window:
        return hit
    return replace(hit, window=window)
