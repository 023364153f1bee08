"""Immutable document tree: ingestion, sentence segmentation and chunking.

Input is one JSON file per document (see docs/document-schema.md). The tree
is read-only after ingestion; every downstream computation treats it as such.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .analysis.tokenizer import count_tokens

DEFAULT_CHUNK_SIZE = 200

# Words that end with a period without ending a sentence (lowercased,
# matched against the whole word in front of the punctuation mark).
DEFAULT_ABBREVIATIONS = frozenset({
    "z", "b", "bzw", "ca", "d", "h", "u", "a", "etc", "usw", "vgl",
    "ggf", "evtl", "inkl", "zzgl", "bspw", "sog", "dr", "prof", "med",
    "nr", "abb", "tab", "kap", "mio", "mrd", "o", "ä",
})

_SENTENCE_END = ".!?"
_CLOSERS = "\"'»«)”“]"


class CorpusError(Exception):
    """Base class for ingestion failures."""


class MalformedSource(CorpusError):
    """The source JSON violates the document schema."""


class EmptyDocument(CorpusError):
    """The source contains no chapters."""


class DuplicateChapterNumber(CorpusError):
    """Chapter numbers are duplicated or not contiguous from 1."""


@dataclass(frozen=True)
class Sentence:
    text: str
    index: int
    char_span: tuple[int, int]


@dataclass(frozen=True)
class Section:
    heading: str
    text: str
    sentences: tuple[Sentence, ...]


@dataclass(frozen=True)
class ImageAsset:
    id: str
    chapter_number: int
    uri: str
    caption: str | None = None
    structured: bool = False


@dataclass(frozen=True)
class Chapter:
    number: int
    title: str
    sections: tuple[Section, ...]
    images: tuple[ImageAsset, ...] = ()


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    metadata: Mapping[str, Any]
    chapters: tuple[Chapter, ...]

    def chapter(self, number: int) -> Chapter:
        for ch in self.chapters:
            if ch.number == number:
                return ch
        raise KeyError(f"no chapter {number} in document {self.id!r}")


@dataclass(frozen=True)
class TextChunk:
    chapter_number: int
    index: int
    token_span: tuple[int, int]

    @property
    def size(self) -> int:
        return self.token_span[1] - self.token_span[0]


def segment_sentences(
    text: str,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> list[Sentence]:
    """Split raw section text into sentences.

    A boundary is terminal punctuation (. ! ?) followed by whitespace and an
    uppercase letter, unless the word in front of the period is a known
    abbreviation. Sentence spans exclude surrounding whitespace, so their
    union covers exactly the non-whitespace characters of the text.
    """
    boundaries = _boundaries(text, abbreviations)
    sentences: list[Sentence] = []
    start = 0
    for end in boundaries + [len(text)]:
        raw = text[start:end]
        stripped = raw.strip()
        if stripped:
            lead = len(raw) - len(raw.lstrip())
            span = (start + lead, start + lead + len(stripped))
            sentences.append(Sentence(text=stripped, index=len(sentences), char_span=span))
        start = end
    return sentences


def _boundaries(text: str, abbreviations: frozenset[str]) -> list[int]:
    cuts = []
    i = 0
    n = len(text)
    while i < n:
        if text[i] not in _SENTENCE_END:
            i += 1
            continue
        j = i
        while j < n and text[j] in _SENTENCE_END:
            j += 1
        while j < n and text[j] in _CLOSERS:
            j += 1
        # require whitespace, then an uppercase letter
        k = j
        while k < n and text[k].isspace():
            k += 1
        if k == j or k == n or not text[k].isupper():
            i = j
            continue
        if text[i] == "." and _word_before(text, i).lower() in abbreviations:
            i = j
            continue
        cuts.append(j)
        i = j
    return cuts


def _word_before(text: str, pos: int) -> str:
    start = pos
    while start > 0 and text[start - 1].isalpha():
        start -= 1
    return text[start:pos]


def chapter_token_count(chapter: Chapter) -> int:
    return sum(count_tokens(section.text) for section in chapter.sections)


def chunk_chapter(chapter: Chapter, chunk_size: int = DEFAULT_CHUNK_SIZE) -> list[TextChunk]:
    """Partition the chapter's token stream into equal-sized chunks.

    All chunks have chunk_size tokens except possibly the last one.
    """
    if chunk_size < 1:
        raise ValueError("chunk_size must be >= 1")
    total = chapter_token_count(chapter)
    chunks = []
    start = 0
    index = 0
    while start < total:
        end = min(start + chunk_size, total)
        chunks.append(TextChunk(chapter_number=chapter.number, index=index, token_span=(start, end)))
        start = end
        index += 1
    return chunks


def ingest_document(
    source: str | Path | Mapping[str, Any],
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Validate a source document and build the immutable tree.

    Accepts a path to a JSON file or an already-parsed mapping. Ingestion is
    deterministic: the same source always yields the same tree.
    """
    if isinstance(source, (str, Path)):
        try:
            raw = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise MalformedSource(f"cannot read {source}: {exc}") from exc
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise MalformedSource(f"{source}: invalid JSON: {exc}") from exc
    else:
        data = source

    if not isinstance(data, Mapping):
        raise MalformedSource("document must be a JSON object")

    doc_id = _require_str(data, "id")
    title = _require_str(data, "title")
    metadata = data.get("metadata", {})
    if not isinstance(metadata, Mapping):
        raise MalformedSource("metadata must be an object")

    raw_chapters = data.get("chapters")
    if raw_chapters is None or not isinstance(raw_chapters, list):
        raise MalformedSource("chapters must be a list")
    if not raw_chapters:
        raise EmptyDocument(f"document {doc_id!r} has no chapters")

    chapters = []
    for pos, raw_ch in enumerate(raw_chapters):
        chapters.append(_ingest_chapter(raw_ch, pos, abbreviations))

    numbers = [ch.number for ch in chapters]
    if numbers != list(range(1, len(numbers) + 1)):
        raise DuplicateChapterNumber(
            f"chapter numbers must be contiguous starting at 1, got {numbers}"
        )

    return Document(id=doc_id, title=title, metadata=dict(metadata), chapters=tuple(chapters))


def _ingest_chapter(raw: Any, pos: int, abbreviations: frozenset[str]) -> Chapter:
    if not isinstance(raw, Mapping):
        raise MalformedSource(f"chapter #{pos} must be an object")
    number = raw.get("number")
    if not isinstance(number, int) or isinstance(number, bool) or number < 1:
        raise MalformedSource(f"chapter #{pos}: number must be a positive integer")
    title = _require_str(raw, "title", f"chapter {number}")

    raw_sections = raw.get("sections")
    if not isinstance(raw_sections, list) or not raw_sections:
        raise MalformedSource(f"chapter {number}: sections must be a non-empty list")
    sections = []
    for s_pos, raw_sec in enumerate(raw_sections):
        if not isinstance(raw_sec, Mapping):
            raise MalformedSource(f"chapter {number} section #{s_pos} must be an object")
        heading = _require_str(raw_sec, "heading", f"chapter {number} section #{s_pos}")
        text = raw_sec.get("text", "")
        if not isinstance(text, str):
            raise MalformedSource(f"chapter {number} section {heading!r}: text must be a string")
        sentences = tuple(segment_sentences(text, abbreviations))
        sections.append(Section(heading=heading, text=text, sentences=sentences))

    images = []
    for i_pos, raw_img in enumerate(raw.get("images", [])):
        if not isinstance(raw_img, Mapping):
            raise MalformedSource(f"chapter {number} image #{i_pos} must be an object")
        image_id = _require_str(raw_img, "id", f"chapter {number} image #{i_pos}")
        uri = _require_str(raw_img, "uri", f"image {image_id!r}")
        caption = raw_img.get("caption")
        if caption is not None and not isinstance(caption, str):
            raise MalformedSource(f"image {image_id!r}: caption must be a string")
        structured = raw_img.get("structured", False)
        if not isinstance(structured, bool):
            raise MalformedSource(f"image {image_id!r}: structured must be a boolean")
        if structured and not caption:
            raise MalformedSource(f"image {image_id!r}: structured images need a caption")
        images.append(ImageAsset(
            id=image_id, chapter_number=number, uri=uri,
            caption=caption, structured=structured,
        ))

    return Chapter(number=number, title=title, sections=tuple(sections), images=tuple(images))


def _require_str(data: Mapping[str, Any], key: str, where: str = "document") -> str:
    value = data.get(key)
    if not isinstance(value, str) or not value:
        raise MalformedSource(f"{where}: {key!r} must be a non-empty string")
    return value


def document_to_dict(doc: Document) -> dict[str, Any]:
    """Canonical serialized form; re-ingesting it reproduces the tree."""
    return {
        "id": doc.id,
        "title": doc.title,
        "metadata": dict(doc.metadata),
        "chapters": [
            {
                "number": ch.number,
                "title": ch.title,
                "sections": [
                    {"heading": sec.heading, "text": sec.text} for sec in ch.sections
                ],
                "images": [
                    _image_to_dict(img) for img in ch.images
                ],
            }
            for ch in doc.chapters
        ],
    }


def _image_to_dict(img: ImageAsset) -> dict[str, Any]:
    out: dict[str, Any] = {"id": img.id, "uri": img.uri, "structured": img.structured}
    if img.caption is not None:
        out["caption"] = img.caption
    return out


def document_to_json(doc: Document) -> str:
    return json.dumps(document_to_dict(doc), ensure_ascii=False, sort_keys=True, indent=2) + "\n"
