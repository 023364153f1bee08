"""In-memory library state and the per-session event log store.

The library is immutable while serving: documents are ingested and their
per-chapter topic models fitted once at startup, with a seed derived from
the service seed plus the document and chapter identity, so restarting the
service reproduces every model bit for bit.
"""
from __future__ import annotations

import threading
import zlib
from collections import Counter
from pathlib import Path

from ..analysis.lda import LdaConfig, TopicModel, fit_lda
from ..analysis.pipeline import Pipeline, default_lexicon, default_stopwords, load_lexicon, load_stopwords
from ..corpus import Chapter, CorpusError, Document, ingest_document
from ..provenance.events import (
    InteractionEvent,
    InvalidEvent,
    TimestampRegression,
    append_event,
    event_from_dict,
    read_events,
)
from ..provenance.taxonomy import Taxonomy, TaxonomyError, default_taxonomy, load_taxonomy
from ..provenance.triples import InteractionTriple, derive_triples
from .config import ServiceConfig


class UnknownDocument(KeyError):
    pass


class UnknownChapter(KeyError):
    pass


class CorpusLoadFailure(Exception):
    pass


def model_seed(base_seed: int, doc_id: str, chapter_number: int) -> int:
    """Deterministic per-chapter seed, independent of hash randomization."""
    salt = zlib.crc32(f"{doc_id}:{chapter_number}".encode("utf-8"))
    return (base_seed * 1_000_003 + salt) & 0x7FFFFFFF


def build_pipeline(config: ServiceConfig) -> Pipeline:
    stopwords = (
        load_stopwords(config.stopwords_path)
        if config.stopwords_path
        else default_stopwords()
    )
    lexicon = (
        load_lexicon(config.lexicon_path)
        if config.lexicon_path
        else default_lexicon()
    )
    return Pipeline(stopwords=stopwords, lexicon=lexicon)


class LibraryStore:
    """Documents, their topic models, and the shared text pipeline."""

    def __init__(self, config: ServiceConfig, pipeline: Pipeline | None = None):
        self.config = config
        self.pipeline = pipeline or build_pipeline(config)
        self.documents: dict[str, Document] = {}
        self.models: dict[tuple[str, int], TopicModel] = {}

    @classmethod
    def from_directory(cls, config: ServiceConfig) -> "LibraryStore":
        if not config.library_dir:
            raise CorpusLoadFailure("no library directory configured")
        root = Path(config.library_dir)
        if not root.is_dir():
            raise CorpusLoadFailure(f"library directory {root} does not exist")
        store = cls(config)
        paths = sorted(root.glob("*.json"))
        if not paths:
            raise CorpusLoadFailure(f"library directory {root} holds no .json documents")
        for path in paths:
            try:
                store.add_document(ingest_document(path))
            except CorpusError as exc:
                raise CorpusLoadFailure(f"{path}: {exc}") from exc
        return store

    def add_document(self, document: Document) -> None:
        if document.id in self.documents:
            raise CorpusLoadFailure(f"duplicate document id {document.id!r}")
        self.documents[document.id] = document
        for chapter in document.chapters:
            self.models[(document.id, chapter.number)] = self._fit(document, chapter)

    def _fit(self, document: Document, chapter: Chapter) -> TopicModel:
        docs = self.pipeline.section_noun_docs(document, chapter)
        lda_config = LdaConfig(
            k=self.config.topics,
            iterations=self.config.iterations,
            seed=model_seed(self.config.seed, document.id, chapter.number),
        )
        return fit_lda(docs, lda_config, chapter_number=chapter.number)

    def document(self, doc_id: str) -> Document:
        try:
            return self.documents[doc_id]
        except KeyError:
            raise UnknownDocument(doc_id) from None

    def chapter(self, doc_id: str, number: int) -> Chapter:
        document = self.document(doc_id)
        try:
            return document.chapter(number)
        except KeyError:
            raise UnknownChapter(f"{doc_id}:{number}") from None

    def model(self, doc_id: str, number: int) -> TopicModel:
        self.chapter(doc_id, number)
        return self.models[(doc_id, number)]


class SessionStore:
    """Append-only JSONL logs, one file per session, with replayable click counts."""

    def __init__(self, directory: str | Path, taxonomy: Taxonomy | None = None):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.taxonomy = taxonomy
        self._lock = threading.Lock()
        self._last_ts: dict[str, int] = {}

    def _path(self, session_id: str) -> Path:
        if not session_id or not all(c.isalnum() or c in "-_" for c in session_id):
            raise InvalidEvent(f"invalid session id {session_id!r}")
        return self.directory / f"{session_id}.jsonl"

    def _validate_taxonomy(self, event: InteractionEvent) -> None:
        if self.taxonomy is None:
            return
        try:
            self.taxonomy.tool(event.tool.kind, event.tool.chapter)
            self.taxonomy.process(event.process)
        except TaxonomyError as exc:
            raise InvalidEvent(str(exc)) from None

    def append(self, session_id: str, payload: dict) -> int:
        """Validate, enforce timestamp monotonicity, persist. Returns log length."""
        event = event_from_dict(payload)
        if event.session != session_id:
            raise InvalidEvent(
                f"event session {event.session!r} does not match endpoint session {session_id!r}"
            )
        self._validate_taxonomy(event)
        path = self._path(session_id)
        with self._lock:
            last = self._last_ts.get(session_id)
            if last is None and path.exists():
                existing = read_events(path)
                last = existing[-1].ts_ms if existing else None
            if last is not None and event.ts_ms < last:
                raise TimestampRegression(
                    f"ts_ms {event.ts_ms} is older than the session's latest event ({last})"
                )
            append_event(path, event)
            self._last_ts[session_id] = event.ts_ms
            return sum(1 for _ in open(path, encoding="utf-8"))

    def events(self, session_id: str) -> list[InteractionEvent]:
        path = self._path(session_id)
        if not path.exists():
            return []
        return read_events(path)

    def triples(self, session_id: str, min_duration_s: float) -> list[InteractionTriple]:
        return derive_triples(self.events(session_id), min_duration_s)

    def click_counts(
        self,
        session_id: str,
        doc_id: str,
        chapter: int | None = None,
    ) -> dict[str, Counter]:
        """Replay the log: term and image click tallies for one document,
        optionally narrowed to events on one chapter's tools."""
        terms: Counter[str] = Counter()
        images: Counter[str] = Counter()
        for event in self.events(session_id):
            target = event.target
            if target is None or target.doc != doc_id:
                continue
            if chapter is not None and event.tool.chapter != chapter:
                continue
            if target.term is not None:
                terms[target.term] += 1
            if target.image is not None:
                images[target.image] += 1
        return {"terms": terms, "images": images}


def load_service_taxonomy(config: ServiceConfig) -> Taxonomy:
    if config.taxonomy_path:
        return load_taxonomy(config.taxonomy_path)
    return default_taxonomy()
