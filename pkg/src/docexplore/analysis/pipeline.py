"""Term extraction pipeline: stopword filtering, lemmatization, noun counting.

The lexicon is a plain TSV dictionary (surface -> lemma -> tag). Unknown
surfaces fall back to their lowercased form with the OTHER tag, so the
pipeline degrades gracefully on vocabulary it has never seen.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import replace
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Mapping

from .tokenizer import POS_NOUN, POS_OTHER, POS_TAGS, Token, tokenize

if TYPE_CHECKING:
    from ..corpus import Chapter, Document

LexiconEntry = tuple[str, str]  # (lemma, pos)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """One lowercase term per line; blank lines and #-comments ignored."""
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        term = line.strip()
        if term and not term.startswith("#"):
            words.add(term.lower())
    return frozenset(words)


def load_lexicon(path: str | Path) -> dict[str, LexiconEntry]:
    """TSV with three columns: surface, lemma, pos. Keys are lowercased."""
    lexicon: dict[str, LexiconEntry] = {}
    for num, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{num}: expected 3 tab-separated columns")
        surface, lemma, pos = (p.strip() for p in parts)
        if pos not in POS_TAGS:
            raise ValueError(f"{path}:{num}: unknown tag {pos!r}")
        if not lemma:
            raise ValueError(f"{path}:{num}: empty lemma")
        lexicon[surface.lower()] = (lemma.lower(), pos)
    return lexicon


def _packaged(name: str) -> Path:
    return Path(str(resources.files("docexplore").joinpath("data", name)))


def default_stopwords() -> frozenset[str]:
    return load_stopwords(_packaged("stopwords_de.txt"))


def default_lexicon() -> dict[str, LexiconEntry]:
    return load_lexicon(_packaged("lexicon_de.tsv"))


def filter_stopwords(tokens: Iterable[Token], stopwords: frozenset[str]) -> list[Token]:
    """Drop tokens whose lemma is a stopword (case-insensitive), keep order."""
    return [t for t in tokens if t.lemma.lower() not in stopwords]


def lemmatize_and_tag(tokens: Iterable[Token], lexicon: Mapping[str, LexiconEntry]) -> list[Token]:
    """Fill lemma and pos from the lexicon; unknown surfaces get (lowercase, OTHER)."""
    out = []
    for token in tokens:
        entry = lexicon.get(token.surface.lower())
        if entry is None:
            out.append(replace(token, lemma=token.surface.lower(), pos=POS_OTHER))
        else:
            out.append(replace(token, lemma=entry[0], pos=entry[1]))
    return out


def noun_terms(tokens: Iterable[Token]) -> dict[str, int]:
    """Raw noun frequencies keyed by lemma."""
    counts = Counter(t.lemma for t in tokens if t.pos == POS_NOUN)
    return dict(counts)


class Pipeline:
    """Bundles stopwords + lexicon and caches per-chapter token streams.

    Documents are immutable after ingestion, so caching on
    (document id, chapter number) is safe.
    """

    def __init__(
        self,
        stopwords: frozenset[str] | None = None,
        lexicon: Mapping[str, LexiconEntry] | None = None,
    ):
        self.stopwords = default_stopwords() if stopwords is None else stopwords
        self.lexicon = default_lexicon() if lexicon is None else dict(lexicon)
        self._chapter_tokens: dict[tuple[str, int], list[Token]] = {}

    def tag(self, text: str) -> list[Token]:
        return lemmatize_and_tag(tokenize(text), self.lexicon)

    def canonical_lemma(self, term: str) -> str:
        """The lemma a query term is matched under (lemma-aware, case-insensitive)."""
        entry = self.lexicon.get(term.lower())
        return entry[0] if entry else term.lower()

    def chapter_tokens(self, doc: Document, chapter: Chapter) -> list[Token]:
        """Tagged tokens of the chapter's full token stream (sections in order)."""
        key = (doc.id, chapter.number)
        cached = self._chapter_tokens.get(key)
        if cached is None:
            tokens: list[Token] = []
            for section in chapter.sections:
                for token in self.tag(section.text):
                    tokens.append(replace(token, token_index=len(tokens)))
            cached = tokens
            self._chapter_tokens[key] = cached
        return cached

    def section_noun_docs(self, doc: Document, chapter: Chapter) -> list[list[str]]:
        """Per-section noun lemma lists, the topic model's input documents."""
        docs = []
        for section in chapter.sections:
            tagged = filter_stopwords(self.tag(section.text), self.stopwords)
            docs.append([t.lemma for t in tagged if t.pos == POS_NOUN])
        return docs

    def chapter_noun_counts(self, doc: Document, chapter: Chapter) -> dict[str, int]:
        tokens = filter_stopwords(self.chapter_tokens(doc, chapter), self.stopwords)
        return noun_terms(tokens)

    def document_noun_counts(self, doc: Document) -> dict[str, int]:
        total: Counter[str] = Counter()
        for chapter in doc.chapters:
            total.update(self.chapter_noun_counts(doc, chapter))
        return dict(total)
