"""Document ingestion, sentence segmentation, and chunking tests."""

from __future__ import annotations

import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from docexplore.analysis import count_tokens
from docexplore.corpus import (
    Chapter,
    Document,
    DuplicateChapterNumber,
    EmptyDocument,
    ImageAsset,
    MalformedSource,
    Section,
    chapter_token_count,
    chunk_chapter,
    document_to_json,
    ingest_document,
    segment_sentences,
)


def _minimal_doc(chapters) -> dict:
    return {"id": "d1", "title": "T", "metadata": {}, "chapters": chapters}


def _chapter(number: int, sections=None) -> dict:
    if sections is None:
        sections = [{"heading": "H", "text": "Ein Satz."}]
    return {"number": number, "title": f"K{number}", "sections": sections}


class TestIngestion:
    def test_fixture_shape(self, fixture_doc: Document):
        assert fixture_doc.id == "t2d-ratgeber"
        assert len(fixture_doc.chapters) == 7
        assert [c.number for c in fixture_doc.chapters] == [1, 2, 3, 4, 5, 6, 7]

    def test_chapter_lookup(self, fixture_doc: Document):
        assert fixture_doc.chapter(3).title == "Symptome erkennen"
        with pytest.raises(KeyError):
            fixture_doc.chapter(8)

    def test_duplicate_chapter_number_rejected(self):
        with pytest.raises(DuplicateChapterNumber):
            ingest_document(_minimal_doc([_chapter(1), _chapter(1)]))

    def test_gap_in_numbering_rejected(self):
        with pytest.raises(DuplicateChapterNumber):
            ingest_document(_minimal_doc([_chapter(1), _chapter(3)]))

    def test_out_of_order_numbering_rejected(self):
        with pytest.raises(DuplicateChapterNumber):
            ingest_document(_minimal_doc([_chapter(2), _chapter(1)]))

    def test_empty_document_rejected(self):
        with pytest.raises(EmptyDocument):
            ingest_document(_minimal_doc([]))

    def test_missing_fields_rejected(self):
        with pytest.raises(MalformedSource):
            ingest_document({"id": "d1", "chapters": [_chapter(1)]})
        with pytest.raises(MalformedSource):
            ingest_document(_minimal_doc([{"number": 1, "sections": []}]))

    def test_structured_image_requires_caption(self):
        sections = [{"heading": "H", "text": "Ein Satz."}]
        chap = {
            "number": 1,
            "title": "K1",
            "sections": sections,
            "images": [{"id": "i1", "uri": "a.png", "structured": True}],
        }
        with pytest.raises(MalformedSource):
            ingest_document(_minimal_doc([chap]))

    def test_round_trip_preserves_document(self, fixture_doc: Document):
        again = ingest_document(json.loads(document_to_json(fixture_doc)))
        assert again == fixture_doc


class TestSentences:
    def test_simple_split(self):
        sents = segment_sentences("Erster Satz. Zweiter Satz!")
        assert [s.text for s in sents] == ["Erster Satz.", "Zweiter Satz!"]

    def test_abbreviations_do_not_split(self):
        text = "Essen Sie z. B. Vollkornbrot. Trinken Sie Wasser."
        sents = segment_sentences(text)
        assert len(sents) == 2
        assert sents[0].text == "Essen Sie z. B. Vollkornbrot."

    def test_more_abbreviations(self):
        for text in (
            "Das dauert ca. zwei Wochen.",
            "Der Wert sinkt, d. h. die Therapie wirkt.",
            "Messen Sie morgens bzw. abends.",
        ):
            assert len(segment_sentences(text)) == 1

    def test_spans_are_trimmed_and_end_exclusive(self):
        text = "  Erster Satz.   Zweiter Satz?  "
        sents = segment_sentences(text)
        for s in sents:
            a, b = s.char_span
            assert text[a:b] == s.text
            assert s.text == s.text.strip()

    def test_indices_are_sequential(self):
        sents = segment_sentences("Eins. Zwei. Drei.")
        assert [s.index for s in sents] == [0, 1, 2]

    def test_question_and_exclamation_terminators(self):
        sents = segment_sentences("Was ist Diabetes? Eine Stoffwechselkrankheit!")
        assert len(sents) == 2

    @given(st.text(alphabet="abc .!?", max_size=120))
    def test_spans_always_slice_to_text(self, text: str):
        for s in segment_sentences(text):
            a, b = s.char_span
            assert text[a:b] == s.text

    def test_fixture_sentences_nonempty(self, fixture_doc: Document):
        for chap in fixture_doc.chapters:
            for sec in chap.sections:
                assert sec.sentences
                for s in sec.sentences:
                    assert sec.text[s.char_span[0] : s.char_span[1]] == s.text


class TestChunking:
    def test_cell_count_is_ceil(self, fixture_doc: Document):
        for chap in fixture_doc.chapters:
            total = chapter_token_count(chap)
            for size in (50, 200, 1000):
                chunks = chunk_chapter(chap, chunk_size=size)
                assert len(chunks) == math.ceil(total / size)

    def test_chunk_spans_tile_the_chapter(self, fixture_doc: Document):
        chap = fixture_doc.chapter(1)
        chunks = chunk_chapter(chap, chunk_size=60)
        assert sum(c.size for c in chunks) == chapter_token_count(chap)
        assert all(c.size == 60 for c in chunks[:-1])
        assert chunks[0].token_span[0] == 0
        for prev, nxt in zip(chunks, chunks[1:]):
            assert prev.token_span[1] == nxt.token_span[0]

    def test_token_count_excludes_headings(self, fixture_doc: Document):
        chap = fixture_doc.chapter(1)
        body = sum(count_tokens(sec.text) for sec in chap.sections)
        assert chapter_token_count(chap) == body

    def test_chunk_size_must_be_positive(self, fixture_doc: Document):
        with pytest.raises(ValueError):
            chunk_chapter(fixture_doc.chapter(1), chunk_size=0)


class TestImages:
    def test_fixture_image_census(self, fixture_doc: Document):
        per_chapter = [len(c.images) for c in fixture_doc.chapters]
        assert per_chapter == [2, 1, 2, 3, 2, 3, 1]

    def test_image_fields(self, fixture_doc: Document):
        img = fixture_doc.chapter(1).images[0]
        assert isinstance(img, ImageAsset)
        assert img.id == "img-1-1"
        assert img.structured and img.caption
