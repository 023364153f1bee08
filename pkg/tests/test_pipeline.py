"""Text-analysis pipeline tests.

Frequency assertions are checked against a naive re-scan of the fixture
text, so the pipeline's caching and re-indexing cannot hide drift.
"""

from __future__ import annotations

from collections import Counter

from docexplore.analysis import POS_NOUN, Pipeline, filter_stopwords, noun_terms, tokenize
from docexplore.corpus import Document, chapter_token_count


class TestChapterTokens:
    def test_reindexed_across_sections(self, fixture_doc: Document, pipeline: Pipeline):
        for chap in fixture_doc.chapters:
            tokens = pipeline.chapter_tokens(fixture_doc, chap)
            assert [t.token_index for t in tokens] == list(range(len(tokens)))

    def test_length_matches_chapter_token_count(self, fixture_doc: Document, pipeline: Pipeline):
        for chap in fixture_doc.chapters:
            tokens = pipeline.chapter_tokens(fixture_doc, chap)
            assert len(tokens) == chapter_token_count(chap)

    def test_stream_is_unfiltered(self, fixture_doc: Document, pipeline: Pipeline):
        # stopwords like "und" stay in the positional stream
        chap = fixture_doc.chapter(1)
        lemmas = {t.lemma for t in pipeline.chapter_tokens(fixture_doc, chap)}
        assert "und" in lemmas

    def test_headings_not_in_stream(self, fixture_doc: Document, pipeline: Pipeline):
        # the chapter stream must equal the concatenated section bodies
        chap = fixture_doc.chapter(3)
        expected = []
        for sec in chap.sections:
            expected.extend(t.surface for t in tokenize(sec.text))
        got = [t.surface for t in pipeline.chapter_tokens(fixture_doc, chap)]
        assert got == expected

    def test_cached_and_stable(self, fixture_doc: Document, pipeline: Pipeline):
        chap = fixture_doc.chapter(2)
        assert pipeline.chapter_tokens(fixture_doc, chap) is pipeline.chapter_tokens(
            fixture_doc, chap
        )


class TestNounDocs:
    def test_one_doc_per_section(self, fixture_doc: Document, pipeline: Pipeline):
        for chap in fixture_doc.chapters:
            docs = pipeline.section_noun_docs(fixture_doc, chap)
            assert len(docs) == len(chap.sections)

    def test_only_noun_lemmas(self, fixture_doc: Document, pipeline: Pipeline):
        chap = fixture_doc.chapter(1)
        noun_lemmas = {
            t.lemma
            for t in pipeline.chapter_tokens(fixture_doc, chap)
            if t.pos == POS_NOUN
        }
        for doc in pipeline.section_noun_docs(fixture_doc, chap):
            assert set(doc) <= noun_lemmas

    def test_stopwords_removed(self, fixture_doc: Document, pipeline: Pipeline):
        for chap in fixture_doc.chapters:
            for doc in pipeline.section_noun_docs(fixture_doc, chap):
                assert not (set(doc) & pipeline.stopwords)

    def test_filter_stopwords_drops_only_stopwords(self, pipeline: Pipeline):
        tokens = pipeline.tag("Der Blutzucker und das Insulin")
        kept = filter_stopwords(tokens, pipeline.stopwords)
        assert [t.surface for t in kept] == ["Blutzucker", "Insulin"]


class TestNounCounts:
    def test_chapter_counts_match_rescan(self, fixture_doc: Document, pipeline: Pipeline):
        chap = fixture_doc.chapter(4)
        counts = pipeline.chapter_noun_counts(fixture_doc, chap)
        oracle: Counter[str] = Counter()
        for sec in chap.sections:
            for t in pipeline.tag(sec.text):
                if t.pos == POS_NOUN and t.lemma not in pipeline.stopwords:
                    oracle[t.lemma] += 1
        assert counts == dict(oracle)

    def test_document_counts_are_chapter_sums(self, fixture_doc: Document, pipeline: Pipeline):
        total = pipeline.document_noun_counts(fixture_doc)
        oracle: Counter[str] = Counter()
        for chap in fixture_doc.chapters:
            oracle.update(pipeline.chapter_noun_counts(fixture_doc, chap))
        assert total == dict(oracle)

    def test_noun_terms_counts_by_lemma(self, pipeline: Pipeline):
        tokens = pipeline.tag("Werte, Werte und der Wert")
        assert noun_terms(tokens) == {"wert": 3}
