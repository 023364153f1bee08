"""Term distribution grid tests.

The oracle re-counts term occurrences by scanning every chapter's token
stream directly, without going through the grid code.
"""

from __future__ import annotations

import math

import pytest

from docexplore.analysis import Pipeline
from docexplore.corpus import Document, chapter_token_count
from docexplore.views import compute_tilebar

TERMS = ["Insulin", "Blutzucker", "Werte", "Bewegung", "Arzt", "Diabetes", "Zelle"]


def scan_count(doc: Document, pipeline: Pipeline, term: str) -> int:
    lemma = pipeline.canonical_lemma(term)
    total = 0
    for chap in doc.chapters:
        total += sum(
            1 for t in pipeline.chapter_tokens(doc, chap) if t.lemma == lemma
        )
    return total


class TestGridShape:
    def test_one_row_per_chapter(self, fixture_doc: Document, pipeline: Pipeline):
        grid = compute_tilebar(fixture_doc, "Insulin", pipeline)
        assert len(grid.rows) == 7
        assert [r.chapter_number for r in grid.rows] == [1, 2, 3, 4, 5, 6, 7]

    def test_cell_count_is_ceil_of_tokens_over_chunk(
        self, fixture_doc: Document, pipeline: Pipeline
    ):
        for size in (50, 200, 997):
            grid = compute_tilebar(fixture_doc, "Diabetes", pipeline, chunk_size=size)
            for row in grid.rows:
                chap = fixture_doc.chapter(row.chapter_number)
                assert len(row.counts) == math.ceil(chapter_token_count(chap) / size)

    def test_chunk_size_must_be_positive(self, fixture_doc: Document, pipeline: Pipeline):
        with pytest.raises(ValueError):
            compute_tilebar(fixture_doc, "Insulin", pipeline, chunk_size=0)


class TestConservation:
    @pytest.mark.parametrize("term", TERMS)
    def test_cells_sum_to_scan_frequency(
        self, fixture_doc: Document, pipeline: Pipeline, term: str
    ):
        grid = compute_tilebar(fixture_doc, term, pipeline, chunk_size=80)
        assert grid.total == scan_count(fixture_doc, pipeline, term)

    def test_conservation_independent_of_chunk_size(
        self, fixture_doc: Document, pipeline: Pipeline
    ):
        totals = {
            size: compute_tilebar(fixture_doc, "Blutzucker", pipeline, chunk_size=size).total
            for size in (30, 80, 200, 5000)
        }
        assert len(set(totals.values())) == 1

    def test_unknown_term_gives_empty_grid(self, fixture_doc: Document, pipeline: Pipeline):
        grid = compute_tilebar(fixture_doc, "Xylophon", pipeline)
        assert grid.total == 0
        assert grid.max_count == 0
        assert len(grid.rows) == 7


class TestMatching:
    def test_query_is_lemma_aware(self, fixture_doc: Document, pipeline: Pipeline):
        # "Werte" and "Wert" are the same lemma, so both queries agree
        a = compute_tilebar(fixture_doc, "Werte", pipeline)
        b = compute_tilebar(fixture_doc, "Wert", pipeline)
        assert a.total == b.total > 0
        assert a.lemma == b.lemma == "wert"

    def test_query_is_case_insensitive(self, fixture_doc: Document, pipeline: Pipeline):
        a = compute_tilebar(fixture_doc, "insulin", pipeline)
        b = compute_tilebar(fixture_doc, "INSULIN", pipeline)
        assert a.total == b.total > 0

    def test_counts_land_in_the_right_chunk(
        self, fixture_doc: Document, pipeline: Pipeline
    ):
        size = 40
        grid = compute_tilebar(fixture_doc, "Insulin", pipeline, chunk_size=size)
        lemma = pipeline.canonical_lemma("Insulin")
        for row in grid.rows:
            chap = fixture_doc.chapter(row.chapter_number)
            expected = [0] * len(row.counts)
            for t in pipeline.chapter_tokens(fixture_doc, chap):
                if t.lemma == lemma:
                    expected[t.token_index // size] += 1
            assert list(row.counts) == expected


class TestSerialization:
    def test_to_dict_shape(self, fixture_doc: Document, pipeline: Pipeline):
        grid = compute_tilebar(fixture_doc, "Insulin", pipeline, chunk_size=100)
        d = grid.to_dict()
        assert d["term"] == "Insulin"
        assert d["lemma"] == "insulin"
        assert d["chunkSize"] == 100
        assert d["maxCount"] == grid.max_count
        assert len(d["rows"]) == 7
        row = d["rows"][0]
        assert set(row) == {"chapter", "title", "counts"}

    def test_max_count_is_grid_maximum(self, fixture_doc: Document, pipeline: Pipeline):
        grid = compute_tilebar(fixture_doc, "Blutzucker", pipeline, chunk_size=60)
        assert grid.max_count == max(max(r.counts) for r in grid.rows)
