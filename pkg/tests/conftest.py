"""Shared fixtures: the 7-chapter German sample document and session logs."""

from __future__ import annotations

from pathlib import Path

import pytest

from docexplore.analysis import Pipeline
from docexplore.corpus import Document, ingest_document
from docexplore.provenance import (
    InteractionEvent,
    Taxonomy,
    default_taxonomy,
    read_events,
)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_doc() -> Document:
    return ingest_document(FIXTURES / "diabetes_ratgeber.json")


@pytest.fixture(scope="session")
def pipeline() -> Pipeline:
    return Pipeline()


@pytest.fixture(scope="session")
def taxonomy() -> Taxonomy:
    return default_taxonomy()


@pytest.fixture(scope="session")
def p08_events() -> list[InteractionEvent]:
    return read_events(FIXTURES / "session_p08.jsonl")


@pytest.fixture(scope="session")
def p12_events() -> list[InteractionEvent]:
    return read_events(FIXTURES / "session_p12.jsonl")


@pytest.fixture(scope="session")
def p01_events() -> list[InteractionEvent]:
    return read_events(FIXTURES / "session_p01.jsonl")
