"""HTTP facade over the library, views, and provenance analytics.

Responses are canonical JSON (sorted keys, compact separators), so replaying
the same requests against the same corpus, seed, and session log yields
byte-identical bodies.
"""
from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response

from ..corpus import document_to_dict
from ..provenance.events import InvalidEvent, TimestampRegression
from ..provenance.metrics import analysis_report
from ..provenance.triples import UnorderedEvents
from ..provenance.views import build_matrix_view, build_process_graph
from ..views.images import rank_images
from ..views.preview import document_preview
from ..views.snippets import find_snippets
from ..views.tilebar import compute_tilebar
from ..views.wordcloud import (
    WordCloudSpec,
    build_history_cloud,
    build_word_cloud,
    layout_list,
    layout_wordle,
)
from .config import ServiceConfig
from .store import (
    LibraryStore,
    SessionStore,
    UnknownChapter,
    UnknownDocument,
    load_service_taxonomy,
    model_seed,
)


def canonical_json(payload, status_code: int = 200) -> Response:
    body = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return Response(content=body.encode("utf-8"), status_code=status_code,
                    media_type="application/json")


def _error(status: int, message: str) -> Response:
    return canonical_json({"error": message}, status_code=status)


def _layout_dict(layout) -> dict:
    return {
        "canvas": list(layout.canvas),
        "placed": [
            {
                "term": w.term,
                "box": list(w.box),
                "fontSize": w.font_size,
                "topic": w.topic_id,
                "colorIndex": w.color_index,
            }
            for w in layout.placed
        ],
        "dropped": list(getattr(layout, "dropped", ())),
    }


def _spec_dict(spec: WordCloudSpec) -> dict:
    return {
        "k": spec.k,
        "entries": [
            {
                "term": e.term,
                "weight": e.weight,
                "topic": e.topic_id,
                "clicks": e.click_count,
            }
            for e in spec.entries
        ],
    }


def create_app(
    config: ServiceConfig,
    library: LibraryStore | None = None,
    sessions: SessionStore | None = None,
) -> FastAPI:
    app = FastAPI(title="docexplore", docs_url=None, redoc_url=None)
    taxonomy = load_service_taxonomy(config)
    if library is None:
        library = LibraryStore.from_directory(config)
    if sessions is None:
        sessions = SessionStore(config.session_dir, taxonomy=taxonomy)
    app.state.config = config
    app.state.library = library
    app.state.sessions = sessions
    app.state.taxonomy = taxonomy

    @app.exception_handler(UnknownDocument)
    async def _unknown_document(request: Request, exc: UnknownDocument):
        return _error(404, f"unknown document {exc.args[0]!r}")

    @app.exception_handler(UnknownChapter)
    async def _unknown_chapter(request: Request, exc: UnknownChapter):
        return _error(404, f"unknown chapter {exc.args[0]!r}")

    @app.exception_handler(InvalidEvent)
    async def _invalid_event(request: Request, exc: InvalidEvent):
        return _error(400, str(exc))

    @app.exception_handler(TimestampRegression)
    async def _ts_regression(request: Request, exc: TimestampRegression):
        return _error(409, str(exc))

    @app.exception_handler(UnorderedEvents)
    async def _unordered(request: Request, exc: UnorderedEvents):
        return _error(409, str(exc))

    def _chapter_cloud(doc_id: str, number: int) -> WordCloudSpec:
        model = library.model(doc_id, number)
        return build_word_cloud(model, terms_per_topic=config.terms_per_topic)

    def _cloud_payload(spec: WordCloudSpec, seed: int, layout_name: str) -> dict:
        payload = _spec_dict(spec)
        if not spec.entries:
            payload["layout"] = None
            return payload
        if layout_name == "list":
            layout = layout_list(spec, min_font=config.min_font, max_font=config.max_font)
        else:
            layout = layout_wordle(
                spec,
                canvas=(config.canvas_width, config.canvas_height),
                seed=seed,
                min_font=config.min_font,
                max_font=config.max_font,
            )
        payload["layout"] = _layout_dict(layout)
        return payload

    @app.get("/documents")
    def list_documents():
        previews = [
            document_preview(doc, library.pipeline, top_n=config.terms_per_topic).to_dict()
            for _, doc in sorted(library.documents.items())
        ]
        return canonical_json(previews)

    @app.get("/documents/{doc_id}")
    def get_document(doc_id: str):
        return canonical_json(document_to_dict(library.document(doc_id)))

    @app.get("/documents/{doc_id}/chapters/{number}/wordcloud")
    def get_wordcloud(doc_id: str, number: int, layout: str = "wordle"):
        if layout not in ("wordle", "list"):
            return _error(400, f"unknown layout {layout!r}")
        spec = _chapter_cloud(doc_id, number)
        payload = _cloud_payload(spec, model_seed(config.seed, doc_id, number), layout)
        payload["chapter"] = number
        return canonical_json(payload)

    @app.get("/documents/{doc_id}/chapters/{number}/historycloud")
    def get_historycloud(
        doc_id: str,
        number: int,
        session: str = "",
        mode: str = "explored",
        layout: str = "wordle",
    ):
        if mode not in ("explored", "unexplored"):
            return _error(400, f"unknown history mode {mode!r}")
        if layout not in ("wordle", "list"):
            return _error(400, f"unknown layout {layout!r}")
        base = _chapter_cloud(doc_id, number)
        counts = (
            sessions.click_counts(session, doc_id, chapter=number)["terms"]
            if session
            else {}
        )
        spec = build_history_cloud(counts, base=base, inverted=(mode == "unexplored"))
        payload = _cloud_payload(spec, model_seed(config.seed, doc_id, number) + 1, layout)
        payload["chapter"] = number
        payload["mode"] = mode
        return canonical_json(payload)

    @app.get("/documents/{doc_id}/chapters/{number}/images")
    def get_images(doc_id: str, number: int, session: str = ""):
        chapter = library.chapter(doc_id, number)
        payload = rank_images(chapter).to_dict()
        clicked = (
            sessions.click_counts(session, doc_id)["images"] if session else {}
        )
        ranked_ids = {entry["id"] for entry in payload["images"]}
        payload["clicked"] = {
            image_id: count for image_id, count in sorted(clicked.items())
            if image_id in ranked_ids
        }
        return canonical_json(payload)

    @app.get("/documents/{doc_id}/chapters/{number}/fulltext")
    def get_fulltext(doc_id: str, number: int):
        chapter = library.chapter(doc_id, number)
        return canonical_json({
            "chapter": chapter.number,
            "title": chapter.title,
            "sections": [
                {
                    "heading": s.heading,
                    "text": s.text,
                    "sentences": [
                        {"text": sent.text, "index": sent.index, "span": list(sent.char_span)}
                        for sent in s.sentences
                    ],
                }
                for s in chapter.sections
            ],
        })

    @app.get("/documents/{doc_id}/tilebar")
    def get_tilebar(doc_id: str, term: str = ""):
        if not term.strip():
            return _error(400, "query parameter 'term' is required")
        document = library.document(doc_id)
        grid = compute_tilebar(document, term, library.pipeline, chunk_size=config.chunk_size)
        return canonical_json(grid.to_dict())

    @app.get("/documents/{doc_id}/snippets")
    def get_snippets(doc_id: str, term: str = ""):
        if not term.strip():
            return _error(400, "query parameter 'term' is required")
        document = library.document(doc_id)
        hits = find_snippets(document, term, library.pipeline)
        return canonical_json({
            "term": term,
            "hits": [hit.to_dict() for hit in hits],
        })

    @app.post("/sessions/{session_id}/events")
    async def post_event(session_id: str, request: Request):
        try:
            payload = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be a JSON object")
        # accept one event or a batch; a batch appends in order
        batch = payload if isinstance(payload, list) else [payload]
        count = len(sessions.events(session_id))
        for item in batch:
            count = sessions.append(session_id, item)
        return canonical_json({"ok": True, "events": count})

    def _session_triples(session_id: str):
        return sessions.triples(session_id, config.min_duration_s)

    @app.get("/sessions/{session_id}/provenance/metrics")
    def get_metrics(session_id: str):
        events = sessions.events(session_id)
        return canonical_json(analysis_report(events, config.min_duration_s))

    @app.get("/sessions/{session_id}/provenance/graph")
    def get_graph(session_id: str):
        graph = build_process_graph(_session_triples(session_id))
        return canonical_json(graph.to_dict())

    @app.get("/sessions/{session_id}/provenance/matrix")
    def get_matrix(session_id: str):
        view = build_matrix_view(
            _session_triples(session_id), taxonomy, config.max_visible_transitions
        )
        return canonical_json(view.to_dict())

    return app
