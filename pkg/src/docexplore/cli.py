"""Command line entry points: ingest documents, run the service, analyze
event logs, and export views as SVG/DOT/JSON files."""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .corpus import CorpusError, document_to_json, ingest_document
from .provenance.events import InvalidEvent, read_events
from .provenance.metrics import analysis_report
from .provenance.triples import UnorderedEvents, derive_triples
from .provenance.views import build_matrix_view, build_process_graph, process_graph_dot
from .service.config import ConfigError, load_config
from .service.store import (
    CorpusLoadFailure,
    LibraryStore,
    load_service_taxonomy,
    model_seed,
)
from .views.svg import matrix_svg, tilebar_svg, wordcloud_svg
from .views.tilebar import compute_tilebar
from .views.wordcloud import build_word_cloud, layout_list, layout_wordle


def _fail(message: str):
    raise click.ClickException(message)


def _config(config_path, **overrides):
    try:
        return load_config(config_path, overrides={
            k: v for k, v in overrides.items() if v is not None
        })
    except (ConfigError, OSError) as exc:
        _fail(str(exc))


def _dump_json(payload, out: Path | None):
    text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")


def _load_events(path: str):
    try:
        return read_events(path)
    except (InvalidEvent, OSError) as exc:
        _fail(str(exc))


def _library(config):
    try:
        return LibraryStore.from_directory(config)
    except CorpusLoadFailure as exc:
        _fail(str(exc))


@click.group()
def main():
    """Explore health documents and analyze interaction logs."""


@main.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default="library",
              show_default=True, help="Directory the normalized document is written to.")
def ingest(source, out_dir):
    """Validate SOURCE (a document JSON file) and store its normalized form."""
    try:
        document = ingest_document(source)
    except CorpusError as exc:
        _fail(f"{source}: {exc}")
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"{document.id}.json"
    target.write_text(document_to_json(document), encoding="utf-8")
    sentences = sum(
        len(section.sentences)
        for chapter in document.chapters
        for section in chapter.sections
    )
    click.echo(
        f"ingested {document.id!r}: {len(document.chapters)} chapters, "
        f"{sentences} sentences -> {target}"
    )


@main.command()
@click.option("--library", "library_dir", type=click.Path(file_okay=False), default=None,
              help="Directory of ingested document JSON files.")
@click.option("--port", type=int, default=None, help="Port to listen on.")
@click.option("--host", default=None, help="Interface to bind.")
@click.option("--seed", type=int, default=None, help="Topic model seed.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="YAML config file.")
def serve(library_dir, port, host, seed, config_path):
    """Run the HTTP service (blocks until interrupted)."""
    import uvicorn

    from .service.app import create_app

    config = _config(config_path, library_dir=library_dir, port=port, host=host, seed=seed)
    if not config.library_dir:
        _fail("no library configured: pass --library or set library_dir in the config")
    try:
        app = create_app(config)
    except CorpusLoadFailure as exc:
        _fail(str(exc))
    click.echo(f"serving {len(app.state.library.documents)} document(s) "
               f"on http://{config.host}:{config.port}", err=True)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")


@main.command()
@click.argument("events_path", metavar="EVENTS", type=click.Path(exists=True, dir_okay=False))
@click.option("--min-duration", type=float, default=None,
              help="Drop events shorter than this many seconds (default 1.0).")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the metrics JSON here instead of stdout.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="YAML config file.")
def analyze(events_path, min_duration, out, config_path):
    """Compute interaction metrics for a JSONL event log."""
    config = _config(config_path, min_duration_s=min_duration)
    events = _load_events(events_path)
    try:
        report = analysis_report(events, config.min_duration_s)
    except UnorderedEvents as exc:
        _fail(str(exc))
    _dump_json(report, Path(out) if out else None)


@main.group()
def export():
    """Write views to standalone SVG/DOT/JSON files."""


def _write_svg(path: str, markup: str):
    Path(path).write_text(markup, encoding="utf-8")
    click.echo(f"wrote {path}")


@export.command("wordcloud")
@click.option("--library", "library_dir", type=click.Path(exists=True, file_okay=False), required=True)
@click.option("--doc", "doc_id", required=True, help="Document id.")
@click.option("--chapter", type=int, required=True, help="Chapter number.")
@click.option("--layout", type=click.Choice(["wordle", "list"]), default="wordle", show_default=True)
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="SVG output path.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None,
              help="Also write the layout as JSON.")
@click.option("--seed", type=int, default=None, help="Topic model / layout seed.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def export_wordcloud(library_dir, doc_id, chapter, layout, out, json_out, seed, config_path):
    """Render a chapter word cloud."""
    config = _config(config_path, library_dir=library_dir, seed=seed)
    store = _library(config)
    try:
        model = store.model(doc_id, chapter)
    except KeyError:
        _fail(f"no chapter {chapter} in document {doc_id!r}")
    spec = build_word_cloud(model, terms_per_topic=config.terms_per_topic)
    if not spec.entries:
        _fail(f"chapter {chapter} of {doc_id!r} has no cloud terms")
    if layout == "list":
        laid = layout_list(spec, min_font=config.min_font, max_font=config.max_font)
        rendered = wordcloud_svg(laid)
    else:
        laid = layout_wordle(
            spec,
            canvas=(config.canvas_width, config.canvas_height),
            seed=model_seed(config.seed, doc_id, chapter),
            min_font=config.min_font,
            max_font=config.max_font,
        )
        rendered = wordcloud_svg(laid)
    _write_svg(out, rendered)
    if json_out:
        placed = [
            {"term": w.term, "box": list(w.box), "fontSize": w.font_size,
             "topic": w.topic_id, "colorIndex": w.color_index}
            for w in laid.placed
        ]
        _dump_json({"canvas": list(laid.canvas), "placed": placed,
                    "dropped": list(getattr(laid, "dropped", ()))}, Path(json_out))


@export.command("tilebar")
@click.option("--library", "library_dir", type=click.Path(exists=True, file_okay=False), required=True)
@click.option("--doc", "doc_id", required=True, help="Document id.")
@click.option("--term", required=True, help="Query term.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="SVG output path.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def export_tilebar(library_dir, doc_id, term, out, json_out, config_path):
    """Render a term distribution grid."""
    config = _config(config_path, library_dir=library_dir)
    store = _library(config)
    try:
        document = store.documents[doc_id]
    except KeyError:
        _fail(f"unknown document {doc_id!r}")
    grid = compute_tilebar(document, term, store.pipeline, chunk_size=config.chunk_size)
    _write_svg(out, tilebar_svg(grid))
    if json_out:
        _dump_json(grid.to_dict(), Path(json_out))


@export.command("graph")
@click.argument("events_path", metavar="EVENTS", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="DOT output path.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None)
@click.option("--min-duration", type=float, default=None)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def export_graph(events_path, out, json_out, min_duration, config_path):
    """Render the process switching graph of an event log."""
    config = _config(config_path, min_duration_s=min_duration)
    events = _load_events(events_path)
    try:
        triples = derive_triples(events, config.min_duration_s)
    except UnorderedEvents as exc:
        _fail(str(exc))
    graph = build_process_graph(triples)
    Path(out).write_text(process_graph_dot(graph), encoding="utf-8")
    click.echo(f"wrote {out}")
    if json_out:
        _dump_json(graph.to_dict(), Path(json_out))


@export.command("matrix")
@click.argument("events_path", metavar="EVENTS", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="SVG output path.")
@click.option("--json", "json_out", type=click.Path(dir_okay=False), default=None)
@click.option("--min-duration", type=float, default=None)
@click.option("--max-visible", type=int, default=None, help="Transitions drawn with alpha.")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def export_matrix(events_path, out, json_out, min_duration, max_visible, config_path):
    """Render the tool/process matrix of an event log."""
    config = _config(config_path, min_duration_s=min_duration,
                     max_visible_transitions=max_visible)
    taxonomy = load_service_taxonomy(config)
    events = _load_events(events_path)
    try:
        triples = derive_triples(events, config.min_duration_s)
        view = build_matrix_view(triples, taxonomy, config.max_visible_transitions)
    except UnorderedEvents as exc:
        _fail(str(exc))
    _write_svg(out, matrix_svg(view))
    if json_out:
        _dump_json(view.to_dict(), Path(json_out))


if __name__ == "__main__":
    sys.exit(main())
