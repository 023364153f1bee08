"""Standalone SVG renderings of the word cloud, the TileBar grid, and the
provenance matrix. Output is plain markup with no external references, so
the files open directly in a browser."""
from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

from ..provenance.views import MatrixView
from .tilebar import TileBarGrid
from .wordcloud import PALETTE, WordleLayout

TILE = 14          # tilebar cell edge length
TILE_GAP = 2
LABEL_WIDTH = 180  # left gutter for row labels

# sequential blues for tilebar intensity, light to dark; zero stays gray
TILE_SCALE = ("#deebf7", "#9ecae1", "#4292c6", "#08519c")
TILE_ZERO = "#e8e8e8"


def _header(width: int, height: int) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace">'
    )


def wordcloud_svg(layout: WordleLayout) -> str:
    width, height = layout.canvas
    parts = [_header(width, height)]
    parts.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    for word in layout.placed:
        x, y, _w, h = word.box
        color = PALETTE[word.color_index]
        baseline = y + round(0.85 * h)
        parts.append(
            f'<text x="{x}" y="{baseline}" font-size="{word.font_size:.2f}" '
            f'fill="{color}">{escape(word.term)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _tile_color(count: int, max_count: int) -> str:
    if count <= 0:
        return TILE_ZERO
    if max_count <= 1:
        return TILE_SCALE[-1]
    share = (count - 1) / (max_count - 1)
    return TILE_SCALE[min(len(TILE_SCALE) - 1, int(share * len(TILE_SCALE)))]


def tilebar_svg(grid: TileBarGrid) -> str:
    row_pitch = TILE + TILE_GAP * 3
    max_cols = max((len(r.counts) for r in grid.rows), default=0)
    width = LABEL_WIDTH + max_cols * (TILE + TILE_GAP) + TILE_GAP
    height = len(grid.rows) * row_pitch + 30
    parts = [_header(width, height)]
    parts.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    parts.append(f'<text x="4" y="16" font-size="13">{escape(grid.term)}</text>')
    for i, row in enumerate(grid.rows):
        y = 30 + i * row_pitch
        label = f"{row.chapter_number}. {row.chapter_title}"
        parts.append(
            f'<text x="4" y="{y + TILE - 2}" font-size="11">{escape(label[:24])}</text>'
        )
        for j, count in enumerate(row.counts):
            x = LABEL_WIDTH + j * (TILE + TILE_GAP)
            color = _tile_color(count, grid.max_count)
            parts.append(
                f'<rect x="{x}" y="{y}" width="{TILE}" height="{TILE}" '
                f'fill="{color}"><title>{count}</title></rect>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def matrix_svg(view: MatrixView, cell_size: int = 26, gutter: int = 150) -> str:
    rows = {tool: i for i, tool in enumerate(view.rows)}
    cols = {proc: j for j, proc in enumerate(view.cols)}
    width = gutter + len(cols) * cell_size + 10
    height = gutter + len(rows) * cell_size + 10
    max_duration = max((c.duration_s for c in view.cells), default=0.0)

    parts = [_header(width, height)]
    parts.append(f'<rect width="{width}" height="{height}" fill="white"/>')
    for proc, j in cols.items():
        x = gutter + j * cell_size + cell_size // 2
        parts.append(
            f'<text x="{x}" y="{gutter - 6}" font-size="10" text-anchor="start" '
            f'transform="rotate(-60 {x} {gutter - 6})">{escape(proc)}</text>'
        )
    for tool, i in rows.items():
        y = gutter + i * cell_size + cell_size - 8
        parts.append(f'<text x="4" y="{y}" font-size="11">{escape(tool.label)}</text>')
    for cell in view.cells:
        x = gutter + cols[cell.process] * cell_size
        y = gutter + rows[cell.tool] * cell_size
        share = cell.duration_s / max_duration if max_duration > 0 else 0.0
        shade = int(235 - 160 * share)
        parts.append(
            f'<rect x="{x}" y="{y}" width="{cell_size - 2}" height="{cell_size - 2}" '
            f'fill="rgb({shade},{shade},255)">'
            f'<title>{quoteattr(cell.tool.label)[1:-1]} / {escape(cell.process)}: '
            f'{cell.duration_s:.1f}s, {len(cell.triples)} triple(s)</title></rect>'
        )
    for tr in view.transitions:
        x1 = gutter + cols[tr.src_process] * cell_size + cell_size // 2
        y1 = gutter + rows[tr.src_tool] * cell_size + cell_size // 2
        x2 = gutter + cols[tr.tar_process] * cell_size + cell_size // 2
        y2 = gutter + rows[tr.tar_tool] * cell_size + cell_size // 2
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#d62728" '
            f'stroke-width="2" opacity="{tr.alpha:.3f}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
