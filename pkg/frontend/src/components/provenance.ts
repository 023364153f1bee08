// Analyst views: the process graph (node area proportional to time spent,
// edge width proportional to transition count) and the tool/process matrix
// (cells shaded by duration, the most recent transitions drawn as arrows
// with linearly increasing alpha).

import { clear, h, svgEl } from "../dom.js";
import type { GraphPayload, MatrixPayload, MatrixTransition, ToolRef } from "../types.js";

export function toolLabel(tool: ToolRef): string {
  return tool.chapter === undefined ? tool.kind : `${tool.kind}@${tool.chapter}`;
}

// Mirror of the server's recency rule: keep the last min(maxVisible, n)
// transitions and space their alphas linearly up to 1.
export function visibleTransitions(
  transitions: readonly MatrixTransition[],
  maxVisible: number,
): MatrixTransition[] {
  if (maxVisible < 1) {
    throw new RangeError("maxVisible must be at least 1");
  }
  const m = Math.min(maxVisible, transitions.length);
  const tail = transitions.slice(transitions.length - m);
  return tail.map((t, j) => ({ ...t, alpha: (j + 1) / m }));
}

export function renderProcessGraph(host: HTMLElement, payload: GraphPayload): void {
  clear(host);
  const root = h("div", { class: "process-graph" });
  if (payload.nodes.length === 0) {
    root.append(h("p", { class: "empty" }, ["no interactions recorded"]));
    host.append(root);
    return;
  }
  const size = 420;
  const svg = svgEl("svg", {
    viewBox: `0 0 ${size} ${size}`,
    width: String(size),
    height: String(size),
    role: "img",
  });
  const cx = size / 2;
  const cy = size / 2;
  const ring = size / 2 - 70;
  const positions = new Map<string, { x: number; y: number }>();
  payload.nodes.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / payload.nodes.length - Math.PI / 2;
    positions.set(node.process, {
      x: cx + ring * Math.cos(angle),
      y: cy + ring * Math.sin(angle),
    });
  });

  const maxCount = Math.max(1, ...payload.edges.map((e) => e.count));
  for (const edge of payload.edges) {
    const from = positions.get(edge.from);
    const to = positions.get(edge.to);
    if (!from || !to) {
      continue;
    }
    const width = 1 + (3 * edge.count) / maxCount;
    if (edge.from === edge.to) {
      svg.append(svgEl("circle", {
        class: "graph-self-edge",
        cx: String(from.x),
        cy: String(from.y - 24),
        r: "14",
        fill: "none",
        stroke: "#888",
        "stroke-width": width.toFixed(2),
        "data-count": String(edge.count),
      }));
    } else {
      svg.append(svgEl("line", {
        class: "graph-edge",
        x1: String(from.x),
        y1: String(from.y),
        x2: String(to.x),
        y2: String(to.y),
        stroke: "#888",
        "stroke-width": width.toFixed(2),
        "data-count": String(edge.count),
      }));
    }
  }

  const maxDuration = Math.max(1e-9, ...payload.nodes.map((n) => n.duration_s));
  for (const node of payload.nodes) {
    const pos = positions.get(node.process)!;
    // area proportional to duration -> radius proportional to its square root
    const radius = 8 + 22 * Math.sqrt(node.duration_s / maxDuration);
    const group = svgEl("g", {
      class: "graph-node",
      "data-process": node.process,
      "data-duration": String(node.duration_s),
    });
    group.append(svgEl("circle", {
      cx: String(pos.x),
      cy: String(pos.y),
      r: radius.toFixed(2),
      fill: "#4c78a8",
      "fill-opacity": "0.85",
    }));
    const text = svgEl("text", {
      x: String(pos.x),
      y: String(pos.y + radius + 14),
      "text-anchor": "middle",
      "font-size": "12",
    });
    text.textContent = node.process;
    group.append(text);
    svg.append(group);
  }
  root.append(svg);
  host.append(root);
}

export function renderMatrix(
  host: HTMLElement,
  payload: MatrixPayload,
  maxVisible?: number,
): void {
  clear(host);
  const root = h("div", { class: "provenance-matrix" });
  if (payload.rows.length === 0) {
    root.append(h("p", { class: "empty" }, ["no interactions recorded"]));
    host.append(root);
    return;
  }

  const byKey = new Map(
    payload.cells.map((cell) => [`${toolLabel(cell.tool)}|${cell.process}`, cell]),
  );
  const maxDuration = Math.max(1e-9, ...payload.cells.map((c) => c.duration_s));

  const table = h("table", { class: "matrix-table" });
  const head = h("tr", {});
  head.append(h("th", {}, [""]));
  for (const col of payload.cols) {
    head.append(h("th", { class: "matrix-col", scope: "col" }, [col]));
  }
  table.append(head);
  for (const row of payload.rows) {
    const tr = h("tr", { "data-tool": toolLabel(row) });
    tr.append(h("th", { class: "matrix-row", scope: "row" }, [toolLabel(row)]));
    for (const col of payload.cols) {
      const cell = byKey.get(`${toolLabel(row)}|${col}`);
      const td = h("td", {
        class: "matrix-cell",
        "data-tool": toolLabel(row),
        "data-process": col,
        "data-duration": String(cell?.duration_s ?? 0),
      });
      if (cell) {
        const strength = cell.duration_s / maxDuration;
        td.style.backgroundColor = `rgba(76, 120, 168, ${strength.toFixed(3)})`;
        td.title = cell.triples
          .map((t) => `${toolLabel(t.src)} —${t.process}→ ${toolLabel(t.tar)} (${t.duration_s}s)`)
          .join("\n");
        td.textContent = cell.duration_s.toFixed(1);
      }
      tr.append(td);
    }
    table.append(tr);
  }
  root.append(table);

  const arrows = h("div", { class: "matrix-arrows" });
  const shown =
    maxVisible === undefined
      ? payload.transitions
      : visibleTransitions(payload.transitions, maxVisible);
  for (const transition of shown) {
    const arrow = h("div", {
      class: "matrix-arrow",
      "data-from": `${toolLabel(transition.from.tool)}|${transition.from.process}`,
      "data-to": `${toolLabel(transition.to.tool)}|${transition.to.process}`,
      "data-alpha": String(transition.alpha),
    });
    arrow.style.opacity = String(transition.alpha);
    arrows.append(arrow);
  }
  root.append(arrows);
  host.append(root);
}
