// History word cloud: explored terms weighted by click count, or the
// inverted cloud of not-yet-clicked keywords. Rendering reuses the shared
// layout payload shape.

import type { ApiClient } from "../api.js";
import { clear, h } from "../dom.js";
import type { CloudPayload } from "../types.js";
import { PALETTE } from "./wordcloud.js";

export async function renderHistoryCloud(
  host: HTMLElement,
  api: ApiClient,
  docId: string,
  chapter: number,
  session: string,
  mode: "explored" | "unexplored" = "explored",
): Promise<void> {
  const payload: CloudPayload = await api.historycloud(docId, chapter, session, mode);
  clear(host);
  const root = h("div", {
    class: "historycloud",
    "data-chapter": String(chapter),
    "data-mode": mode,
  });
  if (!payload.layout || payload.layout.placed.length === 0) {
    root.append(h("p", { class: "empty" }, [
      mode === "explored" ? "nothing explored yet" : "everything explored",
    ]));
    host.append(root);
    return;
  }
  const [cw, ch] = payload.layout.canvas;
  const canvas = h("div", { class: "cloud-canvas" });
  canvas.style.position = "relative";
  canvas.style.width = `${cw}px`;
  canvas.style.height = `${ch}px`;
  const clicksByTerm = new Map(payload.entries.map((e) => [e.term, e.clicks]));
  for (const word of payload.layout.placed) {
    const el = h("span", {
      class: "cloud-word",
      "data-term": word.term,
      "data-clicks": String(clicksByTerm.get(word.term) ?? 0),
    }, [word.term]);
    el.style.position = "absolute";
    el.style.left = `${word.box[0]}px`;
    el.style.top = `${word.box[1]}px`;
    el.style.fontSize = `${word.fontSize}px`;
    el.style.color = PALETTE[word.colorIndex % PALETTE.length];
    canvas.append(el);
  }
  root.append(canvas);
  host.append(root);
}
