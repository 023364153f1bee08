// Document library: a grid of cards. Hovering a card reveals its metadata
// and most-frequent-term histogram; clicking navigates to the document's TOC
// and posts the navigation event.

import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder } from "../events.js";
import type { DocumentPreview } from "../types.js";

export interface LibraryContext {
  recorder: EventRecorder;
  navigate: (route: string) => void;
}

export function renderLibrary(
  host: HTMLElement,
  previews: DocumentPreview[],
  ctx: LibraryContext,
): void {
  clear(host);
  const root = h("div", { class: "library" });
  if (previews.length === 0) {
    root.append(h("p", { class: "empty" }, ["the library is empty"]));
    host.append(root);
    return;
  }
  for (const preview of previews) {
    root.append(card(preview, ctx));
  }
  host.append(root);
}

function card(preview: DocumentPreview, ctx: LibraryContext): HTMLElement {
  const el = h("div", { class: "doc-card", "data-doc": preview.id, tabindex: "0" });
  el.append(h("h3", { class: "doc-title" }, [preview.title]));
  el.append(h("p", { class: "doc-chapters" }, [`${preview.chapters} chapters`]));

  const details = h("div", { class: "doc-details" });
  details.style.display = "none";
  const meta = h("dl", { class: "doc-meta" });
  for (const [key, value] of Object.entries(preview.metadata)) {
    meta.append(h("dt", {}, [key]), h("dd", {}, [String(value)]));
  }
  details.append(meta);
  const histogram = h("ol", { class: "doc-histogram" });
  for (const bin of preview.histogram) {
    histogram.append(
      h("li", { "data-term": bin.term, "data-count": String(bin.count) }, [
        `${bin.term} (${bin.count})`,
      ]),
    );
  }
  details.append(histogram);
  el.append(details);

  el.addEventListener("mouseenter", () => {
    details.style.display = "";
  });
  el.addEventListener("mouseleave", () => {
    details.style.display = "none";
  });
  el.addEventListener("click", () => {
    ctx.recorder.record(
      { kind: "DocumentLibrary" },
      "click on",
      CLICK_DURATION_S,
      { doc: preview.id, term: preview.title },
    );
    ctx.navigate(`#/doc/${encodeURIComponent(preview.id)}/toc`);
  });
  return el;
}
