// Full text view of one chapter. A scroll burst is coalesced into a single
// scrolling event once the view goes quiet.

import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder } from "../events.js";
import type { ApiClient } from "../api.js";
import type { FulltextPayload } from "../types.js";
import { highlight } from "./snippets.js";

const SCROLL_QUIET_MS = 500;

export interface FulltextContext {
  api: ApiClient;
  recorder: EventRecorder;
  docId: string;
}

export function renderFulltext(
  host: HTMLElement,
  payload: FulltextPayload,
  ctx: FulltextContext,
  highlightTerm = "",
): void {
  clear(host);
  const root = h("article", { class: "fulltext", "data-chapter": String(payload.chapter) });
  root.append(h("h2", {}, [`${payload.chapter}. ${payload.title}`]));
  for (const section of payload.sections) {
    const sec = h("section", {});
    sec.append(h("h3", {}, [section.heading]));
    const para = h("p", {});
    for (const sentence of section.sentences) {
      const span = h("span", { class: "sentence", "data-index": String(sentence.index) });
      span.append(...(highlightTerm ? highlight(sentence.text, highlightTerm) : [sentence.text]));
      para.append(span, " ");
    }
    sec.append(para);
    root.append(sec);
  }

  let scrollStarted = 0;
  let quietTimer: ReturnType<typeof setTimeout> | null = null;
  root.addEventListener("scroll", () => {
    if (quietTimer === null) {
      scrollStarted = Date.now();
    } else {
      clearTimeout(quietTimer);
    }
    quietTimer = setTimeout(() => {
      quietTimer = null;
      const burstS = Math.max((Date.now() - scrollStarted) / 1000, CLICK_DURATION_S);
      ctx.recorder.record({ kind: "FullText", chapter: payload.chapter }, "scrolling", burstS);
    }, SCROLL_QUIET_MS);
  });

  host.append(root);
}
