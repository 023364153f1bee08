// Interactive table of contents: one block per chapter that expands into
// the chapter's word cloud, image slider and history cloud.

import type { ApiClient } from "../api.js";
import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder } from "../events.js";
import { FetchGate, ViewState } from "../state.js";
import type { DocumentDetail } from "../types.js";
import { renderHistoryCloud } from "./history.js";
import { renderImageSlider } from "./imageslider.js";
import { renderWordCloud } from "./wordcloud.js";

export interface TocContext {
  api: ApiClient;
  recorder: EventRecorder;
  state: ViewState;
  gate: FetchGate;
  snippetsHost: HTMLElement;
}

export function renderToc(host: HTMLElement, doc: DocumentDetail, ctx: TocContext): void {
  clear(host);
  const root = h("div", { class: "toc", "data-doc": doc.id });
  root.append(h("h1", {}, [doc.title]));
  for (const chapter of doc.chapters) {
    const block = h("section", { class: "toc-chapter", "data-chapter": String(chapter.number) });
    const title = h("button", { class: "toc-title" }, [`${chapter.number}. ${chapter.title}`]);
    const body = h("div", { class: "toc-body" });
    body.style.display = "none";

    title.addEventListener("click", () => {
      const expanding = !ctx.state.expandedChapters.has(chapter.number);
      ctx.recorder.record(
        { kind: "TOC" },
        expanding ? "expanding" : "collapsing",
        CLICK_DURATION_S,
        { doc: doc.id, term: chapter.title },
      );
      if (!expanding) {
        ctx.state.expandedChapters.delete(chapter.number);
        body.style.display = "none";
        return;
      }
      ctx.state.expandedChapters.add(chapter.number);
      body.style.display = "";
      mountChapter(body, doc.id, chapter.number, ctx);
    });

    block.append(title, body);
    root.append(block);
  }
  host.append(root);
}

function mountChapter(body: HTMLElement, docId: string, chapter: number, ctx: TocContext): void {
  clear(body);
  const cloudHost = h("div", { class: "chapter-cloud" });
  const sliderHost = h("div", { class: "chapter-images" });
  const historyHost = h("div", { class: "chapter-history" });
  body.append(cloudHost, sliderHost, historyHost);

  void ctx.gate.run(
    `wordcloud:${docId}:${chapter}`,
    () => ctx.api.wordcloud(docId, chapter),
    (payload) => {
      if (ctx.state.activeTopics.size === 0) {
        ctx.state.resetTopics(payload.k);
      }
      renderWordCloud(cloudHost, payload, {
        api: ctx.api,
        recorder: ctx.recorder,
        state: ctx.state,
        gate: ctx.gate,
        docId,
        snippetsHost: ctx.snippetsHost,
      });
    },
  );
  void ctx.gate.run(
    `images:${docId}:${chapter}`,
    () => ctx.api.images(docId, chapter, ctx.recorder.session),
    (payload) =>
      renderImageSlider(sliderHost, payload, {
        recorder: ctx.recorder,
        docId,
        sliderPositions: ctx.state.sliderPositions,
      }),
  );
  void renderHistoryCloud(historyHost, ctx.api, docId, chapter, ctx.recorder.session);
}
