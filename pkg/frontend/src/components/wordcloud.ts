// Word cloud with topic bar. Five toggle buttons control per-topic word
// visibility; hovering a word mounts its TileBar above the cloud (the hover
// event is posted only after the dwell threshold); clicking a word opens the
// snippet pane and posts exactly one click event.

import type { ApiClient } from "../api.js";
import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder, HoverTimer } from "../events.js";
import { FetchGate, ViewState } from "../state.js";
import type { CloudPayload } from "../types.js";
import { renderTileBar } from "./tilebar.js";
import { openSnippets } from "./snippets.js";

export const PALETTE = ["#4c78a8", "#f58518", "#54a24b", "#e45756", "#b279a2"];

export interface WordCloudContext {
  api: ApiClient;
  recorder: EventRecorder;
  state: ViewState;
  gate: FetchGate;
  docId: string;
  snippetsHost: HTMLElement;
}

export function renderWordCloud(
  host: HTMLElement,
  payload: CloudPayload,
  ctx: WordCloudContext,
): void {
  clear(host);
  const chapter = payload.chapter;
  const root = h("div", { class: "wordcloud", "data-chapter": String(chapter) });
  const tilebarHost = h("div", { class: "tilebar-host" });
  root.append(renderTopicBar(payload, ctx, chapter, root), tilebarHost);

  const cloud = h("div", { class: "cloud-canvas" });
  if (payload.layout) {
    const [cw, ch] = payload.layout.canvas;
    cloud.style.position = "relative";
    cloud.style.width = `${cw}px`;
    cloud.style.height = `${ch}px`;
    for (const word of payload.layout.placed) {
      cloud.append(makeWord(word.term, word.topic, word.colorIndex, word.fontSize, word.box, ctx, chapter, tilebarHost));
    }
  } else {
    cloud.append(h("p", { class: "empty" }, ["no keywords for this chapter"]));
  }
  root.append(cloud);
  host.append(root);
  applyTopicVisibility(root, ctx.state.activeTopics);
}

function makeWord(
  term: string,
  topic: number,
  colorIndex: number,
  fontSize: number,
  box: [number, number, number, number],
  ctx: WordCloudContext,
  chapter: number,
  tilebarHost: HTMLElement,
): HTMLElement {
  const [x, y] = box;
  const el = h("span", {
    class: "cloud-word",
    "data-term": term,
    "data-topic": String(topic),
  }, [term]);
  el.style.position = "absolute";
  el.style.left = `${x}px`;
  el.style.top = `${y}px`;
  el.style.fontSize = `${fontSize}px`;
  el.style.color = PALETTE[colorIndex % PALETTE.length];

  const hover = new HoverTimer((dwellMs) => {
    ctx.recorder.record(
      { kind: "WordCloud", chapter },
      "hovering",
      dwellMs / 1000,
      { doc: ctx.docId, term },
    );
  });
  el.addEventListener("mouseenter", () => {
    hover.enter();
    ctx.state.hoveredTerm = term;
    void ctx.gate.run(
      `tilebar:${chapter}`,
      () => ctx.api.tilebar(ctx.docId, term),
      (grid) => renderTileBar(tilebarHost, grid),
    );
  });
  el.addEventListener("mouseleave", () => {
    hover.leave();
    if (ctx.state.hoveredTerm === term) {
      ctx.state.hoveredTerm = null;
    }
  });
  el.addEventListener("click", () => {
    ctx.recorder.record(
      { kind: "WordCloud", chapter },
      "click on",
      CLICK_DURATION_S,
      { doc: ctx.docId, term },
    );
    ctx.state.openSnippets = term;
    void openSnippets(ctx.snippetsHost, term, chapter, ctx);
  });
  return el;
}

function renderTopicBar(
  payload: CloudPayload,
  ctx: WordCloudContext,
  chapter: number,
  root: HTMLElement,
): HTMLElement {
  const bar = h("div", { class: "topicbar", role: "toolbar" });
  for (let topic = 0; topic < payload.k; topic += 1) {
    const button = h("button", {
      class: "topic-toggle",
      "data-topic": String(topic),
      "aria-pressed": String(ctx.state.activeTopics.has(topic)),
    }, [`Topic ${topic + 1}`]);
    button.style.borderColor = PALETTE[topic % PALETTE.length];
    button.addEventListener("click", () => {
      ctx.state.toggleTopic(topic, payload.k);
      button.setAttribute("aria-pressed", String(ctx.state.activeTopics.has(topic)));
      applyTopicVisibility(root, ctx.state.activeTopics);
      ctx.recorder.record(
        { kind: "TopicBar", chapter },
        "click on",
        CLICK_DURATION_S,
        { doc: ctx.docId, term: `topic-${topic}` },
      );
    });
    bar.append(button);
  }
  return bar;
}

export function applyTopicVisibility(root: HTMLElement, active: Set<number>): void {
  for (const word of Array.from(root.querySelectorAll<HTMLElement>(".cloud-word"))) {
    const topic = Number(word.dataset.topic);
    word.style.display = active.has(topic) ? "" : "none";
  }
}

export function visibleWords(root: HTMLElement): string[] {
  return Array.from(root.querySelectorAll<HTMLElement>(".cloud-word"))
    .filter((el) => el.style.display !== "none")
    .map((el) => el.dataset.term ?? "");
}
