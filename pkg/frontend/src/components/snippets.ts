// Snippet pane: every sentence matching the query term, grouped in reading
// order, with expand handles at both ends of each context window. Handles
// mirror the server's clamp: they disable at the section boundary. The
// search bar swaps the query term; a section header jumps to full text.

import type { ApiClient } from "../api.js";
import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder } from "../events.js";
import type { FulltextPayload, SnippetHit } from "../types.js";
import { renderFulltext } from "./fulltext.js";

export interface SnippetsContext {
  api: ApiClient;
  recorder: EventRecorder;
  docId: string;
}

interface HitView {
  hit: SnippetHit;
  window: [number, number];
}

export async function openSnippets(
  host: HTMLElement,
  term: string,
  chapter: number,
  ctx: SnippetsContext,
): Promise<void> {
  const payload = await ctx.api.snippets(ctx.docId, term);
  renderSnippets(host, term, chapter, payload.hits, ctx);
}

export function renderSnippets(
  host: HTMLElement,
  term: string,
  chapter: number,
  hits: SnippetHit[],
  ctx: SnippetsContext,
): void {
  clear(host);
  const root = h("div", { class: "snippets", "data-term": term });
  root.append(renderSearchbar(host, term, chapter, ctx));
  if (hits.length === 0) {
    root.append(h("p", { class: "empty" }, [`no matches for "${term}"`]));
  }
  const sentenceCache = new Map<number, FulltextPayload>();
  for (const hit of hits) {
    root.append(renderHit({ hit, window: [...hit.window] }, term, ctx, sentenceCache, host));
  }
  host.append(root);
}

function renderHit(
  view: HitView,
  term: string,
  ctx: SnippetsContext,
  sentenceCache: Map<number, FulltextPayload>,
  host: HTMLElement,
): HTMLElement {
  const { hit } = view;
  const el = h("div", {
    class: "snippet-hit",
    "data-chapter": String(hit.chapter),
    "data-sentence": String(hit.sentenceIndex),
  });

  const header = h("a", { class: "snippet-header", href: "#" }, [
    `${hit.chapter}. ${hit.chapterTitle} — ${hit.section}`,
  ]);
  header.addEventListener("click", (ev) => {
    ev.preventDefault();
    ctx.recorder.record(
      { kind: "Snippets", chapter: hit.chapter },
      "navigating",
      CLICK_DURATION_S,
      { doc: ctx.docId, term },
    );
    void ctx.api.fulltext(ctx.docId, hit.chapter).then((payload) => {
      renderFulltext(host, payload, ctx, term);
    });
  });
  el.append(header);

  const before = handleButton("before", hit.canExpandBefore);
  const after = handleButton("after", hit.canExpandAfter);
  const body = h("span", { class: "snippet-body" });
  body.append(...highlight(hit.context, term));
  el.append(before, body, after);

  const expand = async (direction: "before" | "after") => {
    const sentences = await sectionSentences(view, ctx, sentenceCache);
    const last = sentences.length - 1;
    const [lo, hi] = view.window;
    if (direction === "before" && lo > 0) {
      view.window = [lo - 1, hi];
    } else if (direction === "after" && hi < last) {
      view.window = [lo, hi + 1];
    }
    const [nlo, nhi] = view.window;
    clear(body);
    body.append(...highlight(sentences.slice(nlo, nhi + 1).join(" "), term));
    setDisabled(before, nlo === 0);
    setDisabled(after, nhi === last);
    ctx.recorder.record(
      { kind: "Snippets", chapter: hit.chapter },
      "expanding",
      CLICK_DURATION_S,
      { doc: ctx.docId, term },
    );
  };
  before.addEventListener("click", () => void expand("before"));
  after.addEventListener("click", () => void expand("after"));
  return el;
}

async function sectionSentences(
  view: HitView,
  ctx: SnippetsContext,
  cache: Map<number, FulltextPayload>,
): Promise<string[]> {
  let payload = cache.get(view.hit.chapter);
  if (!payload) {
    payload = await ctx.api.fulltext(ctx.docId, view.hit.chapter);
    cache.set(view.hit.chapter, payload);
  }
  const section = payload.sections.find((s) => s.heading === view.hit.section);
  return section ? section.sentences.map((s) => s.text) : [view.hit.sentence];
}

function handleButton(direction: "before" | "after", enabled: boolean): HTMLButtonElement {
  const el = h("button", {
    class: `snippet-handle handle-${direction}`,
    "data-direction": direction,
  }, [direction === "before" ? "⟨" : "⟩"]);
  setDisabled(el, !enabled);
  return el;
}

function setDisabled(el: HTMLButtonElement, disabled: boolean): void {
  el.disabled = disabled;
  el.setAttribute("aria-disabled", String(disabled));
}

export function highlight(text: string, term: string): (Node | string)[] {
  const out: (Node | string)[] = [];
  const needle = term.toLowerCase();
  let rest = text;
  while (rest.length > 0) {
    const at = rest.toLowerCase().indexOf(needle);
    if (at < 0) {
      out.push(rest);
      break;
    }
    if (at > 0) {
      out.push(rest.slice(0, at));
    }
    out.push(h("mark", {}, [rest.slice(at, at + term.length)]));
    rest = rest.slice(at + term.length);
  }
  return out;
}

function renderSearchbar(
  host: HTMLElement,
  term: string,
  chapter: number,
  ctx: SnippetsContext,
): HTMLElement {
  const bar = h("form", { class: "searchbar" });
  const input = h("input", { type: "search", value: term, "aria-label": "search term" });
  const go = h("button", { type: "submit" }, ["Search"]);
  bar.append(input, go);
  bar.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const next = input.value.trim();
    if (!next) {
      return;
    }
    ctx.recorder.record(
      { kind: "Searchbar" },
      "searching",
      CLICK_DURATION_S,
      { doc: ctx.docId, term: next },
    );
    void openSnippets(host, next, chapter, ctx);
  });
  return bar;
}
