// Shared test scaffolding: a fake fetch routed by URL prefix, plus canned
// payloads shaped exactly like the service responses.

import { ApiClient } from "../src/api.js";
import { EventRecorder } from "../src/events.js";
import type {
  CloudPayload,
  GraphPayload,
  ImagesPayload,
  InteractionEvent,
  MatrixPayload,
  SnippetsPayload,
  TileBarPayload,
} from "../src/types.js";

export interface RecordedCall {
  url: string;
  method: string;
  body?: unknown;
}

export interface FakeBackend {
  api: ApiClient;
  calls: RecordedCall[];
  postedEvents: InteractionEvent[];
  routes: Map<string, unknown>;
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

// Routes are matched by "METHOD pathname+search" with the longest prefix
// winning; POST /sessions/.../events is always accepted and captured.
export function fakeBackend(routes: Record<string, unknown> = {}): FakeBackend {
  const table = new Map(Object.entries(routes));
  const calls: RecordedCall[] = [];
  const postedEvents: InteractionEvent[] = [];
  const fetchFn = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ url, method, body });
    if (method === "POST" && /\/sessions\/[^/]+\/events$/.test(url)) {
      const batch = Array.isArray(body) ? body : [body];
      postedEvents.push(...(batch as InteractionEvent[]));
      return json({ ok: true, events: postedEvents.length });
    }
    let best: unknown;
    let bestLen = -1;
    for (const [prefix, payload] of table) {
      if (url.startsWith(prefix) && prefix.length > bestLen) {
        best = payload;
        bestLen = prefix.length;
      }
    }
    if (bestLen < 0) {
      return json({ error: `no fake route for ${url}` }, 404);
    }
    return json(best);
  };
  return { api: new ApiClient("", fetchFn), calls, postedEvents, routes: table };
}

export function recorder(backend: FakeBackend, session = "s1"): EventRecorder {
  let tick = 0;
  return new EventRecorder(backend.api, session, () => {
    tick += 1000;
    return tick;
  });
}

export function host(): HTMLElement {
  const el = document.createElement("div");
  document.body.append(el);
  return el;
}

export function cloudPayload(): CloudPayload {
  const entries = [
    { term: "insulin", weight: 0.2, topic: 0, clicks: 0 },
    { term: "blutzucker", weight: 0.18, topic: 0, clicks: 0 },
    { term: "ernaehrung", weight: 0.15, topic: 1, clicks: 0 },
    { term: "bewegung", weight: 0.12, topic: 2, clicks: 0 },
    { term: "medikament", weight: 0.1, topic: 2, clicks: 0 },
    { term: "arzt", weight: 0.08, topic: 3, clicks: 0 },
    { term: "therapie", weight: 0.06, topic: 4, clicks: 0 },
  ];
  return {
    chapter: 2,
    k: 5,
    entries,
    layout: {
      canvas: [800, 600],
      dropped: [],
      placed: entries.map((e, i) => ({
        term: e.term,
        box: [10 + i * 110, 20 + i * 40, 100, 24] as [number, number, number, number],
        fontSize: 48 - i * 4,
        topic: e.topic,
        colorIndex: e.topic % 5,
      })),
    },
  };
}

export function tilebarPayload(term: string): TileBarPayload {
  return {
    term,
    lemma: term.toLowerCase(),
    chunkSize: 200,
    maxCount: 3,
    rows: [
      { chapter: 1, title: "Grundlagen", counts: [0, 1] },
      { chapter: 2, title: "Behandlung", counts: [3, 0] },
    ],
  };
}

export function snippetsPayload(term: string): SnippetsPayload {
  return {
    term,
    hits: [
      {
        chapter: 2,
        chapterTitle: "Behandlung",
        section: "Medikamente",
        sentenceIndex: 2,
        window: [2, 2],
        sentence: `Hier wirkt ${term} am besten.`,
        context: `Hier wirkt ${term} am besten.`,
        canExpandBefore: true,
        canExpandAfter: true,
      },
    ],
  };
}

export function fulltextPayload(chapter: number) {
  const sentences = [
    "Erster Satz der Sektion.",
    "Zweiter Satz mit Kontext.",
    "Hier wirkt insulin am besten.",
    "Letzter Satz der Sektion.",
  ];
  return {
    chapter,
    title: "Behandlung",
    sections: [
      {
        heading: "Medikamente",
        text: sentences.join(" "),
        sentences: sentences.map((text, index) => ({
          text,
          index,
          span: [0, text.length] as [number, number],
        })),
      },
    ],
  };
}

export function imagesPayload(count: number, clicked: Record<string, number> = {}): ImagesPayload {
  return {
    chapter: 3,
    images: Array.from({ length: count }, (_, i) => ({
      id: `img-3-${i + 1}`,
      uri: `images/img-3-${i + 1}.png`,
      caption: i % 2 === 0 ? `Abbildung ${i + 1}` : null,
      tier: 2,
    })),
    clicked,
  };
}

// Shape observed from the service for the five-process scripted session.
export function p12GraphPayload(): GraphPayload {
  return {
    nodes: [
      { process: "click on", duration_s: 1.5 },
      { process: "interpreting", duration_s: 21.5 },
      { process: "reading", duration_s: 30.0 },
      { process: "scanning", duration_s: 4.0 },
      { process: "viewing", duration_s: 6.0 },
    ],
    edges: [
      { from: "click on", to: "reading", count: 1 },
      { from: "reading", to: "interpreting", count: 1 },
      { from: "scanning", to: "viewing", count: 1 },
      { from: "viewing", to: "click on", count: 1 },
    ],
  };
}

export function matrixPayload(transitionCount: number): MatrixPayload {
  const wc = { kind: "WordCloud", chapter: 2 };
  const transitions = Array.from({ length: transitionCount }, (_, j) => ({
    from: { tool: wc, process: "viewing" },
    to: { tool: wc, process: "reading" },
    alpha: (j + 1) / transitionCount,
  }));
  return {
    rows: [{ kind: "TOC" }, wc],
    cols: ["click on", "viewing", "reading"],
    cells: [
      {
        tool: { kind: "TOC" },
        process: "viewing",
        duration_s: 4.0,
        triples: [
          {
            src: { kind: "TOC" },
            process: "viewing",
            tar: wc,
            duration_s: 4.0,
            ts_ms: 0,
          },
        ],
      },
      { tool: wc, process: "reading", duration_s: 12.5, triples: [] },
    ],
    transitions,
  };
}
