// Thin typed client over the service REST API. The fetch function is
// injectable so component tests can run against canned payloads.

import type {
  CloudPayload,
  DocumentDetail,
  DocumentPreview,
  FulltextPayload,
  GraphPayload,
  ImagesPayload,
  InteractionEvent,
  MatrixPayload,
  SnippetsPayload,
  TileBarPayload,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const res = await this.fetchFn(this.base + path);
    if (!res.ok) {
      throw new ApiError(res.status, `GET ${path} -> ${res.status}`);
    }
    return (await res.json()) as T;
  }

  listDocuments(): Promise<DocumentPreview[]> {
    return this.get("/documents");
  }

  document(docId: string): Promise<DocumentDetail> {
    return this.get(`/documents/${encodeURIComponent(docId)}`);
  }

  wordcloud(docId: string, chapter: number, layout = "wordle"): Promise<CloudPayload> {
    return this.get(
      `/documents/${encodeURIComponent(docId)}/chapters/${chapter}/wordcloud?layout=${layout}`,
    );
  }

  historycloud(
    docId: string,
    chapter: number,
    session: string,
    mode: "explored" | "unexplored" = "explored",
  ): Promise<CloudPayload> {
    return this.get(
      `/documents/${encodeURIComponent(docId)}/chapters/${chapter}/historycloud` +
        `?session=${encodeURIComponent(session)}&mode=${mode}`,
    );
  }

  tilebar(docId: string, term: string): Promise<TileBarPayload> {
    return this.get(
      `/documents/${encodeURIComponent(docId)}/tilebar?term=${encodeURIComponent(term)}`,
    );
  }

  snippets(docId: string, term: string): Promise<SnippetsPayload> {
    return this.get(
      `/documents/${encodeURIComponent(docId)}/snippets?term=${encodeURIComponent(term)}`,
    );
  }

  fulltext(docId: string, chapter: number): Promise<FulltextPayload> {
    return this.get(`/documents/${encodeURIComponent(docId)}/chapters/${chapter}/fulltext`);
  }

  images(docId: string, chapter: number, session = ""): Promise<ImagesPayload> {
    const suffix = session ? `?session=${encodeURIComponent(session)}` : "";
    return this.get(`/documents/${encodeURIComponent(docId)}/chapters/${chapter}/images${suffix}`);
  }

  provenanceGraph(session: string): Promise<GraphPayload> {
    return this.get(`/sessions/${encodeURIComponent(session)}/provenance/graph`);
  }

  provenanceMatrix(session: string): Promise<MatrixPayload> {
    return this.get(`/sessions/${encodeURIComponent(session)}/provenance/matrix`);
  }

  async postEvents(session: string, events: InteractionEvent[]): Promise<number> {
    const res = await this.fetchFn(`${this.base}/sessions/${encodeURIComponent(session)}/events`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(events),
    });
    if (!res.ok) {
      throw new ApiError(res.status, `POST events -> ${res.status}`);
    }
    const body = (await res.json()) as { events: number };
    return body.events;
  }
}
