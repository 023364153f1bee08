// Hash router and page composition. Exploration routes for readers, the
// /analyst route for provenance views.

import { ApiClient } from "./api.js";
import { clear, h } from "./dom.js";
import { EventRecorder } from "./events.js";
import { FetchGate, ViewState } from "./state.js";
import { renderLibrary } from "./components/library.js";
import { renderToc } from "./components/toc.js";
import { renderProcessGraph, renderMatrix } from "./components/provenance.js";

export interface AppOptions {
  api: ApiClient;
  session: string;
  root: HTMLElement;
}

export class App {
  readonly state = new ViewState();
  readonly gate = new FetchGate();
  readonly recorder: EventRecorder;
  private readonly main: HTMLElement;
  private readonly snippets: HTMLElement;

  constructor(private readonly options: AppOptions) {
    this.recorder = new EventRecorder(options.api, options.session);
    this.main = h("main", { class: "app-main" });
    this.snippets = h("aside", { class: "app-snippets" });
    options.root.append(this.main, this.snippets);
  }

  async route(hash: string): Promise<void> {
    const path = hash.replace(/^#/, "") || "/library";
    const tocMatch = path.match(/^\/doc\/([^/]+)\/toc$/);
    if (path === "/library" || path === "/") {
      const previews = await this.options.api.listDocuments();
      renderLibrary(this.main, previews, {
        recorder: this.recorder,
        navigate: (route) => {
          window.location.hash = route;
          void this.route(route);
        },
      });
      return;
    }
    if (tocMatch) {
      const docId = decodeURIComponent(tocMatch[1]);
      this.state.currentDocument = docId;
      const doc = await this.options.api.document(docId);
      renderToc(this.main, doc, {
        api: this.options.api,
        recorder: this.recorder,
        state: this.state,
        gate: this.gate,
        snippetsHost: this.snippets,
      });
      return;
    }
    if (path === "/analyst") {
      clear(this.main);
      const graphHost = h("div", { class: "analyst-graph" });
      const matrixHost = h("div", { class: "analyst-matrix" });
      this.main.append(h("h1", {}, ["Session analytics"]), graphHost, matrixHost);
      const [graph, matrix] = await Promise.all([
        this.options.api.provenanceGraph(this.options.session),
        this.options.api.provenanceMatrix(this.options.session),
      ]);
      renderProcessGraph(graphHost, graph);
      renderMatrix(matrixHost, matrix);
      return;
    }
    clear(this.main);
    this.main.append(h("p", { class: "empty" }, [`unknown route ${path}`]));
  }

  start(): void {
    window.addEventListener("hashchange", () => {
      void this.route(window.location.hash);
    });
    void this.route(window.location.hash);
  }
}
