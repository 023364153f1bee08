// Entry point: wires the API client to the page and starts the router.
// The API origin and session id can be overridden via globals set by the
// hosting page.

import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    DOCEXPLORE_API?: string;
    DOCEXPLORE_SESSION?: string;
  }
}

const base = window.DOCEXPLORE_API ?? "";
const session = window.DOCEXPLORE_SESSION ?? `web-${Date.now().toString(36)}`;
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app container");
}
new App({ api: new ApiClient(base), session, root }).start();
