import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { CLICK_DURATION_S, EventRecorder, HOVER_DWELL_MS, HoverTimer } from "../src/events.js";
import { ApiClient } from "../src/api.js";
import { fakeBackend } from "./helpers.js";

describe("EventRecorder", () => {
  it("posts every recorded gesture in order with monotone timestamps", async () => {
    const backend = fakeBackend();
    const rec = new EventRecorder(backend.api, "s1", () => 5000);
    rec.record({ kind: "TOC" }, "scanning", 2.0);
    rec.record({ kind: "WordCloud", chapter: 1 }, "viewing", 3.0);
    rec.record({ kind: "WordCloud", chapter: 1 }, "click on", CLICK_DURATION_S, {
      doc: "d1",
      term: "insulin",
    });
    await rec.idle();

    expect(backend.postedEvents).toHaveLength(3);
    expect(backend.postedEvents.map((e) => e.process)).toEqual([
      "scanning",
      "viewing",
      "click on",
    ]);
    const stamps = backend.postedEvents.map((e) => e.ts_ms);
    expect(stamps[0]).toBeLessThan(stamps[1]);
    expect(stamps[1]).toBeLessThan(stamps[2]);
    expect(backend.postedEvents[2].target).toEqual({ doc: "d1", term: "insulin" });
  });

  it("keeps one POST per gesture even when posts resolve slowly", async () => {
    const bodies: unknown[] = [];
    let release: (() => void) | null = null;
    const api = new ApiClient("", async (_url, init) => {
      bodies.push(JSON.parse(String(init?.body)));
      if (release === null) {
        await new Promise<void>((resolve) => {
          release = resolve;
        });
      }
      return new Response(JSON.stringify({ ok: true, events: bodies.length }), { status: 200 });
    });
    const rec = new EventRecorder(api, "s1");
    rec.record({ kind: "TOC" }, "scanning", 1.0);
    rec.record({ kind: "TOC" }, "expanding", 1.0);
    await new Promise((r) => setTimeout(r, 0));
    expect(bodies).toHaveLength(1);
    release!();
    await rec.idle();
    expect(bodies).toHaveLength(2);
    expect((bodies[1] as { process: string }[])[0].process).toBe("expanding");
  });

  it("drops a rejected event without wedging the queue", async () => {
    let first = true;
    const api = new ApiClient("", async () => {
      const status = first ? 400 : 200;
      first = false;
      return new Response(JSON.stringify({ ok: status === 200, events: 1 }), { status });
    });
    const rec = new EventRecorder(api, "s1");
    rec.record({ kind: "TOC" }, "scanning", 1.0);
    rec.record({ kind: "TOC" }, "expanding", 1.0);
    await rec.idle();
    expect(rec.posted).toBe(1);
  });

  it("includes the task when configured and never a target unless given", async () => {
    const backend = fakeBackend();
    const rec = new EventRecorder(backend.api, "s1", () => 1, "wc3");
    rec.record({ kind: "Searchbar" }, "typing", 1.2);
    await rec.idle();
    expect(backend.postedEvents[0].task).toBe("wc3");
    expect("target" in backend.postedEvents[0]).toBe(false);
  });
});

describe("HoverTimer", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("fires once after the dwell threshold", () => {
    const fired: number[] = [];
    const timer = new HoverTimer((dwell) => fired.push(dwell), HOVER_DWELL_MS, () => Date.now());
    timer.enter();
    vi.advanceTimersByTime(HOVER_DWELL_MS - 1);
    expect(fired).toHaveLength(0);
    vi.advanceTimersByTime(1);
    expect(fired).toHaveLength(1);
    vi.advanceTimersByTime(5000);
    expect(fired).toHaveLength(1);
  });

  it("never fires when the pointer leaves early", () => {
    const fired: number[] = [];
    const timer = new HoverTimer((dwell) => fired.push(dwell));
    timer.enter();
    vi.advanceTimersByTime(500);
    timer.leave();
    vi.advanceTimersByTime(5000);
    expect(fired).toHaveLength(0);
  });

  it("restarts the dwell on re-entry", () => {
    const fired: number[] = [];
    const timer = new HoverTimer((dwell) => fired.push(dwell));
    timer.enter();
    vi.advanceTimersByTime(800);
    timer.enter();
    vi.advanceTimersByTime(800);
    expect(fired).toHaveLength(0);
    vi.advanceTimersByTime(200);
    expect(fired).toHaveLength(1);
  });
});

describe("click duration", () => {
  it("is strictly positive as the wire format requires", () => {
    expect(CLICK_DURATION_S).toBeGreaterThan(0);
  });
});
