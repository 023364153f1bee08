import { describe, expect, it } from "vitest";

import { FetchGate, ViewState } from "../src/state.js";

describe("ViewState topics", () => {
  it("activates every topic after reset", () => {
    const s = new ViewState();
    s.resetTopics(5);
    expect([...s.activeTopics].sort()).toEqual([0, 1, 2, 3, 4]);
  });

  it("toggles a single topic off and back on", () => {
    const s = new ViewState();
    s.resetTopics(3);
    s.toggleTopic(1, 3);
    expect(s.activeTopics.has(0)).toBe(true);
    expect(s.activeTopics.has(1)).toBe(false);
    expect(s.activeTopics.has(2)).toBe(true);
    s.toggleTopic(1, 3);
    expect(s.activeTopics.has(1)).toBe(true);
  });

  it("rejects topic indexes outside the configured range", () => {
    const s = new ViewState();
    s.resetTopics(2);
    expect(() => s.toggleTopic(2, 2)).toThrow(RangeError);
    expect(() => s.toggleTopic(-1, 2)).toThrow(RangeError);
  });
});

describe("FetchGate", () => {
  it("applies the latest response and reports success", async () => {
    const gate = new FetchGate();
    let applied: string | null = null;
    const ok = await gate.run(
      "k",
      async () => "fresh",
      (v) => {
        applied = v;
      },
    );
    expect(ok).toBe(true);
    expect(applied).toBe("fresh");
  });

  it("discards a stale response that resolves after a newer request", async () => {
    const gate = new FetchGate();
    const applied: string[] = [];

    let releaseFirst!: (v: string) => void;
    const first = gate.run(
      "doc",
      () => new Promise<string>((r) => (releaseFirst = r)),
      (v) => applied.push(v),
    );
    const second = gate.run(
      "doc",
      async () => "second",
      (v) => applied.push(v),
    );

    expect(await second).toBe(true);
    releaseFirst("first");
    expect(await first).toBe(false);
    expect(applied).toEqual(["second"]);
  });

  it("tracks keys independently", async () => {
    const gate = new FetchGate();
    const applied: string[] = [];

    let releaseA!: (v: string) => void;
    const a = gate.run(
      "a",
      () => new Promise<string>((r) => (releaseA = r)),
      (v) => applied.push(v),
    );
    const b = gate.run(
      "b",
      async () => "b1",
      (v) => applied.push(v),
    );

    expect(await b).toBe(true);
    releaseA("a1");
    expect(await a).toBe(true);
    expect(applied.sort()).toEqual(["a1", "b1"]);
  });
});
