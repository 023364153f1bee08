// Interaction event capture. Every logged gesture becomes exactly one
// well-formed event; posts are queued and flushed strictly in order so the
// server sees monotone timestamps. Hover gestures only count after a one
// second dwell, matching the coding threshold used by the analytics side.

import type { ApiClient } from "./api.js";
import type { EventTarget_, InteractionEvent, ToolRef } from "./types.js";

export const HOVER_DWELL_MS = 1000;

// Duration attached to instantaneous gestures (clicks, searches); the
// wire format requires a strictly positive value.
export const CLICK_DURATION_S = 0.1;

type Clock = () => number;

export class EventRecorder {
  private queue: InteractionEvent[] = [];
  private flushing: Promise<void> = Promise.resolve();
  private lastTs = -1;
  posted = 0;

  constructor(
    private readonly api: ApiClient,
    readonly session: string,
    private readonly clock: Clock = () => Date.now(),
    readonly task?: string,
  ) {}

  record(tool: ToolRef, process: string, durationS: number, target?: EventTarget_): void {
    let ts = this.clock();
    if (ts <= this.lastTs) {
      ts = this.lastTs + 1;
    }
    this.lastTs = ts;
    const event: InteractionEvent = {
      session: this.session,
      ts_ms: ts,
      tool,
      process,
      duration_s: durationS,
    };
    if (this.task !== undefined) {
      event.task = this.task;
    }
    if (target !== undefined) {
      event.target = target;
    }
    this.queue.push(event);
    this.flushing = this.flushing.then(() => this.flushOne());
  }

  private async flushOne(): Promise<void> {
    const event = this.queue.shift();
    if (!event) {
      return;
    }
    try {
      await this.api.postEvents(this.session, [event]);
      this.posted += 1;
    } catch {
      // a rejected event must not wedge the queue; the gesture is lost
    }
  }

  // resolves once everything recorded so far has been sent
  idle(): Promise<void> {
    return this.flushing;
  }
}

// Arms a timer on hover start; fires the callback once if the pointer stays
// for the dwell threshold, never if it leaves earlier.
export class HoverTimer {
  private handle: ReturnType<typeof setTimeout> | null = null;
  private startedAt = 0;

  constructor(
    private readonly onDwell: (dwellMs: number) => void,
    private readonly dwellMs: number = HOVER_DWELL_MS,
    private readonly clock: Clock = () => Date.now(),
  ) {}

  enter(): void {
    this.cancel();
    this.startedAt = this.clock();
    this.handle = setTimeout(() => {
      this.handle = null;
      this.onDwell(this.clock() - this.startedAt);
    }, this.dwellMs);
  }

  leave(): void {
    this.cancel();
  }

  private cancel(): void {
    if (this.handle !== null) {
      clearTimeout(this.handle);
      this.handle = null;
    }
  }
}
