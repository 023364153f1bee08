// Client view state. Everything rendered derives from server responses plus
// this structure; there is no hidden content state beyond it.

export class ViewState {
  currentDocument: string | null = null;
  expandedChapters = new Set<number>();
  activeTopics = new Set<number>();
  hoveredTerm: string | null = null;
  openSnippets: string | null = null;
  sliderPositions = new Map<number, number>();

  resetTopics(k: number): void {
    this.activeTopics = new Set(Array.from({ length: k }, (_, i) => i));
  }

  toggleTopic(topic: number, k: number): void {
    if (topic < 0 || topic >= k) {
      throw new RangeError(`topic ${topic} out of range for k=${k}`);
    }
    if (this.activeTopics.has(topic)) {
      this.activeTopics.delete(topic);
    } else {
      this.activeTopics.add(topic);
    }
  }
}

// Discards stale fetch responses: each key carries a sequence number and
// only the most recently issued request may apply its result.
export class FetchGate {
  private seq = new Map<string, number>();

  async run<T>(key: string, fn: () => Promise<T>, apply: (value: T) => void): Promise<boolean> {
    const ticket = (this.seq.get(key) ?? 0) + 1;
    this.seq.set(key, ticket);
    const value = await fn();
    if (this.seq.get(key) !== ticket) {
      return false;
    }
    apply(value);
    return true;
  }
}
