// Shapes of the REST payloads the service returns. These mirror the JSON
// bodies exactly; nothing here is invented client-side.

export interface DocumentPreview {
  id: string;
  title: string;
  metadata: Record<string, unknown>;
  chapters: number;
  histogram: { term: string; count: number }[];
}

export interface SectionDetail {
  heading: string;
  text: string;
}

export interface ImageDetail {
  id: string;
  uri: string;
  caption?: string;
  structured: boolean;
}

export interface ChapterDetail {
  number: number;
  title: string;
  sections: SectionDetail[];
  images: ImageDetail[];
}

export interface DocumentDetail {
  id: string;
  title: string;
  metadata: Record<string, unknown>;
  chapters: ChapterDetail[];
}

export interface PlacedWord {
  term: string;
  box: [number, number, number, number];
  fontSize: number;
  topic: number;
  colorIndex: number;
}

export interface CloudLayout {
  canvas: [number, number];
  placed: PlacedWord[];
  dropped: string[];
}

export interface CloudEntry {
  term: string;
  weight: number;
  topic: number;
  clicks: number;
}

export interface CloudPayload {
  chapter: number;
  k: number;
  entries: CloudEntry[];
  layout: CloudLayout | null;
  mode?: string;
}

export interface TileBarRow {
  chapter: number;
  title: string;
  counts: number[];
}

export interface TileBarPayload {
  term: string;
  lemma: string;
  chunkSize: number;
  maxCount: number;
  rows: TileBarRow[];
}

export interface SnippetHit {
  chapter: number;
  chapterTitle: string;
  section: string;
  sentenceIndex: number;
  window: [number, number];
  sentence: string;
  context: string;
  canExpandBefore: boolean;
  canExpandAfter: boolean;
}

export interface SnippetsPayload {
  term: string;
  hits: SnippetHit[];
}

export interface SentenceDetail {
  text: string;
  index: number;
  span: [number, number];
}

export interface FulltextSection {
  heading: string;
  text: string;
  sentences: SentenceDetail[];
}

export interface FulltextPayload {
  chapter: number;
  title: string;
  sections: FulltextSection[];
}

export interface RankedImage {
  id: string;
  uri: string;
  caption: string | null;
  tier: number;
}

export interface ImagesPayload {
  chapter: number;
  images: RankedImage[];
  clicked: Record<string, number>;
}

export interface GraphNode {
  process: string;
  duration_s: number;
}

export interface GraphEdge {
  from: string;
  to: string;
  count: number;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface ToolRef {
  kind: string;
  chapter?: number;
}

export interface MatrixCell {
  tool: ToolRef;
  process: string;
  duration_s: number;
  triples: TripleRef[];
}

export interface TripleRef {
  src: ToolRef;
  process: string;
  tar: ToolRef;
  duration_s: number;
  ts_ms: number;
}

export interface MatrixTransition {
  from: { tool: ToolRef; process: string };
  to: { tool: ToolRef; process: string };
  alpha: number;
}

export interface MatrixPayload {
  rows: ToolRef[];
  cols: string[];
  cells: MatrixCell[];
  transitions: MatrixTransition[];
}

export interface EventTarget_ {
  doc: string;
  term?: string;
  image?: string;
}

export interface InteractionEvent {
  session: string;
  task?: string;
  ts_ms: number;
  tool: ToolRef;
  process: string;
  duration_s: number;
  target?: EventTarget_;
}
