// Image slider: five thumbnails at a time with paging arrows; clicking a
// thumbnail opens the large modal view (its own tool in the taxonomy) and
// posts the click event that feeds the history slider. History mode shows
// only images already clicked in this session.

import { clear, h } from "../dom.js";
import { CLICK_DURATION_S, EventRecorder } from "../events.js";
import type { ImagesPayload, RankedImage } from "../types.js";

export const WINDOW_SIZE = 5;

export interface SliderContext {
  recorder: EventRecorder;
  docId: string;
  sliderPositions: Map<number, number>;
}

export function pageOf(images: readonly RankedImage[], page: number): RankedImage[] {
  const start = page * WINDOW_SIZE;
  return images.slice(start, start + WINDOW_SIZE);
}

export function pageCount(total: number): number {
  return Math.max(1, Math.ceil(total / WINDOW_SIZE));
}

export function renderImageSlider(
  host: HTMLElement,
  payload: ImagesPayload,
  ctx: SliderContext,
  historyOnly = false,
): void {
  clear(host);
  const chapter = payload.chapter;
  const images = historyOnly
    ? payload.images.filter((img) => (payload.clicked[img.id] ?? 0) > 0)
    : payload.images;
  const root = h("div", {
    class: historyOnly ? "imageslider history" : "imageslider",
    "data-chapter": String(chapter),
  });
  if (images.length === 0) {
    root.append(h("p", { class: "empty" }, [historyOnly ? "no images visited yet" : "no images"]));
    host.append(root);
    return;
  }

  const pages = pageCount(images.length);
  let page = Math.min(ctx.sliderPositions.get(chapter) ?? 0, pages - 1);

  const strip = h("div", { class: "slider-strip" });
  const prev = h("button", { class: "slider-prev" }, ["‹"]);
  const next = h("button", { class: "slider-next" }, ["›"]);
  const modalHost = h("div", { class: "slider-modal-host" });

  const draw = () => {
    clear(strip);
    for (const image of pageOf(images, page)) {
      const thumb = h("img", {
        class: "slider-thumb",
        src: image.uri,
        alt: image.caption ?? image.id,
        "data-image": image.id,
        "data-tier": String(image.tier),
      });
      thumb.addEventListener("click", () => {
        ctx.recorder.record(
          { kind: "ImageSliderSmall", chapter },
          "click on",
          CLICK_DURATION_S,
          { doc: ctx.docId, image: image.id },
        );
        openModal(modalHost, image, chapter, ctx);
      });
      strip.append(thumb);
    }
    prev.disabled = page === 0;
    next.disabled = page === pages - 1;
    root.setAttribute("data-page", String(page));
  };

  const slide = (delta: number) => {
    const target = Math.min(Math.max(page + delta, 0), pages - 1);
    if (target === page) {
      return;
    }
    page = target;
    ctx.sliderPositions.set(chapter, page);
    ctx.recorder.record({ kind: "ImageSliderSmall", chapter }, "sliding", CLICK_DURATION_S);
    draw();
  };
  prev.addEventListener("click", () => slide(-1));
  next.addEventListener("click", () => slide(1));

  draw();
  root.append(prev, strip, next, modalHost);
  host.append(root);
}

function openModal(
  host: HTMLElement,
  image: RankedImage,
  chapter: number,
  ctx: SliderContext,
): void {
  clear(host);
  const modal = h("div", { class: "slider-modal", role: "dialog", "data-image": image.id });
  modal.append(h("img", { src: image.uri, alt: image.caption ?? image.id }));
  if (image.caption) {
    modal.append(h("figcaption", {}, [image.caption]));
  }
  const close = h("button", { class: "modal-close" }, ["×"]);
  close.addEventListener("click", () => {
    ctx.recorder.record({ kind: "ImageSliderLarge", chapter }, "closing", CLICK_DURATION_S);
    clear(host);
  });
  modal.append(close);
  host.append(modal);
}
