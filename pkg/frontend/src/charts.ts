// Chart primitives rendered as plain DOM: horizontal bar charts for counts,
// stacked bars for per-patent topic shares, a weight-scaled tag cloud, and a
// heat-map row for entity pertinence. Values shown are the API values; only
// bar geometry is scaled.

import { el } from "./dom.js";
import { pctLabel } from "./format.js";
import type { WordWeight } from "./types.js";

export interface BarDatum {
  label: string;
  value: number;
  href?: string;
}

export function barChart(title: string, data: BarDatum[], testId?: string): HTMLElement {
  const max = data.reduce((m, d) => Math.max(m, d.value), 0);
  const rows = data.map((d) => {
    const width = max > 0 ? (100 * d.value) / max : 0;
    const label: HTMLElement = d.href
      ? el("a", { href: d.href, class: "bar-label" }, d.label)
      : el("span", { class: "bar-label" }, d.label);
    return el(
      "div",
      { class: "bar-row" },
      label,
      el("div", { class: "bar-track" }, el("div", { class: "bar-fill", style: `width:${width}%` })),
      el("span", { class: "bar-value", "data-value": d.value }, String(d.value)),
    );
  });
  return el(
    "section",
    { class: "chart", "data-testid": testId },
    el("h3", {}, title),
    ...rows,
  );
}

const SHARE_COLORS = [
  "#4e79a7", "#f28e2b", "#76b7b2", "#e15759", "#59a14f",
  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
];

export function shareColor(topic: number): string {
  return SHARE_COLORS[topic % SHARE_COLORS.length];
}

export interface ShareBarOptions {
  highlight?: Set<number>;
  titles?: string[];
  minVisible?: number;
}

/** Horizontal stacked bar of a patent's topic shares. */
export function stackedShareBar(shares: number[], opts: ShareBarOptions = {}): HTMLElement {
  const minVisible = opts.minVisible ?? 0.005;
  const segments = shares
    .map((share, topic) => ({ share, topic }))
    .filter(({ share }) => share >= minVisible)
    .map(({ share, topic }) => {
      const highlighted = opts.highlight?.has(topic) ?? false;
      const name = opts.titles?.[topic] ?? `Topic ${topic}`;
      return el(
        "span",
        {
          class: highlighted ? "share-seg shared" : "share-seg",
          style: `width:${100 * share}%;background:${shareColor(topic)}`,
          title: `${name}: ${pctLabel(share)}`,
          "data-topic": topic,
          "data-share": share,
        },
        "",
      );
    });
  return el("div", { class: "share-bar" }, ...segments);
}

export function tagCloud(terms: WordWeight[], testId = "word-cloud"): HTMLElement {
  const max = terms.reduce((m, t) => Math.max(m, t.weight), 0);
  const spans = terms.map((t) => {
    const rel = max > 0 ? t.weight / max : 0;
    const size = 0.8 + 1.4 * rel;
    return el(
      "span",
      { class: "cloud-term", style: `font-size:${size.toFixed(2)}em`, title: String(t.weight) },
      t.term,
    );
  });
  return el("div", { class: "tag-cloud", "data-testid": testId }, ...spans);
}

/** One heat-map row of normalized pertinence values (integer percents shown). */
export function pertinenceRow(values: number[], titles?: string[]): HTMLElement {
  const cells = values.map((v, topic) => {
    const name = titles?.[topic] ?? `Topic ${topic}`;
    return el(
      "td",
      {
        class: "heat-cell",
        style: `background:rgba(78,121,167,${Math.min(1, v).toFixed(3)})`,
        title: name,
        "data-topic": topic,
      },
      pctLabel(v),
    );
  });
  return el("tr", { class: "heat-row" }, ...cells);
}
