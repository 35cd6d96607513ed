// Comparison view: one stacked share bar per patent, the globally shared
// topics highlighted and listed, pairwise intersections, and a threshold
// control that re-queries the API.

import { shareColor, stackedShareBar } from "../charts.js";
import { el } from "../dom.js";
import { pctLabel } from "../format.js";
import { routeHash } from "../router.js";
import type { CompareResponse } from "../types.js";

export interface CompareHandlers {
  onThreshold: (threshold: number) => void;
  onRemove: (id: string) => void;
  titles: string[];
  /** ids that failed to resolve, shown as error chips */
  invalid: { id: string; message: string }[];
}

export function renderCompareView(
  result: CompareResponse,
  handlers: CompareHandlers,
): HTMLElement {
  const root = el("div", { class: "view compare", "data-testid": "compare-view" });
  const shared = new Set(result.shared_topics);

  if (handlers.invalid.length > 0) {
    root.append(
      el(
        "div",
        { class: "chips" },
        ...handlers.invalid.map(({ id, message }) =>
          el("span", { class: "chip error", "data-testid": `invalid-${id}` }, `${id}: ${message}`),
        ),
      ),
    );
  }

  const slider = el("input", {
    type: "range",
    min: "0.01",
    max: "0.5",
    step: "0.01",
    value: result.threshold,
    "data-testid": "threshold-slider",
  });
  slider.addEventListener("change", () => handlers.onThreshold(Number(slider.value)));
  root.append(
    el(
      "div",
      { class: "toolbar" },
      el("label", {}, "share threshold ", slider),
      el("span", { "data-testid": "threshold-value" }, pctLabel(result.threshold)),
    ),
  );

  const rows = result.per_patent.map((dist) => {
    const bar = stackedShareBar(dist.shares, { highlight: shared, titles: handlers.titles });
    return el(
      "div",
      { class: "compare-row", "data-testid": `compare-row-${dist.id}` },
      el(
        "div",
        { class: "compare-row-head" },
        el("a", { href: routeHash({ name: "patent", id: dist.id }) }, dist.id),
        el("button", { class: "remove", onclick: () => handlers.onRemove(dist.id) }, "remove"),
      ),
      bar,
    );
  });
  root.append(...rows);

  const sharedChips =
    result.shared_topics.length > 0
      ? result.shared_topics.map((t) =>
          el(
            "span",
            {
              class: "chip shared",
              style: `border-color:${shareColor(t)}`,
              "data-testid": `shared-topic-${t}`,
              "data-topic": t,
            },
            handlers.titles[t] ?? `Topic ${t}`,
          ),
        )
      : [el("span", { class: "muted" }, "No topic is shared by all compared patents.")];
  root.append(
    el("h3", {}, "Shared topics"),
    el("div", { class: "chips", "data-testid": "shared-topics" }, ...sharedChips),
  );

  const pairRows = result.pairwise_shared.map(({ pair, topics }) =>
    el(
      "tr",
      {},
      el("td", {}, pair.join(" + ")),
      el(
        "td",
        { "data-testid": `pair-${pair.join("-")}` },
        topics.length > 0
          ? topics.map((t) => handlers.titles[t] ?? `Topic ${t}`).join(", ")
          : "none",
      ),
    ),
  );
  root.append(
    el("h3", {}, "Pairwise intersections"),
    el(
      "table",
      { class: "pairwise" },
      el("thead", {}, el("tr", {}, el("th", {}, "pair"), el("th", {}, "shared topics"))),
      el("tbody", {}, ...pairRows),
    ),
  );
  return root;
}

/** Distinct ids only; the compare route needs at least two of them. */
export function validateBasket(ids: string[]): { ok: boolean; reason?: string } {
  if (new Set(ids).size !== ids.length) return { ok: false, reason: "duplicate patent ids" };
  if (ids.length < 2) return { ok: false, reason: "select at least two patents" };
  return { ok: true };
}
