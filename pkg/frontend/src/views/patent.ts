// Patent detail and the topic drill-down listing patents with their shares.

import { stackedShareBar } from "../charts.js";
import { el } from "../dom.js";
import { pctLabel, yearLabel } from "../format.js";
import { routeHash } from "../router.js";
import type { PatentDetail, TopicPatentsResponse } from "../types.js";

export interface PatentHandlers {
  onToggleBasket: (id: string) => void;
  inBasket: (id: string) => boolean;
  titles: string[];
}

function basketButton(id: string, handlers: PatentHandlers): HTMLElement {
  const button = el(
    "button",
    { class: "basket-toggle", "data-testid": `basket-${id}` },
    handlers.inBasket(id) ? "remove from comparison" : "add to comparison",
  );
  button.addEventListener("click", () => {
    handlers.onToggleBasket(id);
    button.textContent = handlers.inBasket(id) ? "remove from comparison" : "add to comparison";
  });
  return button;
}

export function renderPatent(detail: PatentDetail, handlers: PatentHandlers): HTMLElement {
  const dist = detail.distribution;
  const fields: [string, string][] = [
    ["Company", detail.company],
    ["Molecule", detail.drug],
    ["Strength", detail.strength || "(none)"],
    ["Trade name", detail.trade_name || "(none)"],
    ["Inventors", detail.inventors.join(", ") || "(none)"],
    ["Year", yearLabel(detail.granted_year, detail.filed_year)],
  ];
  const shareList = dist.shares
    .map((s, t) => ({ s, t }))
    .filter(({ s }) => s >= 0.005)
    .sort((a, b) => b.s - a.s)
    .map(({ s, t }) =>
      el(
        "li",
        { "data-testid": `share-${t}` },
        el("a", { href: routeHash({ name: "topic", topic: t }) },
          handlers.titles[t] ?? `Topic ${t}`),
        ` ${pctLabel(s)}`,
      ),
    );

  return el(
    "div",
    { class: "view patent", "data-testid": "patent-view" },
    el("h2", {}, `${detail.id} ${detail.title}`),
    el("p", {}, el("a", { href: detail.url, target: "_blank", rel: "noopener" }, "source record")),
    basketButton(detail.id, handlers),
    el(
      "dl",
      { class: "fields" },
      ...fields.flatMap(([k, v]) => [el("dt", {}, k), el("dd", {}, v)]),
    ),
    el("p", { class: "abstract" }, detail.abstract),
    el("h3", {}, `Dominant topic: ${detail.topic_title}`),
    dist.is_zero
      ? el("p", { class: "muted" }, "No topic signal for this patent.")
      : stackedShareBar(dist.shares, { titles: handlers.titles }),
    el("ul", { class: "share-list" }, ...shareList),
  );
}

export function renderTopicPatents(
  payload: TopicPatentsResponse,
  handlers: PatentHandlers,
): HTMLElement {
  const rows = payload.patents.map((p) =>
    el(
      "article",
      { class: "patent-row", "data-testid": `patent-row-${p.id}` },
      el(
        "h4",
        {},
        el("a", { href: routeHash({ name: "patent", id: p.id }) }, `${p.id} ${p.title}`),
      ),
      el(
        "p",
        { class: "muted" },
        `${yearLabel(p.granted_year, p.filed_year)} | ${p.company} | ${p.drug}` +
          (p.strength ? ` | ${p.strength}` : ""),
      ),
      el("p", {}, p.abstract),
      el("span", { class: "badge" }, `${pctLabel(p.share)} of this topic`),
      basketButton(p.id, handlers),
    ),
  );
  return el(
    "div",
    { class: "view topic-patents", "data-testid": "topic-patents" },
    el("h2", {}, `${payload.topic}. ${payload.title}`),
    el("p", { class: "muted" }, `${payload.patent_count} patents`),
    ...rows,
  );
}
