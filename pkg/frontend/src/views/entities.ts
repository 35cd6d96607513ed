// Companies, molecules, and inventors: per-topic rankings and entity detail
// pages with the pertinence heat row and the entity's patents per topic.

import { pertinenceRow } from "../charts.js";
import { el } from "../dom.js";
import { yearLabel } from "../format.js";
import { routeHash } from "../router.js";
import { COMPANIES_PER_TOPIC_CHOICES } from "../state.js";
import type { CompaniesResponse, EntityDetail, MoleculesResponse } from "../types.js";

export interface CompaniesHandlers {
  onPerTopic: (value: number) => void;
}

export function renderCompanies(
  payload: CompaniesResponse,
  handlers: CompaniesHandlers,
): HTMLElement {
  const root = el("div", { class: "view companies", "data-testid": "companies-view" });

  const selector = el("select", { "data-testid": "per-topic-select" });
  for (const choice of COMPANIES_PER_TOPIC_CHOICES) {
    selector.append(
      el("option", { value: choice, selected: choice === payload.per_topic }, String(choice)),
    );
  }
  selector.addEventListener("change", () => handlers.onPerTopic(Number(selector.value)));
  root.append(el("div", { class: "toolbar" }, el("label", {}, "companies per topic ", selector)));

  for (const block of payload.topics) {
    const entries = block.companies.map((c) =>
      el(
        "li",
        {},
        el("a", { href: routeHash({ name: "company", company: c.name }) }, c.name),
        el("span", { class: "muted", title: "summed topic mass" }, ` ${c.weight.toFixed(2)}`),
      ),
    );
    root.append(
      el(
        "section",
        { class: "topic-block", "data-testid": `companies-topic-${block.topic}` },
        el("h3", {}, `${block.topic}. ${block.title}`),
        el("ol", {}, ...entries),
      ),
    );
  }
  return root;
}

export function renderMolecules(payload: MoleculesResponse): HTMLElement {
  const rows = payload.molecules.map((m) =>
    el(
      "tr",
      {},
      el("td", {}, el("a", { href: routeHash({ name: "molecule", molecule: m.name }) }, m.name)),
      el("td", { "data-testid": `molecule-count-${m.name}` }, String(m.patent_count)),
      el("td", {}, `Topic ${m.dominant_topic}`),
    ),
  );
  return el(
    "div",
    { class: "view molecules", "data-testid": "molecules-view" },
    el(
      "table",
      { class: "listing" },
      el(
        "thead",
        {},
        el("tr", {}, el("th", {}, "molecule"), el("th", {}, "patents"), el("th", {}, "dominant topic")),
      ),
      el("tbody", {}, ...rows),
    ),
  );
}

export function renderEntityDetail(detail: EntityDetail, titles: string[]): HTMLElement {
  const root = el(
    "div",
    { class: "view entity", "data-testid": `entity-${detail.kind}` },
    el("h2", {}, detail.name),
    el(
      "p",
      { class: "muted" },
      `${detail.kind} with `,
      el("span", { "data-testid": "entity-patent-count" }, String(detail.patent_count)),
      " patents",
    ),
  );

  root.append(
    el("h3", {}, "Topic pertinence"),
    el(
      "table",
      { class: "heat" },
      el(
        "thead",
        {},
        el("tr", {}, ...titles.map((t, i) => el("th", { title: t }, String(i)))),
      ),
      el("tbody", {}, pertinenceRow(detail.pertinence, titles)),
    ),
  );

  const byTopic = new Map<number, typeof detail.patents>();
  for (const p of detail.patents) {
    const bucket = byTopic.get(p.topic) ?? [];
    bucket.push(p);
    byTopic.set(p.topic, bucket);
  }
  for (const [topic, patents] of [...byTopic.entries()].sort(([a], [b]) => a - b)) {
    root.append(
      el(
        "section",
        { class: "topic-block" },
        el("h4", {}, `${topic}. ${titles[topic] ?? `Topic ${topic}`} (${patents.length})`),
        el(
          "ul",
          {},
          ...patents.map((p) =>
            el(
              "li",
              {},
              el("a", { href: routeHash({ name: "patent", id: p.id }) }, `${p.id} ${p.title}`),
              el("span", { class: "muted" }, ` (${yearLabel(p.granted_year, p.filed_year)})`),
            ),
          ),
        ),
      ),
    );
  }
  return root;
}
