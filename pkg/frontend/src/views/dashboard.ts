// Homepage: four totals tiles, patents-per-year charts, per-company and
// per-molecule charts, the word cloud, and the most recent patents.

import { barChart, tagCloud } from "../charts.js";
import { el } from "../dom.js";
import { yearLabel } from "../format.js";
import { routeHash } from "../router.js";
import type { Stats, WordWeight } from "../types.js";

function tile(label: string, value: number, testId: string): HTMLElement {
  return el(
    "div",
    { class: "tile", "data-testid": testId },
    el("div", { class: "tile-value" }, String(value)),
    el("div", { class: "tile-label" }, label),
  );
}

function histogramData(table: Record<string, number>) {
  return Object.entries(table)
    .sort(([a], [b]) => a.localeCompare(b))
    .map(([label, value]) => ({ label, value }));
}

function topCounts(table: Record<string, number>, limit: number, href: (name: string) => string) {
  return Object.entries(table)
    .sort(([a, va], [b, vb]) => vb - va || a.localeCompare(b))
    .slice(0, limit)
    .map(([label, value]) => ({ label, value, href: href(label) }));
}

export function renderDashboard(stats: Stats, cloud: WordWeight[]): HTMLElement {
  const root = el("div", { class: "view dashboard", "data-testid": "dashboard" });

  root.append(
    el(
      "div",
      { class: "tiles" },
      tile("patents", stats.total_patents, "tile-patents"),
      tile("companies", stats.total_companies, "tile-companies"),
      tile("molecules", stats.total_molecules, "tile-molecules"),
      tile("inventors", stats.total_inventors, "tile-inventors"),
    ),
  );

  const granted = histogramData(stats.patents_per_granted_year);
  const filed = histogramData(stats.patents_per_filed_year);
  if (granted.length > 0) {
    root.append(barChart("Patents per granted year", granted, "chart-granted-year"));
  }
  if (filed.length > 0) {
    root.append(barChart("Patents per filed year", filed, "chart-filed-year"));
  }

  root.append(
    barChart(
      "Patents per company",
      topCounts(stats.patents_per_company, 12, (name) =>
        routeHash({ name: "company", company: name }),
      ),
      "chart-companies",
    ),
    barChart(
      "Patents per molecule",
      topCounts(stats.patents_per_molecule, 12, (name) =>
        routeHash({ name: "molecule", molecule: name }),
      ),
      "chart-molecules",
    ),
  );

  root.append(el("h3", {}, "Topic words"), tagCloud(cloud));

  const recent = stats.recent_patents.map((p) =>
    el(
      "li",
      {},
      el("a", { href: routeHash({ name: "patent", id: p.id }) }, `${p.id} ${p.title}`),
      el("span", { class: "muted" }, ` ${p.company} (${yearLabel(p.granted_year, p.filed_year)})`),
    ),
  );
  root.append(
    el("h3", {}, "Most recent patents"),
    el("ul", { class: "recent", "data-testid": "recent-patents" }, ...recent),
  );
  return root;
}
