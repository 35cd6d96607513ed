// Application shell: hash router, API wiring, and the navigation chrome.

import { ApiClient } from "./api.js";
import { clear, el, errorBanner } from "./dom.js";
import { parseHash, Route, routeHash } from "./router.js";
import { ViewState } from "./state.js";
import { renderCompareView, validateBasket } from "./views/compare.js";
import { renderDashboard } from "./views/dashboard.js";
import { renderCompanies, renderEntityDetail, renderMolecules } from "./views/entities.js";
import { renderLogin } from "./views/login.js";
import { renderPatent, renderTopicPatents } from "./views/patent.js";
import { renderTopicBrowser } from "./views/topics.js";
import type { PatentDetail } from "./types.js";

export class App {
  constructor(
    private readonly root: HTMLElement,
    private readonly client: ApiClient,
    private readonly state: ViewState = new ViewState(),
  ) {}

  navigate(route: Route): void {
    window.location.hash = routeHash(route);
  }

  private async titles(): Promise<string[]> {
    const payload = await this.client.topics(10);
    return payload.topics.map((t) => t.title);
  }

  private patentHandlers(titles: string[]) {
    return {
      titles,
      inBasket: (id: string) => this.state.inBasket(id),
      onToggleBasket: (id: string) => {
        this.state.toggleBasket(id);
        this.renderNav();
      },
    };
  }

  private renderNav(): void {
    const existing = document.querySelector("nav.app-nav");
    const basketCount = this.state.basket.length;
    const compareLink = this.state.canCompare()
      ? el(
          "a",
          { href: routeHash({ name: "compare", ids: [...this.state.basket] }) },
          `Compare (${basketCount})`,
        )
      : el("span", { class: "muted" }, `Compare (${basketCount})`);
    const nav = el(
      "nav",
      { class: "app-nav" },
      el("a", { href: "#/" }, "Dashboard"),
      el("a", { href: "#/topics" }, "Topics"),
      el("a", { href: "#/companies" }, "Companies"),
      el("a", { href: "#/molecules" }, "Molecules"),
      compareLink,
      this.client.isAuthenticated()
        ? el("span", { class: "muted" }, ` ${this.client.authenticatedUser}`)
        : el("a", { href: "#/login" }, "Sign in"),
    );
    if (existing) existing.replaceWith(nav);
    else document.body.prepend(nav);
  }

  async render(route: Route): Promise<void> {
    this.renderNav();
    clear(this.root);
    this.root.append(el("p", { class: "muted" }, "Loading..."));
    try {
      const view = await this.buildView(route);
      clear(this.root);
      this.root.append(view);
    } catch (err) {
      clear(this.root);
      this.root.append(errorBanner(err instanceof Error ? err.message : String(err)));
    }
  }

  private async buildView(route: Route): Promise<HTMLElement> {
    switch (route.name) {
      case "dashboard": {
        const [stats, cloud] = await Promise.all([
          this.client.stats(),
          this.client.wordcloud(40),
        ]);
        return renderDashboard(stats, cloud.terms);
      }
      case "topics": {
        const payload = await this.client.topics(this.state.wordCount);
        return renderTopicBrowser(payload, {
          authenticated: this.client.isAuthenticated(),
          query: this.state.topicQuery,
          wordCount: this.state.wordCount,
          onSearch: (q) => {
            this.state.topicQuery = q;
          },
          onWordCount: (count) => {
            this.state.setWordCount(count);
            void this.render(route);
          },
          onEditTitle: async (topic, title) => {
            const stored = await this.client.patchTitle(topic, title);
            return stored.title;
          },
        });
      }
      case "topic": {
        const [payload, titles] = await Promise.all([
          this.client.topicPatents(route.topic),
          this.titles(),
        ]);
        return renderTopicPatents(payload, this.patentHandlers(titles));
      }
      case "companies": {
        const payload = await this.client.companies(this.state.companiesPerTopic);
        return renderCompanies(payload, {
          onPerTopic: (value) => {
            this.state.setCompaniesPerTopic(value);
            void this.render(route);
          },
        });
      }
      case "company": {
        const [detail, titles] = await Promise.all([
          this.client.company(route.company),
          this.titles(),
        ]);
        return renderEntityDetail(detail, titles);
      }
      case "molecules": {
        const payload = await this.client.molecules();
        return renderMolecules(payload);
      }
      case "molecule": {
        const [detail, titles] = await Promise.all([
          this.client.molecule(route.molecule),
          this.titles(),
        ]);
        return renderEntityDetail(detail, titles);
      }
      case "inventor": {
        const [detail, titles] = await Promise.all([
          this.client.inventor(route.inventor),
          this.titles(),
        ]);
        return renderEntityDetail(detail, titles);
      }
      case "patent": {
        const [detail, titles] = await Promise.all([
          this.client.patent(route.id),
          this.titles(),
        ]);
        return renderPatent(detail, this.patentHandlers(titles));
      }
      case "compare":
        return this.buildCompare(route.ids, route.threshold ?? this.state.compareThreshold);
      case "login":
        return renderLogin({
          onLogin: async (user, password) => {
            await this.client.login(user, password);
            this.navigate({ name: "topics" });
          },
        });
    }
  }

  /** Resolve ids individually so unknown ones become error chips, then compare. */
  private async buildCompare(ids: string[], threshold: number): Promise<HTMLElement> {
    const distinct = validateBasket(ids);
    if (!distinct.ok) {
      return errorBanner(`Cannot compare: ${distinct.reason}`);
    }
    const invalid: { id: string; message: string }[] = [];
    const resolved: PatentDetail[] = [];
    await Promise.all(
      ids.map(async (id) => {
        try {
          resolved.push(await this.client.patent(id));
        } catch (err) {
          invalid.push({ id, message: err instanceof Error ? err.message : String(err) });
        }
      }),
    );
    const validIds = ids.filter((id) => resolved.some((p) => p.id === id));
    if (validIds.length < 2) {
      return errorBanner(
        `Cannot compare: only ${validIds.length} of ${ids.length} ids resolved`,
      );
    }
    const [result, titles] = await Promise.all([
      this.client.compare(validIds, threshold),
      this.titles(),
    ]);
    return renderCompareView(result, {
      titles,
      invalid,
      onThreshold: (value) => {
        this.state.compareThreshold = value;
        this.navigate({ name: "compare", ids: validIds, threshold: value });
        void this.render({ name: "compare", ids: validIds, threshold: value });
      },
      onRemove: (id) => {
        this.state.removeFromBasket(id);
        const rest = validIds.filter((x) => x !== id);
        this.navigate({ name: "compare", ids: rest, threshold });
        void this.render({ name: "compare", ids: rest, threshold });
      },
    });
  }
}

declare global {
  interface Window {
    PATOPICS_API_BASE?: string;
  }
}

function boot(): void {
  const root = document.getElementById("app");
  if (!root) return;
  const base =
    window.PATOPICS_API_BASE ?? new URLSearchParams(window.location.search).get("api") ?? "";
  const app = new App(root, new ApiClient(base));
  const rerender = () => void app.render(parseHash(window.location.hash));
  window.addEventListener("hashchange", rerender);
  rerender();
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
