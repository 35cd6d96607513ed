// Topic browser: search bar, word-count selector, one card per topic with an
// editable title, patent count badge, and the topic's top words.

import { el, notify } from "../dom.js";
import { routeHash } from "../router.js";
import { WORD_COUNT_CHOICES } from "../state.js";
import type { TopicsResponse, TopicSummary } from "../types.js";

export interface TopicBrowserHandlers {
  /** PATCH the title; resolves to the title the server stored. */
  onEditTitle: (topic: number, title: string) => Promise<string>;
  onSearch: (query: string) => void;
  onWordCount: (count: number) => void;
  authenticated: boolean;
  query: string;
  wordCount: number;
}

/** Case-insensitive substring match over the title and the top words. */
export function matchesTopic(topic: TopicSummary, query: string): boolean {
  const q = query.trim().toLowerCase();
  if (!q) return true;
  if (topic.title.toLowerCase().includes(q)) return true;
  return topic.top_words.some((w) => w.term.toLowerCase().includes(q));
}

function titleEditor(
  card: HTMLElement,
  topic: TopicSummary,
  handlers: TopicBrowserHandlers,
): HTMLElement {
  const heading = el("span", { class: "topic-title", "data-testid": `topic-title-${topic.topic}` },
    topic.title);
  if (!handlers.authenticated) return el("h3", {}, heading);

  const input = el("input", {
    class: "title-input hidden",
    value: topic.title,
    "data-testid": `title-input-${topic.topic}`,
  });
  const editButton = el(
    "button",
    {
      class: "edit-title",
      "data-testid": `edit-title-${topic.topic}`,
      onclick: () => {
        input.classList.remove("hidden");
        heading.classList.add("hidden");
        input.value = heading.textContent ?? "";
        input.focus();
      },
    },
    "edit",
  );

  const finish = async () => {
    const proposed = input.value.trim();
    input.classList.add("hidden");
    heading.classList.remove("hidden");
    if (!proposed) {
      // mirror of the server-side validation: never PATCH an empty title
      notify(card, "Title must be non-empty");
      input.value = heading.textContent ?? "";
      return;
    }
    if (proposed === heading.textContent) return;
    try {
      const stored = await handlers.onEditTitle(topic.topic, proposed);
      heading.textContent = stored;
      input.value = stored;
    } catch (err) {
      input.value = heading.textContent ?? "";
      notify(card, `Title edit failed: ${err instanceof Error ? err.message : err}`);
    }
  };
  input.addEventListener("keydown", (ev) => {
    if ((ev as KeyboardEvent).key === "Enter") void finish();
  });
  input.addEventListener("blur", () => void finish());
  return el("h3", {}, heading, input, editButton);
}

function topicCard(topic: TopicSummary, handlers: TopicBrowserHandlers): HTMLElement {
  const card = el("article", { class: "topic-card", "data-testid": `topic-card-${topic.topic}` });
  card.append(
    titleEditor(card, topic, handlers),
    el(
      "a",
      {
        class: "badge",
        href: routeHash({ name: "topic", topic: topic.topic }),
        "data-testid": `topic-count-${topic.topic}`,
      },
      `${topic.patent_count} patents`,
    ),
    el(
      "p",
      { class: "topic-words" },
      topic.top_words.map((w) => w.term).join(", "),
    ),
  );
  return card;
}

export function renderTopicBrowser(
  payload: TopicsResponse,
  handlers: TopicBrowserHandlers,
): HTMLElement {
  const root = el("div", { class: "view topics", "data-testid": "topic-browser" });
  const cards = payload.topics.map((t) => ({ topic: t, node: topicCard(t, handlers) }));
  const empty = el("p", { class: "muted hidden" }, "No topics match the search.");

  const applyFilter = (query: string) => {
    let shown = 0;
    for (const { topic, node } of cards) {
      const match = matchesTopic(topic, query);
      node.classList.toggle("hidden", !match);
      if (match) shown += 1;
    }
    empty.classList.toggle("hidden", shown > 0);
  };

  const search = el("input", {
    class: "search",
    placeholder: "Search topics",
    value: handlers.query,
    "data-testid": "topic-search",
  });
  search.addEventListener("input", () => {
    handlers.onSearch(search.value);
    applyFilter(search.value);
  });

  const selector = el("select", { "data-testid": "word-count-select" });
  for (const choice of WORD_COUNT_CHOICES) {
    selector.append(
      el("option", { value: choice, selected: choice === handlers.wordCount }, String(choice)),
    );
  }
  selector.addEventListener("change", () => handlers.onWordCount(Number(selector.value)));

  root.append(
    el("div", { class: "toolbar" }, search, el("label", {}, "words per topic ", selector)),
    el("div", { class: "topic-grid" }, ...cards.map((c) => c.node)),
    empty,
  );
  applyFilter(handlers.query);
  return root;
}
