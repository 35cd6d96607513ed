import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import type { TopicsResponse } from "../src/types.js";
import { matchesTopic, renderTopicBrowser, TopicBrowserHandlers } from "../src/views/topics.js";
import { FakeServer, fixture, flush } from "./helpers.js";

const topicsFixture = fixture<TopicsResponse>("topics.json");

function handlersWith(overrides: Partial<TopicBrowserHandlers> = {}): TopicBrowserHandlers {
  return {
    onEditTitle: async (_t, title) => title,
    onSearch: () => {},
    onWordCount: () => {},
    authenticated: false,
    query: "",
    wordCount: 10,
    ...overrides,
  };
}

function visibleCards(root: HTMLElement): string[] {
  return [...root.querySelectorAll(".topic-card")]
    .filter((c) => !c.classList.contains("hidden"))
    .map((c) => c.getAttribute("data-testid")!);
}

describe("topic search", () => {
  it("matches on title and top words, case-insensitively", () => {
    const topic = topicsFixture.topics[0];
    expect(matchesTopic(topic, "")).toBe(true);
    expect(matchesTopic(topic, topic.title.slice(0, 4).toUpperCase())).toBe(true);
    const word = topic.top_words[0].term;
    expect(matchesTopic(topic, word.slice(0, 5))).toBe(true);
    expect(matchesTopic(topic, "zzz-no-such-word")).toBe(false);
  });

  it("filters cards live as the query changes", async () => {
    const root = renderTopicBrowser(topicsFixture, handlersWith());
    expect(visibleCards(root)).toHaveLength(topicsFixture.k);

    const search = root.querySelector<HTMLInputElement>('[data-testid="topic-search"]')!;
    const needle = topicsFixture.topics[1].top_words[0].term;
    search.value = needle;
    search.dispatchEvent(new Event("input"));
    const shown = visibleCards(root);
    expect(shown.length).toBeGreaterThan(0);
    expect(shown.length).toBeLessThan(topicsFixture.k);
    expect(shown).toContain(`topic-card-${topicsFixture.topics[1].topic}`);

    search.value = "";
    search.dispatchEvent(new Event("input"));
    expect(visibleCards(root)).toHaveLength(topicsFixture.k);
  });
});

describe("topic cards", () => {
  it("shows the per-topic patent count badges from the payload", () => {
    const root = renderTopicBrowser(topicsFixture, handlersWith());
    for (const topic of topicsFixture.topics) {
      const badge = root.querySelector(`[data-testid="topic-count-${topic.topic}"]`);
      expect(badge?.textContent).toBe(`${topic.patent_count} patents`);
    }
  });

  it("hides the edit control for anonymous users", () => {
    const root = renderTopicBrowser(topicsFixture, handlersWith({ authenticated: false }));
    expect(root.querySelector(".edit-title")).toBeNull();
  });
});

async function editTitle(root: HTMLElement, topic: number, value: string): Promise<void> {
  root.querySelector<HTMLButtonElement>(`[data-testid="edit-title-${topic}"]`)!.click();
  const input = root.querySelector<HTMLInputElement>(`[data-testid="title-input-${topic}"]`)!;
  input.value = value;
  input.dispatchEvent(new KeyboardEvent("keydown", { key: "Enter" }));
  await flush();
}

describe("title editing", () => {
  async function browserAgainst(server: FakeServer) {
    const client = new ApiClient("", server.fetch);
    await client.login("curator", "pw");
    const payload = await client.topics(10);
    const handlers = handlersWith({
      authenticated: client.isAuthenticated(),
      onEditTitle: async (t, title) => (await client.patchTitle(t, title)).title,
    });
    return { client, root: renderTopicBrowser(payload, handlers), handlers };
  }

  it("round-trips an edit through PATCH and survives a reload", async () => {
    const server = new FakeServer(topicsFixture);
    const { client, root } = await browserAgainst(server);

    await editTitle(root, 0, "Delivery systems and devices");
    expect(
      root.querySelector('[data-testid="topic-title-0"]')!.textContent,
    ).toBe("Delivery systems and devices");
    expect(server.titles[0]).toBe("Delivery systems and devices");

    // reload: fetch the topics afresh and render a new browser
    const reloaded = renderTopicBrowser(
      await client.topics(10),
      handlersWith({ authenticated: true }),
    );
    expect(
      reloaded.querySelector('[data-testid="topic-title-0"]')!.textContent,
    ).toBe("Delivery systems and devices");
  });

  it("reverts to the server title and notifies when the PATCH fails", async () => {
    const server = new FakeServer(topicsFixture);
    const { root } = await browserAgainst(server);
    const before = root.querySelector('[data-testid="topic-title-1"]')!.textContent;

    server.failNextPatch = true;
    await editTitle(root, 1, "Doomed edit");
    expect(root.querySelector('[data-testid="topic-title-1"]')!.textContent).toBe(before);
    expect(root.querySelector('[data-testid="notice"]')?.textContent).toContain("failed");
    expect(server.titles[1]).toBe(before);
  });

  it("blocks empty titles client-side without issuing a PATCH", async () => {
    const server = new FakeServer(topicsFixture);
    const { root } = await browserAgainst(server);

    await editTitle(root, 2, "   ");
    expect(server.patchCalls).toBe(0);
    expect(root.querySelector('[data-testid="notice"]')?.textContent).toContain("non-empty");
  });
});
