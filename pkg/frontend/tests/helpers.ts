import fs from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import type { TopicsResponse } from "../src/types.js";

const here = path.dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(fs.readFileSync(path.join(here, "fixtures", name), "utf-8")) as T;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

/** Route fetches by "METHOD path" prefix to canned JSON payloads. */
export function makeFetch(
  routes: Record<string, unknown | ((url: string, init?: RequestInit) => Response)>,
): FetchLike {
  return async (url, init) => {
    const method = init?.method ?? "GET";
    const key = Object.keys(routes).find((k) => {
      const [m, prefix] = k.split(" ");
      return m === method && url.startsWith(prefix);
    });
    if (key === undefined) {
      return jsonResponse({ error: `no route for ${method} ${url}` }, 404);
    }
    const value = routes[key];
    if (typeof value === "function") {
      return (value as (url: string, init?: RequestInit) => Response)(url, init);
    }
    return jsonResponse(value);
  };
}

/**
 * In-memory stand-in for the title-edit surface of the service: serves the
 * fixture topics with mutable titles and accepts authenticated PATCHes.
 */
export class FakeServer {
  titles: string[];
  patchCalls = 0;
  failNextPatch = false;

  constructor(private readonly base: TopicsResponse) {
    this.titles = base.topics.map((t) => t.title);
  }

  topicsPayload(): TopicsResponse {
    return {
      ...this.base,
      topics: this.base.topics.map((t, i) => ({ ...t, title: this.titles[i] })),
    };
  }

  fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    if (method === "GET" && url.startsWith("/api/topics")) {
      return jsonResponse(this.topicsPayload());
    }
    if (method === "POST" && url.startsWith("/api/auth/login")) {
      return jsonResponse({ token: "test-token", user: "curator" });
    }
    const patch = url.match(/^\/api\/topics\/(\d+)\/title$/);
    if (method === "PATCH" && patch) {
      this.patchCalls += 1;
      if (this.failNextPatch) {
        this.failNextPatch = false;
        return jsonResponse({ error: "simulated failure" }, 500);
      }
      const auth = (init?.headers as Record<string, string>)?.["Authorization"];
      if (!auth?.startsWith("Bearer ")) {
        return jsonResponse({ error: "missing bearer token" }, 401);
      }
      const body = JSON.parse(String(init?.body ?? "{}"));
      const title = String(body.title ?? "").trim();
      if (!title) return jsonResponse({ error: "title must be non-empty" }, 400);
      const topic = Number(patch[1]);
      this.titles[topic] = title;
      return jsonResponse({ topic, title });
    }
    return jsonResponse({ error: `no route for ${method} ${url}` }, 404);
  };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
