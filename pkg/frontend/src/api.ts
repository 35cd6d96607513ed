// Thin typed client over the /api endpoints. The fetch implementation is
// injectable so tests can run against canned payloads or an in-memory server.

import type {
  CompaniesResponse,
  CompareResponse,
  EntityDetail,
  LoginResponse,
  MoleculesResponse,
  PatentDetail,
  Stats,
  TopicPatentsResponse,
  TopicsResponse,
  TopicSummary,
  WordcloudResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private token: string | null = null;
  private user: string | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  get authenticatedUser(): string | null {
    return this.user;
  }

  isAuthenticated(): boolean {
    return this.token !== null;
  }

  logout(): void {
    this.token = null;
    this.user = null;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) headers["Content-Type"] = "application/json";
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const resp = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      let message = `HTTP ${resp.status}`;
      try {
        const payload = await resp.json();
        if (payload && typeof payload.error === "string") message = payload.error;
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(resp.status, message);
    }
    return (await resp.json()) as T;
  }

  async login(user: string, password: string): Promise<LoginResponse> {
    const payload = await this.request<LoginResponse>("POST", "/api/auth/login", {
      user,
      password,
    });
    this.token = payload.token;
    this.user = payload.user;
    return payload;
  }

  stats(): Promise<Stats> {
    return this.request("GET", "/api/stats");
  }

  topics(topWords?: number): Promise<TopicsResponse> {
    const query = topWords === undefined ? "" : `?top_words=${topWords}`;
    return this.request("GET", `/api/topics${query}`);
  }

  topic(t: number, topWords?: number): Promise<TopicSummary> {
    const query = topWords === undefined ? "" : `?top_words=${topWords}`;
    return this.request("GET", `/api/topics/${t}${query}`);
  }

  topicPatents(t: number): Promise<TopicPatentsResponse> {
    return this.request("GET", `/api/topics/${t}/patents`);
  }

  patchTitle(t: number, title: string): Promise<{ topic: number; title: string }> {
    return this.request("PATCH", `/api/topics/${t}/title`, { title });
  }

  companies(perTopic: number): Promise<CompaniesResponse> {
    return this.request("GET", `/api/companies?per_topic=${perTopic}`);
  }

  company(name: string): Promise<EntityDetail> {
    return this.request("GET", `/api/companies/${encodeURIComponent(name)}`);
  }

  molecules(): Promise<MoleculesResponse> {
    return this.request("GET", "/api/molecules");
  }

  molecule(name: string): Promise<EntityDetail> {
    return this.request("GET", `/api/molecules/${encodeURIComponent(name)}`);
  }

  inventor(name: string): Promise<EntityDetail> {
    return this.request("GET", `/api/inventors/${encodeURIComponent(name)}`);
  }

  patent(id: string): Promise<PatentDetail> {
    return this.request("GET", `/api/patents/${encodeURIComponent(id)}`);
  }

  compare(ids: string[], threshold: number): Promise<CompareResponse> {
    const encoded = ids.map(encodeURIComponent).join(",");
    return this.request("GET", `/api/compare?ids=${encoded}&threshold=${threshold}`);
  }

  wordcloud(n: number): Promise<WordcloudResponse> {
    return this.request("GET", `/api/wordcloud?n=${n}`);
  }
}
