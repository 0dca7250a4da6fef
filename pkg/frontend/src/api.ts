// Typed client for the monitoring API. One endpoint URL + token setting.

import type {
  AggregateRow,
  AuthorRow,
  HealthPayload,
  Mention,
  PolarityLabel,
  SpreadRow,
  TaxonomyPayload,
} from "./types.js";
import type { Filters } from "./state.js";
import { filtersToQuery } from "./state.js";

export interface ApiSettings {
  baseUrl: string;
  token: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(private settings: ApiSettings) {}

  private url(path: string, params?: URLSearchParams): string {
    const base = this.settings.baseUrl.replace(/\/$/, "");
    const query = params && [...params.keys()].length ? `?${params.toString()}` : "";
    return `${base}${path}${query}`;
  }

  private async request<T>(method: string, path: string, params?: URLSearchParams, body?: string, contentType = "application/json"): Promise<T> {
    const headers: Record<string, string> = {};
    if (body !== undefined) {
      headers["Content-Type"] = contentType;
    }
    if (method !== "GET") {
      headers["Authorization"] = `Bearer ${this.settings.token}`;
    }
    const res = await fetch(this.url(path, params), { method, headers, body });
    if (!res.ok) {
      throw new ApiError(res.status, `${method} ${path}: ${res.status} ${await res.text()}`);
    }
    const text = await res.text();
    return (text ? JSON.parse(text) : null) as T;
  }

  health(): Promise<HealthPayload> {
    return this.request("GET", "/health");
  }

  aggregates(filters: Filters): Promise<AggregateRow[]> {
    return this.request("GET", "/aggregates", filtersToQuery(filters));
  }

  mentions(filters: Filters, page = 0, pageSize = 20): Promise<Mention[]> {
    const params = filtersToQuery(filters);
    params.set("page", String(page));
    params.set("page_size", String(pageSize));
    return this.request("GET", "/mentions", params);
  }

  topAuthors(n: number, period?: string): Promise<AuthorRow[]> {
    const params = new URLSearchParams({ n: String(n) });
    if (period) params.set("period", period);
    return this.request("GET", "/authors/top", params);
  }

  spread(n: number, period?: string): Promise<SpreadRow[]> {
    const params = new URLSearchParams({ n: String(n) });
    if (period) params.set("period", period);
    return this.request("GET", "/mentions/spread", params);
  }

  taxonomy(): Promise<TaxonomyPayload> {
    return this.request("GET", "/taxonomy");
  }

  putTaxonomy(content: string): Promise<{ version: number; keywords: number }> {
    return this.request("PUT", "/taxonomy", undefined, content, "text/plain; charset=utf-8");
  }

  patchPolarity(mentionId: number, label: PolarityLabel): Promise<{ mention_id: number; corrected: string }> {
    return this.request(
      "PATCH",
      `/mentions/${mentionId}/polarity`,
      undefined,
      JSON.stringify({ label, operator_id: "dashboard" }),
    );
  }
}
