import type {
  ApiErrorPayload,
  ArticlePayload,
  CloudEntry,
  Listing,
  RankedArticle,
  RelatedTag,
  SearchHit,
} from "./types.js";

/** Raised for non-2xx responses, carrying the gateway's error code. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

let apiBase = "";

/** Point the client at a non-same-origin gateway (tests, dev servers). */
export function setApiBase(base: string): void {
  apiBase = base.replace(/\/+$/, "");
}

async function getJson<T>(path: string): Promise<T> {
  const response = await fetch(`${apiBase}${path}`);
  if (!response.ok) {
    let payload: ApiErrorPayload = { code: "http_error", message: response.statusText };
    try {
      payload = (await response.json()) as ApiErrorPayload;
    } catch {
      // non-JSON error body; keep the fallback
    }
    throw new ApiError(response.status, payload.code, payload.message);
  }
  return (await response.json()) as T;
}

export function fetchCloud(top = 50): Promise<Listing<CloudEntry>> {
  return getJson(`/api/tags?top=${top}`);
}

export function fetchArticle(id: string): Promise<ArticlePayload> {
  return getJson(`/api/articles/${encodeURIComponent(id)}`);
}

export function fetchRelated(tag: string, top = 50): Promise<Listing<RelatedTag>> {
  return getJson(`/api/tags/${encodeURIComponent(tag)}/related?top=${top}`);
}

export function fetchTagArticles(
  tag: string,
  popular: boolean,
  top = 50,
): Promise<Listing<RankedArticle>> {
  return getJson(
    `/api/tags/${encodeURIComponent(tag)}/articles?popular=${popular}&top=${top}`,
  );
}

export function fetchFilter(include: string[], exclude: string[]): Promise<Listing<string>> {
  const params = new URLSearchParams();
  if (include.length > 0) params.set("include", include.join(","));
  if (exclude.length > 0) params.set("exclude", exclude.join(","));
  return getJson(`/api/filter?${params.toString()}`);
}

export function fetchSearch(query: string, fields: string[]): Promise<Listing<SearchHit>> {
  const params = new URLSearchParams({ q: query });
  if (fields.length > 0) params.set("fields", fields.join(","));
  return getJson(`/api/search?${params.toString()}`);
}

export function fetchExplain(article: string, term: string): Promise<Record<string, number>> {
  const params = new URLSearchParams({ term });
  return getJson(`/api/explain/${encodeURIComponent(article)}?${params.toString()}`);
}
