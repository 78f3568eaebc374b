import { EMPTY_FILTER, fromQuery, toQuery, type FilterState } from "./state.js";

// Hash-based routes so the app serves from any static file server. Every
// view's full state lives in the URL: reloading a hash reproduces the view.

export type Route =
  | { kind: "cloud" }
  | { kind: "tag"; tag: string; popular: boolean }
  | { kind: "article"; id: string }
  | { kind: "search"; query: string; fields: string[] }
  | { kind: "filter"; state: FilterState };

export function parseHash(hash: string): Route {
  const raw = hash.replace(/^#/, "") || "/cloud";
  const [path = "", query = ""] = raw.split("?", 2);
  const segments = path.split("/").filter((s) => s.length > 0);
  const params = new URLSearchParams(query);

  switch (segments[0]) {
    case "tag": {
      const tag = decodeURIComponent(segments.slice(1).join("/"));
      return { kind: "tag", tag, popular: params.get("popular") === "true" };
    }
    case "article":
      return { kind: "article", id: decodeURIComponent(segments.slice(1).join("/")) };
    case "search": {
      const fields = (params.get("fields") ?? "")
        .split(",")
        .map((f) => f.trim())
        .filter((f) => f.length > 0);
      return { kind: "search", query: params.get("q") ?? "", fields };
    }
    case "filter":
      return { kind: "filter", state: fromQuery(query) };
    default:
      return { kind: "cloud" };
  }
}

export function routeToHash(route: Route): string {
  switch (route.kind) {
    case "cloud":
      return "#/cloud";
    case "tag": {
      const base = `#/tag/${encodeURIComponent(route.tag)}`;
      return route.popular ? `${base}?popular=true` : base;
    }
    case "article":
      return `#/article/${encodeURIComponent(route.id)}`;
    case "search": {
      const params = new URLSearchParams({ q: route.query });
      if (route.fields.length > 0) params.set("fields", route.fields.join(","));
      return `#/search?${params.toString()}`;
    }
    case "filter": {
      const query = toQuery(route.state);
      return query ? `#/filter?${query}` : "#/filter";
    }
  }
}

export function filterRoute(state: FilterState): Route {
  return { kind: "filter", state };
}

export function defaultRoute(): Route {
  return { kind: "cloud" };
}

export { EMPTY_FILTER };
