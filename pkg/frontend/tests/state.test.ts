import { describe, expect, it } from "vitest";

import { parseHash, routeToHash } from "../src/router.js";
import { addChip, EMPTY_FILTER, fromQuery, isEmpty, removeChip, toQuery } from "../src/state.js";
import { isTagOnly, matchedFieldUnion } from "../src/views/search.js";

describe("filter state", () => {
  it("adds chips to either side", () => {
    const a = addChip(EMPTY_FILTER, "include", "x");
    expect(a.error).toBeUndefined();
    const b = addChip(a.state, "exclude", "z");
    expect(b.state).toEqual({ include: ["x"], exclude: ["z"] });
  });

  it("rejects a tag already on the other side", () => {
    const { state } = addChip(EMPTY_FILTER, "include", "x");
    const rejected = addChip(state, "exclude", "x");
    expect(rejected.error).toMatch(/other side/);
    expect(rejected.state).toEqual(state);
  });

  it("ignores duplicate adds", () => {
    const once = addChip(EMPTY_FILTER, "include", "x").state;
    const twice = addChip(once, "include", "x").state;
    expect(twice).toEqual(once);
  });

  it("removes chips and can empty out", () => {
    const state = addChip(addChip(EMPTY_FILTER, "include", "x").state, "exclude", "z").state;
    const next = removeChip(removeChip(state, "include", "x"), "exclude", "z");
    expect(isEmpty(next)).toBe(true);
  });

  it("round-trips through the URL query", () => {
    const state = { include: ["x", "science fiction"], exclude: ["z"] };
    expect(fromQuery(toQuery(state))).toEqual(state);
    expect(fromQuery("")).toEqual(EMPTY_FILTER);
  });
});

describe("routes", () => {
  it("defaults to the cloud", () => {
    expect(parseHash("")).toEqual({ kind: "cloud" });
    expect(parseHash("#/nonsense")).toEqual({ kind: "cloud" });
  });

  it("round-trips every route kind", () => {
    const routes = [
      { kind: "cloud" },
      { kind: "tag", tag: "science fiction", popular: false },
      { kind: "tag", tag: "x", popular: true },
      { kind: "article", id: "a5" },
      { kind: "search", query: "programming", fields: ["content", "tags"] },
      { kind: "filter", state: { include: ["x"], exclude: ["z"] } },
    ] as const;
    for (const route of routes) {
      expect(parseHash(routeToHash(route))).toEqual(route);
    }
  });
});

describe("search badges", () => {
  it("unions matched fields in canonical order", () => {
    const hit = {
      article: "a1",
      score: 1,
      matched_fields: { alpha: ["content", "tags"], beta: ["title"] },
    };
    expect(matchedFieldUnion(hit)).toEqual(["title", "content", "tags"]);
    expect(isTagOnly(hit)).toBe(false);
  });

  it("flags tag-only matches", () => {
    const hit = { article: "a4", score: 1, matched_fields: { programming: ["tags"] } };
    expect(isTagOnly(hit)).toBe(true);
  });
});
