import { fetchSearch } from "../api.js";
import { clear, el, emptyState } from "../dom.js";
import { SEARCH_FIELDS, type SearchHit } from "../types.js";

/** Union of the fields any query term matched in, in canonical field order. */
export function matchedFieldUnion(hit: SearchHit): string[] {
  const present = new Set<string>();
  for (const fields of Object.values(hit.matched_fields)) {
    for (const field of fields) {
      present.add(field);
    }
  }
  return SEARCH_FIELDS.filter((f) => present.has(f));
}

/** A hit is tag-only when no term matched anywhere but the tags field. */
export function isTagOnly(hit: SearchHit): boolean {
  const union = matchedFieldUnion(hit);
  return union.length === 1 && union[0] === "tags";
}

/**
 * Search with per-field toggles. The query and the enabled fields live in
 * the URL, so flipping a toggle navigates (and refetches); results carry
 * one badge per matched field and a "tag-only match" badge for articles
 * found through their tags alone.
 */
export async function renderSearch(
  container: HTMLElement,
  query: string,
  fields: string[],
): Promise<void> {
  const enabled = fields.length > 0 ? fields : [...SEARCH_FIELDS];
  clear(container);
  container.append(el("h2", {}, ["Search"]));

  const form = el("form", { id: "search-form" });
  const input = el("input", { type: "search", id: "q", placeholder: "query terms" });
  input.value = query;
  const submit = el("button", { type: "submit", id: "search-submit" }, ["search"]);
  submit.disabled = query.trim().length === 0 && input.value.trim().length === 0;
  input.addEventListener("input", () => {
    submit.disabled = input.value.trim().length === 0;
  });

  const toggles = el("fieldset", { id: "field-toggles" });
  toggles.append(el("legend", {}, ["fields"]));
  const boxes = new Map<string, HTMLInputElement>();
  for (const field of SEARCH_FIELDS) {
    const box = el("input", { type: "checkbox", id: `field-${field}`, "data-field": field });
    box.checked = enabled.includes(field);
    boxes.set(field, box);
    const label = el("label", {}, [box, ` ${field}`]);
    toggles.append(label, " ");
    box.addEventListener("change", () => {
      if (input.value.trim().length > 0) {
        navigate();
      }
    });
  }

  function navigate(): void {
    const chosen = SEARCH_FIELDS.filter((f) => boxes.get(f)?.checked);
    const params = new URLSearchParams({ q: input.value.trim() });
    if (chosen.length > 0) {
      params.set("fields", chosen.join(","));
    }
    window.location.hash = `#/search?${params.toString()}`;
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (input.value.trim().length > 0) {
      navigate();
    }
  });
  form.append(input, " ", submit, toggles);
  container.append(form);

  if (query.trim().length === 0) {
    container.append(emptyState("type a query to search"));
    return;
  }

  const results = await fetchSearch(query, enabled);
  const list = el("ol", { id: "search-results" });
  for (const hit of results.items) {
    const row = el("li", { "data-article": hit.article, "data-score": String(hit.score) });
    row.append(
      el(
        "a",
        { class: "article-link", href: `#/article/${encodeURIComponent(hit.article)}` },
        [hit.article],
      ),
      el("span", { class: "score" }, [` ${hit.score}`]),
    );
    for (const field of matchedFieldUnion(hit)) {
      row.append(" ", el("span", { class: `badge badge-${field}` }, [field]));
    }
    if (isTagOnly(hit)) {
      row.append(" ", el("span", { class: "badge tag-only" }, ["tag-only match"]));
    }
    list.append(row);
  }
  container.append(
    results.items.length > 0 ? list : emptyState(`nothing found for "${query}"`),
  );
}
