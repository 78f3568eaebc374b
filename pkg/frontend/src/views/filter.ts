import { fetchFilter } from "../api.js";
import { clear, el, emptyState } from "../dom.js";
import { isEmpty, type FilterState } from "../state.js";

/**
 * The filter view body: the list of articles matching the current chips.
 * The chip bar itself is persistent and lives in the app shell; this view
 * only shows what the include/exclude algebra returns.
 */
export async function renderFilterResults(
  container: HTMLElement,
  state: FilterState,
): Promise<void> {
  clear(container);
  container.append(el("h2", {}, ["Filtered articles"]));
  if (isEmpty(state)) {
    container.append(emptyState("add include or exclude chips to filter articles"));
    return;
  }
  const result = await fetchFilter(state.include, state.exclude);
  if (result.items.length === 0) {
    container.append(emptyState("no article matches this filter"));
    return;
  }
  const list = el("ul", { id: "filter-results" });
  for (const id of result.items) {
    list.append(
      el("li", { "data-article": id }, [
        el("a", { class: "article-link", href: `#/article/${encodeURIComponent(id)}` }, [id]),
      ]),
    );
  }
  container.append(list);
  container.append(el("p", { class: "total" }, [`${result.total} article(s)`]));
}
