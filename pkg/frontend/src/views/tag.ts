import { fetchRelated, fetchTagArticles } from "../api.js";
import { clear, el, emptyState } from "../dom.js";
import type { ChipKind } from "../state.js";

export interface TagPageActions {
  /** Add the tag as a filter chip; returns an error message on conflict. */
  addFilterChip(kind: ChipKind, tag: string): string | undefined;
}

/**
 * One tag's page: its co-occurring tags (the pivot loop continues by
 * clicking them), the articles carrying it, a popularity toggle that
 * refetches with popular=true, and buttons feeding the filter bar.
 */
export async function renderTagPage(
  container: HTMLElement,
  tag: string,
  popular: boolean,
  actions: TagPageActions,
): Promise<void> {
  const [related, articles] = await Promise.all([
    fetchRelated(tag),
    fetchTagArticles(tag, popular),
  ]);
  clear(container);
  container.append(el("h2", {}, [`Tag: ${tag}`]));

  if (related.total === 0 && articles.total === 0 && !popular) {
    container.append(emptyState(`no articles are tagged "${tag}"`));
    return;
  }

  const chipButtons = el("p", { class: "chip-actions" });
  for (const kind of ["include", "exclude"] as const) {
    const button = el("button", { "data-chip": kind }, [`${kind} in filter`]);
    button.addEventListener("click", () => {
      actions.addFilterChip(kind, tag);
    });
    chipButtons.append(button, " ");
  }
  container.append(chipButtons);

  container.append(el("h3", {}, ["Related tags"]));
  if (related.items.length === 0) {
    container.append(emptyState("no co-occurring tags"));
  } else {
    const list = el("ul", { id: "related-tags" });
    for (const item of related.items) {
      list.append(
        el("li", {}, [
          el(
            "a",
            {
              class: "related-tag",
              href: `#/tag/${encodeURIComponent(item.tag)}`,
              "data-tag": item.tag,
              "data-cooccurrence": String(item.cooccurrence),
            },
            [item.tag],
          ),
          ` (${item.cooccurrence})`,
        ]),
      );
    }
    container.append(list);
  }

  const heading = popular ? "Articles where this tag is top-weighted" : "Articles";
  container.append(el("h3", {}, [heading]));

  const toggle = el("label", { class: "popular-toggle" });
  const checkbox = el("input", { type: "checkbox", id: "popular-toggle" });
  checkbox.checked = popular;
  checkbox.addEventListener("change", () => {
    const suffix = checkbox.checked ? "?popular=true" : "";
    window.location.hash = `#/tag/${encodeURIComponent(tag)}${suffix}`;
  });
  toggle.append(checkbox, " only top-weighted (popular)");
  container.append(toggle);

  if (articles.items.length === 0) {
    container.append(emptyState("nothing here"));
    return;
  }
  const list = el("ol", { id: "tag-articles" });
  for (const ranked of articles.items) {
    list.append(
      el("li", { "data-article": ranked.article }, [
        el(
          "a",
          { class: "article-link", href: `#/article/${encodeURIComponent(ranked.article)}` },
          [ranked.article],
        ),
        el("span", { class: "weight" }, [` weight ${ranked.score}`]),
      ]),
    );
  }
  container.append(list);
}
