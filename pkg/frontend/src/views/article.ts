import { ApiError, fetchArticle } from "../api.js";
import { clear, el, emptyState } from "../dom.js";

/**
 * An article with all four ways onward one click apart: its weighted tags
 * (tag pages), its categories, its resolved links (article pages), plus
 * the text itself.
 */
export async function renderArticle(container: HTMLElement, id: string): Promise<void> {
  let article;
  try {
    article = await fetchArticle(id);
  } catch (error) {
    if (error instanceof ApiError && error.status === 404) {
      clear(container);
      container.append(emptyState(`no article with id "${id}"`));
      return;
    }
    throw error;
  }
  clear(container);
  container.append(el("h2", {}, [article.title || article.id]));
  container.append(el("p", { class: "content" }, [article.content]));

  container.append(el("h3", {}, ["Tags"]));
  if (article.tags.length === 0) {
    container.append(emptyState("untagged"));
  } else {
    const tags = el("ul", { id: "article-tags" });
    for (const { tag, weight } of article.tags) {
      tags.append(
        el("li", {}, [
          el(
            "a",
            { class: "tag-link", href: `#/tag/${encodeURIComponent(tag)}`, "data-tag": tag },
            [tag],
          ),
          el("span", { class: "weight" }, [` ×${weight}`]),
        ]),
      );
    }
    container.append(tags);
  }

  container.append(el("h3", {}, ["Categories"]));
  const categories = el("ul", { id: "categories" });
  for (const name of article.categories) {
    categories.append(el("li", {}, [name]));
  }
  container.append(article.categories.length > 0 ? categories : emptyState("uncategorized"));

  container.append(el("h3", {}, ["Linked articles"]));
  const links = el("ul", { id: "links" });
  for (const target of article.links) {
    links.append(
      el("li", {}, [
        el(
          "a",
          { class: "article-link", href: `#/article/${encodeURIComponent(target)}` },
          [target],
        ),
      ]),
    );
  }
  container.append(article.links.length > 0 ? links : emptyState("no outgoing links"));
}
