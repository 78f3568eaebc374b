import { clear, el, errorBanner } from "./dom.js";
import { filterRoute, parseHash, routeToHash } from "./router.js";
import {
  addChip,
  EMPTY_FILTER,
  isEmpty,
  removeChip,
  type ChipKind,
  type FilterState,
} from "./state.js";
import { renderArticle } from "./views/article.js";
import { renderCloud } from "./views/cloud.js";
import { renderFilterResults } from "./views/filter.js";
import { renderSearch } from "./views/search.js";
import { renderTagPage } from "./views/tag.js";

export interface App {
  /** Render the view for the current location.hash; resolves when done. */
  render(): Promise<void>;
  /** Subscribe to hashchange so the app re-renders on navigation. */
  bind(): void;
  readonly filter: FilterState;
}

/**
 * Wire the single-page app into a mount node. Views fetch from the API and
 * render payloads verbatim; a request-generation counter discards stale
 * responses when navigation outruns a slow fetch.
 */
export function createApp(mount: HTMLElement): App {
  let filter: FilterState = EMPTY_FILTER;
  let generation = 0;

  const header = el("header", {}, [
    el("h1", {}, [el("a", { href: "#/cloud" }, ["tagnav"])]),
    el("nav", {}, [
      el("a", { href: "#/cloud" }, ["cloud"]),
      " ",
      el("a", { href: "#/search" }, ["search"]),
      " ",
      el("a", { href: "#/filter" }, ["filter"]),
    ]),
  ]);
  const filterBar = el("div", { id: "filter-bar", hidden: "" });
  const errorArea = el("div", { id: "error-area" });
  const view = el("main", { id: "view" });
  clear(mount);
  mount.append(header, filterBar, errorArea, view);

  function showHint(message: string): void {
    const hint = filterBar.querySelector("#filter-hint");
    if (hint) {
      hint.textContent = message;
    }
  }

  function applyFilter(next: FilterState): void {
    filter = next;
    renderFilterBar();
    window.location.hash = routeToHash(filterRoute(filter));
  }

  function addFilterChip(kind: ChipKind, tag: string): string | undefined {
    const result = addChip(filter, kind, tag);
    if (result.error) {
      renderFilterBar();
      showHint(result.error);
      return result.error;
    }
    applyFilter(result.state);
    return undefined;
  }

  function renderFilterBar(): void {
    clear(filterBar);
    if (isEmpty(filter)) {
      filterBar.setAttribute("hidden", "");
      return;
    }
    filterBar.removeAttribute("hidden");
    for (const kind of ["include", "exclude"] as const) {
      for (const tag of filter[kind]) {
        const remove = el("button", { class: "chip-remove", "aria-label": `remove ${tag}` }, [
          "×",
        ]);
        remove.addEventListener("click", () => {
          applyFilter(removeChip(filter, kind, tag));
        });
        filterBar.append(
          el("span", { class: `chip chip-${kind}`, "data-kind": kind, "data-tag": tag }, [
            `${kind === "include" ? "+" : "−"}${tag}`,
            remove,
          ]),
          " ",
        );
      }
    }
    filterBar.append(
      el("a", { href: routeToHash(filterRoute(filter)), class: "filter-link" }, ["results"]),
      el("span", { id: "filter-hint", class: "hint" }),
    );
  }

  async function render(): Promise<void> {
    const ticket = ++generation;
    const route = parseHash(window.location.hash);
    if (route.kind === "filter") {
      filter = route.state;
    }
    renderFilterBar();
    clear(errorArea);

    // render into a detached node; attach only if no newer navigation won
    const fresh = el("div", { class: "view-inner" });
    try {
      switch (route.kind) {
        case "cloud":
          await renderCloud(fresh);
          break;
        case "tag":
          await renderTagPage(fresh, route.tag, route.popular, { addFilterChip });
          break;
        case "article":
          await renderArticle(fresh, route.id);
          break;
        case "search":
          await renderSearch(fresh, route.query, route.fields);
          break;
        case "filter":
          await renderFilterResults(fresh, route.state);
          break;
      }
    } catch (error) {
      if (ticket !== generation) {
        return;
      }
      errorArea.append(errorBanner(`request failed: ${(error as Error).message}`));
      return;
    }
    if (ticket !== generation) {
      return;
    }
    clear(view);
    view.append(fresh);
  }

  return {
    render,
    bind(): void {
      window.addEventListener("hashchange", () => {
        void render();
      });
    },
    get filter(): FilterState {
      return filter;
    },
  };
}
