import { fetchCloud } from "../api.js";
import { clear, el, emptyState } from "../dom.js";

/**
 * The corpus tag cloud. Font sizes come straight from the payload (the
 * server computed them from log-scaled weights); clicking a tag starts the
 * pivot loop on its page.
 */
export async function renderCloud(container: HTMLElement): Promise<void> {
  const cloud = await fetchCloud();
  clear(container);
  container.append(el("h2", {}, ["Tag cloud"]));
  if (cloud.items.length === 0) {
    container.append(emptyState("no tags"));
    return;
  }
  const box = el("div", { class: "cloud", id: "cloud" });
  for (const entry of cloud.items) {
    box.append(
      el(
        "a",
        {
          class: "cloud-tag",
          href: `#/tag/${encodeURIComponent(entry.tag)}`,
          style: `font-size: ${entry.font}px`,
          "data-tag": entry.tag,
          "data-weight": String(entry.weight),
          title: `${entry.tag}: weight ${entry.weight}`,
        },
        [entry.tag],
      ),
      " ",
    );
  }
  container.append(box);
}
