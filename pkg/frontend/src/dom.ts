// Tiny DOM construction helper; no templating, no innerHTML for data.

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attrs)) {
    node.setAttribute(name, value);
  }
  for (const child of children) {
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}

export function errorBanner(message: string): HTMLElement {
  return el("div", { class: "error-banner", role: "alert" }, [message]);
}

export function emptyState(message: string): HTMLElement {
  return el("p", { class: "empty-state" }, [message]);
}
