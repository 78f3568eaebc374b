// Include/exclude filter state. Pure functions over an immutable value so
// the conflict rule (a tag is never in both sets) is enforced in one place
// and the URL encoding round-trips exactly.

export interface FilterState {
  include: string[];
  exclude: string[];
}

export type ChipKind = "include" | "exclude";

export const EMPTY_FILTER: FilterState = { include: [], exclude: [] };

export function isEmpty(state: FilterState): boolean {
  return state.include.length === 0 && state.exclude.length === 0;
}

/**
 * Add a tag to one side. Returns the unchanged state with an error message
 * when the tag already sits on the other side (mirrors the gateway's
 * conflicting_filter error); adding a tag twice is a no-op.
 */
export function addChip(
  state: FilterState,
  kind: ChipKind,
  tag: string,
): { state: FilterState; error?: string } {
  const other = kind === "include" ? state.exclude : state.include;
  if (other.includes(tag)) {
    return { state, error: `"${tag}" is already on the other side of the filter` };
  }
  const side = state[kind];
  if (side.includes(tag)) {
    return { state };
  }
  return { state: { ...state, [kind]: [...side, tag] } };
}

export function removeChip(state: FilterState, kind: ChipKind, tag: string): FilterState {
  return { ...state, [kind]: state[kind].filter((t) => t !== tag) };
}

/** Serialize for the URL query; empty sides are omitted entirely. */
export function toQuery(state: FilterState): string {
  const params = new URLSearchParams();
  if (state.include.length > 0) params.set("include", state.include.join(","));
  if (state.exclude.length > 0) params.set("exclude", state.exclude.join(","));
  return params.toString();
}

export function fromQuery(query: string): FilterState {
  const params = new URLSearchParams(query);
  const split = (value: string | null): string[] =>
    (value ?? "")
      .split(",")
      .map((part) => part.trim())
      .filter((part) => part.length > 0);
  return { include: split(params.get("include")), exclude: split(params.get("exclude")) };
}
