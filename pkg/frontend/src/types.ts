// Payload shapes, mirroring the gateway's canonical JSON exactly.
// The UI never recomputes weights, rankings or font sizes; it renders
// these objects as-is, in the order the API returned them.

export interface Listing<T> {
  items: T[];
  total: number;
}

export interface CloudEntry {
  tag: string;
  weight: number;
  font: number;
}

export interface RelatedTag {
  tag: string;
  cooccurrence: number;
}

export interface RankedArticle {
  article: string;
  score: number;
}

export interface TagWeight {
  tag: string;
  weight: number;
}

export interface ArticlePayload {
  id: string;
  title: string;
  content: string;
  categories: string[];
  links: string[];
  tags: TagWeight[];
}

/** matched_fields maps each query term to the fields containing it. */
export interface SearchHit {
  article: string;
  score: number;
  matched_fields: Record<string, string[]>;
}

export interface ApiErrorPayload {
  code: string;
  message: string;
}

export const SEARCH_FIELDS = ["title", "content", "categories", "tags"] as const;
export type SearchField = (typeof SEARCH_FIELDS)[number];
