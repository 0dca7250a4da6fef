// Payload shapes mirroring the monitoring API responses.

export interface AggregateRow {
  day: string;
  category_path: string;
  lang: string;
  polarity: string;
  source_kind: string;
  count: number;
}

export interface MatchRef {
  keyword_id: string;
  category_path: string;
}

export interface Mention {
  mention_id: number;
  source_id: string;
  native_id: string;
  text: string;
  lang: string;
  timestamp: string;
  author_id: string;
  matches: MatchRef[];
  polarity: string | null;
  corrected: string | null;
  is_repost: boolean;
  in_census: boolean;
  source_kind: string;
}

export interface AuthorRow {
  author_id: string;
  mentions: number;
}

export interface SpreadRow {
  mention: Mention;
  reposts: number;
}

export interface TaxonomyPayload {
  version: number;
  content: string;
}

export interface HealthPayload {
  status: string;
  version: string;
  view_version: number;
  taxonomy_version: number;
}

export type PolarityLabel = "positive" | "negative" | "neutral";

export const POLARITIES: PolarityLabel[] = ["positive", "negative", "neutral"];

/** The label a mention displays and aggregates under: correction wins. */
export function effectiveLabel(m: Mention): string {
  return m.corrected ?? m.polarity ?? "none";
}
