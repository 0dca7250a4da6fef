// Dashboard view state. Filters map 1:1 onto API query parameters.

export interface Filters {
  period?: string; // YYYY-MM-DD..YYYY-MM-DD
  lang?: string;
  category?: string;
  source_kind?: string;
  polarity?: string;
  influence?: string;
}

export interface ViewState {
  filters: Filters;
  selectedMention: number | null;
  pollIntervalMs: number;
  pageSize: number;
  topN: number;
}

export const DEFAULT_POLL_INTERVAL_MS = 15 * 60 * 1000;

export function initialState(): ViewState {
  return {
    filters: {},
    selectedMention: null,
    pollIntervalMs: DEFAULT_POLL_INTERVAL_MS,
    pageSize: 20,
    topN: 10,
  };
}

const FILTER_KEYS: (keyof Filters)[] = [
  "period",
  "lang",
  "category",
  "source_kind",
  "polarity",
  "influence",
];

/** Every filter becomes exactly the query parameter of the same name. */
export function filtersToQuery(filters: Filters): URLSearchParams {
  const params = new URLSearchParams();
  for (const key of FILTER_KEYS) {
    const value = filters[key];
    if (value !== undefined && value !== "") {
      params.set(key, value);
    }
  }
  return params;
}
