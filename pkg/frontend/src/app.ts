// Dashboard application: per-view loaders, polling, optimistic polarity
// correction (revert on error) and the taxonomy editor save path.

import { ApiClient } from "./api.js";
import { VNode } from "./dom.js";
import { Filters, ViewState, initialState } from "./state.js";
import {
  KeywordRecord,
  parseTaxonomy,
  serializeTaxonomy,
  validateAll,
} from "./taxonomy.js";
import type { AggregateRow, AuthorRow, Mention, PolarityLabel, SpreadRow } from "./types.js";
import {
  activeAuthorsView,
  frequentTopicsView,
  polarityComparisonView,
  recentMentionsView,
  volumeTimelineView,
  widespreadView,
} from "./views.js";

export const VIEW_NAMES = [
  "comparison",
  "timeline",
  "recent",
  "spread",
  "authors",
  "topics",
] as const;

export type ViewName = (typeof VIEW_NAMES)[number];

export interface RenderedViews {
  comparison: VNode;
  timeline: VNode;
  recent: VNode;
  spread: VNode;
  authors: VNode;
  topics: VNode;
}

interface ViewData {
  comparison: AggregateRow[];
  timeline: AggregateRow[];
  topics: AggregateRow[];
  recent: Mention[];
  spread: SpreadRow[];
  authors: AuthorRow[];
}

export class DashboardApp {
  readonly state: ViewState;
  private data: ViewData = {
    comparison: [],
    timeline: [],
    topics: [],
    recent: [],
    spread: [],
    authors: [],
  };
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(
    private api: ApiClient,
    private onRender: (views: RenderedViews) => void = () => {},
    state: ViewState = initialState(),
  ) {
    this.state = state;
  }

  /** One fetch per view; each view's query derives from the shared filters. */
  async refreshAll(): Promise<void> {
    const f = this.state.filters;
    const [comparison, timeline, topics, recent, spread, authors] = await Promise.all([
      this.api.aggregates(f),
      this.api.aggregates(f),
      this.api.aggregates(f),
      this.api.mentions(f, 0, this.state.pageSize),
      this.api.spread(this.state.topN, f.period),
      this.api.topAuthors(this.state.topN, f.period),
    ]);
    this.data = { comparison, timeline, topics, recent, spread, authors };
    this.render();
  }

  setFilters(filters: Filters): Promise<void> {
    this.state.filters = { ...filters };
    return this.refreshAll();
  }

  render(): RenderedViews {
    const views: RenderedViews = {
      comparison: polarityComparisonView(this.data.comparison),
      timeline: volumeTimelineView(this.data.timeline),
      recent: recentMentionsView(this.data.recent),
      spread: widespreadView(this.data.spread),
      authors: activeAuthorsView(this.data.authors),
      topics: frequentTopicsView(this.data.topics),
    };
    this.onRender(views);
    return views;
  }

  get recentMentions(): Mention[] {
    return this.data.recent;
  }

  /** PATCH the corrected label, updating the list optimistically and
   * rolling back if the request fails. */
  async correctPolarity(mentionId: number, label: PolarityLabel): Promise<boolean> {
    const mention = this.data.recent.find((m) => m.mention_id === mentionId);
    const previous = mention?.corrected ?? null;
    if (mention) {
      mention.corrected = label;
      this.render();
    }
    try {
      await this.api.patchPolarity(mentionId, label);
      return true;
    } catch (err) {
      if (mention) {
        mention.corrected = previous;
        this.render();
      }
      return false;
    }
  }

  /** Validate the draft client-side, then PUT it in the file format. */
  async saveTaxonomy(records: KeywordRecord[]): Promise<{ version: number; keywords: number }> {
    const problems = validateAll(records);
    if (problems.size) {
      const first = [...problems.entries()][0]!;
      throw new Error(`record ${first[0] + 1}: ${first[1].join("; ")}`);
    }
    return this.api.putTaxonomy(serializeTaxonomy(records));
  }

  async loadTaxonomyDraft(): Promise<KeywordRecord[]> {
    const payload = await this.api.taxonomy();
    return parseTaxonomy(payload.content);
  }

  startPolling(): void {
    this.stopPolling();
    this.timer = setInterval(() => {
      void this.refreshAll();
    }, this.state.pollIntervalMs);
  }

  stopPolling(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}
