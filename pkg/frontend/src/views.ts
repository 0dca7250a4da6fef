// The six dashboard views. Each is a pure function of API payloads (plus
// view state) returning a virtual tree; every displayed number is a count
// field from an API response or a sum of such fields, never recomputed
// from raw mentions.

import { h, VNode } from "./dom.js";
import type { AggregateRow, AuthorRow, Mention, SpreadRow } from "./types.js";
import { POLARITIES, effectiveLabel } from "./types.js";

function sumBy<T>(rows: T[], key: (row: T) => string, value: (row: T) => number): Map<string, number> {
  const out = new Map<string, number>();
  for (const row of rows) {
    const k = key(row);
    out.set(k, (out.get(k) ?? 0) + value(row));
  }
  return out;
}

function emptyState(message: string): VNode {
  return h("p", { class: "empty" }, message);
}

function topCategory(path: string): string {
  const slash = path.indexOf("/");
  return slash === -1 ? path : path.slice(0, slash);
}

function leafCategory(path: string): string {
  const slash = path.lastIndexOf("/");
  return slash === -1 ? path : path.slice(slash + 1);
}

function bar(kind: string, count: number, max: number): VNode {
  const width = max > 0 ? Math.round((count / max) * 100) : 0;
  return h(
    "div",
    { class: `bar bar-${kind}`, "data-count": String(count), style: `width:${width}%` },
    String(count),
  );
}

/** 1. Popularity / sympathy / antipathy comparison per top category. */
export function polarityComparisonView(rows: AggregateRow[]): VNode {
  if (!rows.length) {
    return h("section", { id: "view-comparison" }, emptyState("no aggregates yet"));
  }
  const popularity = sumBy(rows, (r) => topCategory(r.category_path), (r) => r.count);
  const byPolarity = new Map<string, Map<string, number>>();
  for (const polarity of POLARITIES) {
    byPolarity.set(
      polarity,
      sumBy(
        rows.filter((r) => r.polarity === polarity),
        (r) => topCategory(r.category_path),
        (r) => r.count,
      ),
    );
  }
  const categories = [...popularity.keys()].sort();
  const max = Math.max(...popularity.values());
  return h(
    "section",
    { id: "view-comparison" },
    h("h2", {}, "Popularity / sympathy / antipathy"),
    ...categories.map((category) =>
      h(
        "div",
        { class: "category-row", "data-category": category },
        h("span", { class: "category-name" }, category),
        bar("popularity", popularity.get(category) ?? 0, max),
        bar("sympathy", byPolarity.get("positive")!.get(category) ?? 0, max),
        bar("antipathy", byPolarity.get("negative")!.get(category) ?? 0, max),
      ),
    ),
  );
}

/** 2. Mention volume across time (one bar per day). */
export function volumeTimelineView(rows: AggregateRow[]): VNode {
  if (!rows.length) {
    return h("section", { id: "view-timeline" }, emptyState("no aggregates yet"));
  }
  const perDay = sumBy(rows, (r) => r.day, (r) => r.count);
  const days = [...perDay.keys()].sort();
  const max = Math.max(...perDay.values());
  return h(
    "section",
    { id: "view-timeline" },
    h("h2", {}, "Mentions over time"),
    ...days.map((day) =>
      h(
        "div",
        { class: "day-row", "data-day": day },
        h("span", { class: "day-label" }, day),
        bar("volume", perDay.get(day) ?? 0, max),
      ),
    ),
  );
}

/** 3. Most recent mentions with inline polarity correction. */
export function recentMentionsView(mentions: Mention[]): VNode {
  if (!mentions.length) {
    return h("section", { id: "view-recent" }, emptyState("no mentions yet"));
  }
  return h(
    "section",
    { id: "view-recent" },
    h("h2", {}, "Recent mentions"),
    h(
      "ul",
      { class: "mention-list" },
      ...mentions.map((m) =>
        h(
          "li",
          { class: "mention", "data-mention-id": String(m.mention_id), "data-label": effectiveLabel(m) },
          h("span", { class: "mention-time" }, m.timestamp),
          h("span", { class: "mention-lang" }, m.lang),
          h("span", { class: `label label-${effectiveLabel(m)}` }, effectiveLabel(m)),
          h("span", { class: "mention-text" }, m.text),
          h(
            "span",
            { class: "correct" },
            ...POLARITIES.map((p) =>
              h(
                "button",
                { class: "correct-btn", "data-mention-id": String(m.mention_id), "data-set-label": p },
                p[0]!.toUpperCase(),
              ),
            ),
          ),
        ),
      ),
    ),
  );
}

/** 4. Most widespread mentions (by repost count). */
export function widespreadView(spread: SpreadRow[]): VNode {
  if (!spread.length) {
    return h("section", { id: "view-spread" }, emptyState("no reposted mentions yet"));
  }
  return h(
    "section",
    { id: "view-spread" },
    h("h2", {}, "Most widespread"),
    h(
      "ol",
      { class: "spread-list" },
      ...spread.map((row) =>
        h(
          "li",
          { "data-native-id": row.mention.native_id, "data-reposts": String(row.reposts) },
          h("span", { class: "spread-count" }, String(row.reposts)),
          h("span", { class: "mention-text" }, row.mention.text),
        ),
      ),
    ),
  );
}

/** 5. Most active authors. */
export function activeAuthorsView(authors: AuthorRow[]): VNode {
  if (!authors.length) {
    return h("section", { id: "view-authors" }, emptyState("no authors yet"));
  }
  return h(
    "section",
    { id: "view-authors" },
    h("h2", {}, "Most active authors"),
    h(
      "ol",
      { class: "author-list" },
      ...authors.map((a) =>
        h(
          "li",
          { "data-author": a.author_id, "data-count": String(a.mentions) },
          h("span", { class: "author-name" }, a.author_id),
          h("span", { class: "author-count" }, String(a.mentions)),
        ),
      ),
    ),
  );
}

/** 6. Most frequent topics (leaf categories by mention-entity count). */
export function frequentTopicsView(rows: AggregateRow[]): VNode {
  if (!rows.length) {
    return h("section", { id: "view-topics" }, emptyState("no aggregates yet"));
  }
  const perLeaf = sumBy(rows, (r) => leafCategory(r.category_path), (r) => r.count);
  const ranked = [...perLeaf.entries()].sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]));
  return h(
    "section",
    { id: "view-topics" },
    h("h2", {}, "Frequent topics"),
    h(
      "ol",
      { class: "topic-list" },
      ...ranked.map(([leaf, count]) =>
        h(
          "li",
          { "data-topic": leaf, "data-count": String(count) },
          h("span", { class: "topic-name" }, leaf),
          h("span", { class: "topic-count" }, String(count)),
        ),
      ),
    ),
  );
}
