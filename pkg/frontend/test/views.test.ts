// Data-binding assertions for the six views against fixture API payloads.

import assert from "node:assert/strict";
import { after, before, test } from "node:test";
import { ApiClient } from "../src/api.js";
import { findAll, textContent } from "../src/dom.js";
import {
  activeAuthorsView,
  frequentTopicsView,
  polarityComparisonView,
  recentMentionsView,
  volumeTimelineView,
  widespreadView,
} from "../src/views.js";
import { FixtureApi, fixtureMention } from "./fixture_server.js";

const server = new FixtureApi();
let api: ApiClient;

before(async () => {
  server.mentions = [
    fixtureMention({ polarity: "positive", matches: [{ keyword_id: "k1", category_path: "politics/pnv" }] }),
    fixtureMention({ polarity: "positive", matches: [{ keyword_id: "k1", category_path: "politics/pnv" }] }),
    fixtureMention({ polarity: "negative", matches: [{ keyword_id: "k2", category_path: "politics/podemos" }] }),
    fixtureMention({ polarity: "neutral", matches: [{ keyword_id: "k3", category_path: "culture/music" }] }),
    fixtureMention({
      polarity: "neutral",
      corrected: "negative",
      matches: [{ keyword_id: "k1", category_path: "politics/pnv" }],
      timestamp: "2016-09-11T09:00:00Z",
    }),
    fixtureMention({ is_repost: true, repost_of: "t1" }),
    fixtureMention({ is_repost: true, repost_of: "t1" }),
    fixtureMention({ is_repost: true, repost_of: "t3" }),
  ];
  const baseUrl = await server.start();
  api = new ApiClient({ baseUrl, token: server.token });
});

after(async () => {
  await server.stop();
});

test("comparison view binds per-category popularity and polarity sums", async () => {
  const rows = await api.aggregates({});
  const view = polarityComparisonView(rows);
  const politics = findAll(view, (n) => n.attrs["data-category"] === "politics")[0];
  assert.ok(politics, "politics row rendered");
  const bars = findAll(politics!, (n) => (n.attrs["class"] ?? "").includes("bar"));
  const byKind = Object.fromEntries(
    bars.map((b) => [b.attrs["class"]!.replace("bar bar-", ""), Number(b.attrs["data-count"])]),
  );
  const politicsRows = rows.filter((r) => r.category_path.startsWith("politics"));
  const total = politicsRows.reduce((acc, r) => acc + r.count, 0);
  const positive = politicsRows.filter((r) => r.polarity === "positive").reduce((a, r) => a + r.count, 0);
  const negative = politicsRows.filter((r) => r.polarity === "negative").reduce((a, r) => a + r.count, 0);
  assert.equal(byKind["popularity"], total);
  assert.equal(byKind["sympathy"], positive);
  assert.equal(byKind["antipathy"], negative);
  // The corrected mention aggregates as negative, never as its predicted label.
  assert.equal(negative >= 1, true);
});

test("timeline view binds one bar per day with summed counts", async () => {
  const rows = await api.aggregates({});
  const view = volumeTimelineView(rows);
  const dayNodes = findAll(view, (n) => n.attrs["data-day"] !== undefined);
  const days = [...new Set(rows.map((r) => r.day))].sort();
  assert.deepEqual(dayNodes.map((n) => n.attrs["data-day"]), days);
  for (const dayNode of dayNodes) {
    const expected = rows
      .filter((r) => r.day === dayNode.attrs["data-day"])
      .reduce((acc, r) => acc + r.count, 0);
    const bar = findAll(dayNode, (n) => n.attrs["data-count"] !== undefined)[0];
    assert.equal(Number(bar!.attrs["data-count"]), expected);
  }
});

test("recent mentions view binds text and effective label", async () => {
  const mentions = await api.mentions({}, 0, 20);
  const view = recentMentionsView(mentions);
  const items = findAll(view, (n) => n.attrs["data-mention-id"] !== undefined && n.tag === "li");
  assert.equal(items.length, mentions.length);
  for (let i = 0; i < mentions.length; i++) {
    const mention = mentions[i]!;
    const item = items[i]!;
    assert.equal(item.attrs["data-mention-id"], String(mention.mention_id));
    assert.equal(item.attrs["data-label"], mention.corrected ?? mention.polarity ?? "none");
    assert.ok(textContent(item).includes(mention.text));
  }
  const corrected = items.find((i) => i.attrs["data-label"] === "negative" && i.attrs["data-mention-id"] === "5");
  assert.ok(corrected, "correction shown instead of predicted label");
});

test("widespread view binds repost counts in rank order", async () => {
  const spread = await api.spread(10);
  const view = widespreadView(spread);
  const items = findAll(view, (n) => n.attrs["data-reposts"] !== undefined);
  assert.equal(items.length, spread.length);
  assert.deepEqual(
    items.map((n) => [n.attrs["data-native-id"], Number(n.attrs["data-reposts"])]),
    spread.map((s) => [s.mention.native_id, s.reposts]),
  );
  assert.equal(items[0]!.attrs["data-native-id"], "t1");
  assert.equal(Number(items[0]!.attrs["data-reposts"]), 2);
});

test("active authors view binds mention counts", async () => {
  const authors = await api.topAuthors(10);
  const view = activeAuthorsView(authors);
  const items = findAll(view, (n) => n.attrs["data-author"] !== undefined);
  assert.deepEqual(
    items.map((n) => [n.attrs["data-author"], Number(n.attrs["data-count"])]),
    authors.map((a) => [a.author_id, a.mentions]),
  );
});

test("frequent topics view ranks leaf categories by summed counts", async () => {
  const rows = await api.aggregates({});
  const view = frequentTopicsView(rows);
  const items = findAll(view, (n) => n.attrs["data-topic"] !== undefined);
  const expected = new Map<string, number>();
  for (const r of rows) {
    const leaf = r.category_path.split("/").pop()!;
    expected.set(leaf, (expected.get(leaf) ?? 0) + r.count);
  }
  const ranked = [...expected.entries()].sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]));
  assert.deepEqual(
    items.map((n) => [n.attrs["data-topic"], Number(n.attrs["data-count"])]),
    ranked,
  );
});

test("every view renders an empty state on empty payloads", () => {
  for (const view of [
    polarityComparisonView([]),
    volumeTimelineView([]),
    recentMentionsView([]),
    widespreadView([]),
    activeAuthorsView([]),
    frequentTopicsView([]),
  ]) {
    const empties = findAll(view, (n) => (n.attrs["class"] ?? "") === "empty");
    assert.equal(empties.length, 1);
  }
});
