"""SQLite-backed store for mentions, labels, authors and sources.

Dashboard queries are answered from a materialized aggregate table that is
rebuilt atomically by refresh_view: readers keep seeing the previous
version until the swap commits. Writes go through a single connection
guarded by a lock (single-writer contract); each reader thread gets its own
connection and WAL snapshot isolation.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from dataclasses import dataclass, field, replace
from datetime import datetime
from pathlib import Path
from typing import Iterable, Iterator

from .timeutil import parse_rfc3339, to_rfc3339, utcnow

LABELS = ("positive", "negative", "neutral")
UNLABELED = "none"
INFLUENCE_TIERS = ("<1k", "1k-10k", ">10k")


def influence_tier(followers_total: int) -> str:
    if followers_total < 1_000:
        return "<1k"
    if followers_total <= 10_000:
        return "1k-10k"
    return ">10k"


class StoreError(Exception):
    pass


class DuplicateMention(StoreError):
    pass


class InvalidMention(StoreError):
    pass


class NotFound(StoreError):
    pass


@dataclass(frozen=True)
class MentionRecord:
    source_id: str
    native_id: str
    unit_text: str
    lang: str
    timestamp: datetime
    author_id: str
    matches: tuple[tuple[str, str], ...]  # (keyword_id, category_path "a/b/c")
    predicted_label: str | None = None
    corrected_label: str | None = None
    is_repost: bool = False
    repost_of: str | None = None
    in_census: bool = False
    source_kind: str = "social"
    unit_span: tuple[int, int] = (0, 0)
    full_text_ref: str | None = None
    mention_id: int | None = None


@dataclass(frozen=True)
class AggregateRow:
    day: str
    category_path: str
    lang: str
    polarity: str
    source_kind: str
    count: int


_SCHEMA = """
CREATE TABLE IF NOT EXISTS meta(key TEXT PRIMARY KEY, value TEXT NOT NULL);
CREATE TABLE IF NOT EXISTS dedup(
  source_id TEXT NOT NULL, native_id TEXT NOT NULL,
  PRIMARY KEY(source_id, native_id)
);
CREATE TABLE IF NOT EXISTS mentions(
  mention_id INTEGER PRIMARY KEY AUTOINCREMENT,
  source_id TEXT NOT NULL,
  native_id TEXT NOT NULL,
  unit_start INTEGER NOT NULL,
  unit_end INTEGER NOT NULL,
  unit_text TEXT NOT NULL,
  full_text_ref TEXT,
  lang TEXT NOT NULL,
  ts TEXT NOT NULL,
  day TEXT NOT NULL,
  author_id TEXT NOT NULL,
  predicted_label TEXT,
  corrected_label TEXT,
  is_repost INTEGER NOT NULL DEFAULT 0,
  repost_of TEXT,
  in_census INTEGER NOT NULL DEFAULT 0,
  source_kind TEXT NOT NULL,
  UNIQUE(source_id, native_id, unit_start, unit_end)
);
CREATE INDEX IF NOT EXISTS idx_mentions_day ON mentions(day);
CREATE INDEX IF NOT EXISTS idx_mentions_author ON mentions(author_id);
CREATE TABLE IF NOT EXISTS matches(
  mention_id INTEGER NOT NULL REFERENCES mentions(mention_id) ON DELETE CASCADE,
  keyword_id TEXT NOT NULL,
  category_path TEXT NOT NULL
);
CREATE INDEX IF NOT EXISTS idx_matches_mention ON matches(mention_id);
CREATE TABLE IF NOT EXISTS corrections(
  id INTEGER PRIMARY KEY AUTOINCREMENT,
  mention_id INTEGER NOT NULL,
  old_label TEXT,
  new_label TEXT NOT NULL,
  operator_id TEXT NOT NULL,
  at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS authors(
  author_id TEXT PRIMARY KEY,
  followers_total INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS sources(
  source_id TEXT PRIMARY KEY,
  kind TEXT NOT NULL,
  endpoint TEXT NOT NULL,
  poll_interval INTEGER NOT NULL DEFAULT 300,
  enabled INTEGER NOT NULL DEFAULT 1
);
CREATE TABLE IF NOT EXISTS agg(
  version INTEGER NOT NULL,
  day TEXT NOT NULL,
  category_path TEXT NOT NULL,
  lang TEXT NOT NULL,
  polarity TEXT NOT NULL,
  source_kind TEXT NOT NULL,
  tier TEXT NOT NULL,
  count INTEGER NOT NULL
);
CREATE INDEX IF NOT EXISTS idx_agg_version ON agg(version);
"""

_TIER_SQL = (
    "CASE WHEN COALESCE(a.followers_total, 0) < 1000 THEN '<1k' "
    "WHEN COALESCE(a.followers_total, 0) <= 10000 THEN '1k-10k' "
    "ELSE '>10k' END"
)


class Store:
    def __init__(self, path: str | Path):
        self._path = str(path)
        self._memory = self._path == ":memory:"
        self._lock = threading.RLock()
        self._write = sqlite3.connect(self._path, check_same_thread=False)
        self._write.execute("PRAGMA journal_mode=WAL")
        self._write.execute("PRAGMA synchronous=NORMAL")
        self._write.execute("PRAGMA foreign_keys=ON")
        with self._lock, self._write:
            self._write.executescript(_SCHEMA)
            self._write.execute(
                "INSERT OR IGNORE INTO meta(key, value) VALUES('view_version', '0')"
            )
        self._local = threading.local()

    def close(self) -> None:
        with self._lock:
            self._write.close()

    # -- connections --------------------------------------------------------
    def _reader(self) -> sqlite3.Connection:
        if self._memory:
            return self._write
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = sqlite3.connect(self._path, check_same_thread=False)
            conn.execute("PRAGMA busy_timeout=10000")
            self._local.conn = conn
        return conn

    # -- dedup admission -----------------------------------------------------
    def admit(self, source_id: str, native_id: str) -> bool:
        """True exactly once per (source_id, native_id), persisted."""
        with self._lock, self._write:
            cur = self._write.execute(
                "INSERT OR IGNORE INTO dedup(source_id, native_id) VALUES(?, ?)",
                (source_id, native_id),
            )
            return cur.rowcount == 1

    def seen(self, source_id: str, native_id: str) -> bool:
        row = self._reader().execute(
            "SELECT 1 FROM dedup WHERE source_id = ? AND native_id = ?",
            (source_id, native_id),
        ).fetchone()
        return row is not None

    # -- mentions -------------------------------------------------------------
    def insert_mention(self, record: MentionRecord) -> int:
        if not record.matches:
            raise InvalidMention("mention carries no keyword matches")
        if record.predicted_label is not None and record.predicted_label not in LABELS:
            raise InvalidMention(f"bad predicted label {record.predicted_label!r}")
        with self._lock:
            try:
                with self._write:
                    cur = self._write.execute(
                        "INSERT INTO mentions(source_id, native_id, unit_start, unit_end,"
                        " unit_text, full_text_ref, lang, ts, day, author_id,"
                        " predicted_label, corrected_label, is_repost, repost_of,"
                        " in_census, source_kind)"
                        " VALUES(?,?,?,?,?,?,?,?,?,?,?,?,?,?,?,?)",
                        (
                            record.source_id,
                            record.native_id,
                            record.unit_span[0],
                            record.unit_span[1],
                            record.unit_text,
                            record.full_text_ref,
                            record.lang,
                            to_rfc3339(record.timestamp),
                            to_rfc3339(record.timestamp)[:10],
                            record.author_id,
                            record.predicted_label,
                            record.corrected_label,
                            int(record.is_repost),
                            record.repost_of,
                            int(record.in_census),
                            record.source_kind,
                        ),
                    )
                    mention_id = cur.lastrowid
                    self._write.executemany(
                        "INSERT INTO matches(mention_id, keyword_id, category_path) VALUES(?,?,?)",
                        [(mention_id, kid, path) for kid, path in record.matches],
                    )
            except sqlite3.IntegrityError as exc:
                raise DuplicateMention(
                    f"{record.source_id}/{record.native_id} span {record.unit_span}"
                ) from exc
        return mention_id

    def get_mention(self, mention_id: int) -> MentionRecord:
        row = self._reader().execute(
            "SELECT * FROM mentions WHERE mention_id = ?", (mention_id,)
        ).fetchone()
        if row is None:
            raise NotFound(f"mention {mention_id}")
        return self._record_from_row(row)

    def _record_from_row(self, row: tuple) -> MentionRecord:
        (
            mention_id, source_id, native_id, unit_start, unit_end, unit_text,
            full_text_ref, lang, ts, _day, author_id, predicted, corrected,
            is_repost, repost_of, in_census, source_kind,
        ) = row
        matches = tuple(
            (kid, path)
            for kid, path in self._reader().execute(
                "SELECT keyword_id, category_path FROM matches WHERE mention_id = ?"
                " ORDER BY rowid",
                (mention_id,),
            )
        )
        return MentionRecord(
            mention_id=mention_id,
            source_id=source_id,
            native_id=native_id,
            unit_span=(unit_start, unit_end),
            unit_text=unit_text,
            full_text_ref=full_text_ref,
            lang=lang,
            timestamp=parse_rfc3339(ts),
            author_id=author_id,
            predicted_label=predicted,
            corrected_label=corrected,
            is_repost=bool(is_repost),
            repost_of=repost_of,
            in_census=bool(in_census),
            source_kind=source_kind,
            matches=matches,
        )

    def count_mentions(self) -> int:
        return self._reader().execute("SELECT COUNT(*) FROM mentions").fetchone()[0]

    # -- label corrections -----------------------------------------------------
    def correct_label(self, mention_id: int, label: str, operator_id: str) -> None:
        if label not in LABELS:
            raise InvalidMention(f"bad label {label!r}")
        with self._lock, self._write:
            row = self._write.execute(
                "SELECT predicted_label, corrected_label FROM mentions WHERE mention_id = ?",
                (mention_id,),
            ).fetchone()
            if row is None:
                raise NotFound(f"mention {mention_id}")
            predicted, corrected = row
            if corrected == label:
                return  # idempotent re-apply
            self._write.execute(
                "UPDATE mentions SET corrected_label = ? WHERE mention_id = ?",
                (label, mention_id),
            )
            self._write.execute(
                "INSERT INTO corrections(mention_id, old_label, new_label, operator_id, at)"
                " VALUES(?,?,?,?,?)",
                (mention_id, corrected or predicted, label, operator_id, to_rfc3339(utcnow())),
            )

    def corrections_log(self, mention_id: int | None = None) -> list[tuple]:
        sql = "SELECT mention_id, old_label, new_label, operator_id, at FROM corrections"
        args: tuple = ()
        if mention_id is not None:
            sql += " WHERE mention_id = ?"
            args = (mention_id,)
        return self._reader().execute(sql + " ORDER BY id", args).fetchall()

    def corrected_examples(self, lang: str) -> list[tuple[str, str]]:
        """(unit_text, corrected_label) pairs for retraining."""
        rows = self._reader().execute(
            "SELECT unit_text, corrected_label FROM mentions"
            " WHERE corrected_label IS NOT NULL AND lang = ? ORDER BY mention_id",
            (lang,),
        ).fetchall()
        return [(text, label) for text, label in rows]

    # -- authors / sources -------------------------------------------------------
    def upsert_author(self, author_id: str, followers_total: int) -> None:
        with self._lock, self._write:
            self._write.execute(
                "INSERT INTO authors(author_id, followers_total) VALUES(?, ?)"
                " ON CONFLICT(author_id) DO UPDATE SET followers_total = excluded.followers_total",
                (author_id, followers_total),
            )

    def upsert_source(self, source_id: str, kind: str, endpoint: str,
                      poll_interval: int = 300, enabled: bool = True) -> None:
        with self._lock, self._write:
            self._write.execute(
                "INSERT INTO sources(source_id, kind, endpoint, poll_interval, enabled)"
                " VALUES(?,?,?,?,?)"
                " ON CONFLICT(source_id) DO UPDATE SET kind=excluded.kind,"
                " endpoint=excluded.endpoint, poll_interval=excluded.poll_interval,"
                " enabled=excluded.enabled",
                (source_id, kind, endpoint, poll_interval, int(enabled)),
            )

    def list_sources(self) -> list[tuple]:
        return self._reader().execute(
            "SELECT source_id, kind, endpoint, poll_interval, enabled FROM sources"
            " ORDER BY source_id"
        ).fetchall()

    # -- aggregate view -------------------------------------------------------------
    def current_view_version(self) -> int:
        row = self._reader().execute(
            "SELECT value FROM meta WHERE key = 'view_version'"
        ).fetchone()
        return int(row[0]) if row else 0

    def refresh_view(self, now: datetime | None = None) -> int:
        """Rebuild the aggregate table atomically; returns the new version."""
        with self._lock, self._write:
            version = self.current_view_version() + 1
            self._write.execute(
                f"""
                INSERT INTO agg(version, day, category_path, lang, polarity, source_kind, tier, count)
                SELECT ?, m.day, x.category_path, m.lang,
                       COALESCE(m.corrected_label, m.predicted_label, '{UNLABELED}'),
                       m.source_kind, {_TIER_SQL}, COUNT(*)
                FROM mentions m
                JOIN (SELECT DISTINCT mention_id, category_path FROM matches) x
                  ON x.mention_id = m.mention_id
                LEFT JOIN authors a ON a.author_id = m.author_id
                GROUP BY m.day, x.category_path, m.lang,
                         COALESCE(m.corrected_label, m.predicted_label, '{UNLABELED}'),
                         m.source_kind, {_TIER_SQL}
                """,
                (version,),
            )
            self._write.execute(
                "UPDATE meta SET value = ? WHERE key = 'view_version'", (str(version),)
            )
            self._write.execute("DELETE FROM agg WHERE version < ?", (version,))
        return version

    def query_aggregates(
        self,
        period: tuple[str, str] | None = None,
        lang: str | None = None,
        category_prefix: str | None = None,
        source_kind: str | None = None,
        polarity: str | None = None,
        influence_tier: str | None = None,
    ) -> list[AggregateRow]:
        """Serve filtered aggregates from the current view."""
        where = ["version = (SELECT CAST(value AS INTEGER) FROM meta WHERE key='view_version')"]
        args: list = []
        if period is not None:
            where.append("day >= ? AND day <= ?")
            args.extend(period)
        if lang is not None:
            where.append("lang = ?")
            args.append(lang)
        if category_prefix is not None:
            where.append("(category_path = ? OR category_path LIKE ?)")
            args.extend([category_prefix, category_prefix + "/%"])
        if source_kind is not None:
            where.append("source_kind = ?")
            args.append(source_kind)
        if polarity is not None:
            where.append("polarity = ?")
            args.append(polarity)
        if influence_tier is not None:
            where.append("tier = ?")
            args.append(influence_tier)
        sql = (
            "SELECT day, category_path, lang, polarity, source_kind, SUM(count)"
            f" FROM agg WHERE {' AND '.join(where)}"
            " GROUP BY day, category_path, lang, polarity, source_kind"
            " ORDER BY day, category_path, lang, polarity, source_kind"
        )
        return [AggregateRow(*row) for row in self._reader().execute(sql, args)]

    # -- ranked queries ------------------------------------------------------------
    def top_authors(self, period: tuple[str, str] | None = None, n: int = 10) -> list[tuple[str, int]]:
        where, args = self._period_filter(period)
        rows = self._reader().execute(
            f"SELECT author_id, COUNT(*) AS c FROM mentions {where}"
            " GROUP BY author_id ORDER BY c DESC, author_id LIMIT ?",
            args + [n],
        ).fetchall()
        return [(author, count) for author, count in rows]

    def top_spread(self, period: tuple[str, str] | None = None, n: int = 10) -> list[tuple[MentionRecord, int]]:
        where, args = self._period_filter(period, alias="m")
        rows = self._reader().execute(
            f"""
            SELECT m.mention_id, COUNT(r.mention_id) AS reposts
            FROM mentions m
            JOIN mentions r
              ON r.is_repost = 1 AND r.source_id = m.source_id AND r.repost_of = m.native_id
            {where}
            GROUP BY m.mention_id
            ORDER BY reposts DESC, m.mention_id
            LIMIT ?
            """,
            args + [n],
        ).fetchall()
        return [(self.get_mention(mid), count) for mid, count in rows]

    def recent_mentions(
        self,
        n: int = 20,
        offset: int = 0,
        period: tuple[str, str] | None = None,
        lang: str | None = None,
        category_prefix: str | None = None,
        source_kind: str | None = None,
        polarity: str | None = None,
    ) -> list[MentionRecord]:
        where = ["1=1"]
        args: list = []
        if period is not None:
            where.append("day >= ? AND day <= ?")
            args.extend(period)
        if lang is not None:
            where.append("lang = ?")
            args.append(lang)
        if source_kind is not None:
            where.append("source_kind = ?")
            args.append(source_kind)
        if polarity is not None:
            where.append("COALESCE(corrected_label, predicted_label, 'none') = ?")
            args.append(polarity)
        if category_prefix is not None:
            where.append(
                "mention_id IN (SELECT mention_id FROM matches"
                " WHERE category_path = ? OR category_path LIKE ?)"
            )
            args.extend([category_prefix, category_prefix + "/%"])
        rows = self._reader().execute(
            f"SELECT mention_id FROM mentions WHERE {' AND '.join(where)}"
            " ORDER BY ts DESC, mention_id DESC LIMIT ? OFFSET ?",
            args + [n, offset],
        ).fetchall()
        return [self.get_mention(mid) for (mid,) in rows]

    @staticmethod
    def _period_filter(period: tuple[str, str] | None, alias: str = "") -> tuple[str, list]:
        prefix = f"{alias}." if alias else ""
        if period is None:
            return "", []
        return f"WHERE {prefix}day >= ? AND {prefix}day <= ?", list(period)

    # -- export / import -----------------------------------------------------------
    def export_jsonl(self, period: tuple[str, str] | None = None) -> Iterator[str]:
        where, args = self._period_filter(period)
        ids = [
            mid
            for (mid,) in self._reader().execute(
                f"SELECT mention_id FROM mentions {where} ORDER BY mention_id", args
            )
        ]
        for mid in ids:
            record = self.get_mention(mid)
            yield json.dumps(
                {
                    "mention_id": record.mention_id,
                    "source_id": record.source_id,
                    "native_id": record.native_id,
                    "text": record.unit_text,
                    "lang": record.lang,
                    "timestamp": to_rfc3339(record.timestamp),
                    "author_id": record.author_id,
                    "matches": [
                        {"keyword_id": kid, "category_path": path}
                        for kid, path in record.matches
                    ],
                    "polarity": record.predicted_label,
                    "corrected": record.corrected_label,
                    "is_repost": record.is_repost,
                },
                ensure_ascii=False,
            )

    def import_jsonl(self, lines: Iterable[str], source_kind: str = "social") -> int:
        count = 0
        for line in lines:
            line = line.strip()
            if not line:
                continue
            payload = json.loads(line)
            record = MentionRecord(
                source_id=payload["source_id"],
                native_id=payload["native_id"],
                unit_text=payload["text"],
                lang=payload["lang"],
                timestamp=parse_rfc3339(payload["timestamp"]),
                author_id=payload["author_id"],
                matches=tuple(
                    (m["keyword_id"], m["category_path"]) for m in payload["matches"]
                ),
                predicted_label=payload.get("polarity"),
                corrected_label=payload.get("corrected"),
                is_repost=bool(payload.get("is_repost")),
                source_kind=source_kind,
                unit_span=(0, len(payload["text"])),
            )
            self.insert_mention(record)
            count += 1
        return count
