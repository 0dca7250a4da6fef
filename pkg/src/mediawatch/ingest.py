"""Source ingestion: syndication feed polling and replayable stream files.

Feeds (RSS 2.0 / Atom) are polled on an interval and parsed with the
standard library; each entry becomes one RawMessage with text = title +
body. The replay source reads the store's JSON-lines export format and
stands in for a live social stream, at full speed or wall-clock-faithful.
"""

from __future__ import annotations

import hashlib
import json
import time
import urllib.error
import urllib.request
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from datetime import datetime, timezone
from email.utils import parsedate_to_datetime
from pathlib import Path
from typing import Callable, Iterator

from .timeutil import parse_rfc3339, utcnow

CLOCK_SKEW_TOLERANCE_S = 300
MIN_POLL_INTERVAL_S = 30

SOURCE_KINDS = ("feed", "stream_replay", "stream_live")


class IngestError(Exception):
    pass


class FetchError(IngestError):
    pass


class ParseError(IngestError):
    pass


@dataclass(frozen=True)
class SourceConfig:
    source_id: str
    kind: str
    endpoint: str
    poll_interval: int = 300
    enabled: bool = True

    def __post_init__(self) -> None:
        if self.kind not in SOURCE_KINDS:
            raise ValueError(f"unknown source kind {self.kind!r}")
        if not self.endpoint:
            raise ValueError("endpoint must be non-empty")
        if self.kind == "feed" and self.poll_interval < MIN_POLL_INTERVAL_S:
            raise ValueError(f"feed poll_interval must be >= {MIN_POLL_INTERVAL_S}s")

    @property
    def message_kind(self) -> str:
        """How downstream stages treat messages from this source."""
        return "feed" if self.kind == "feed" else "social"


@dataclass(frozen=True)
class RawMessage:
    source_id: str
    native_id: str
    text: str
    author_id: str
    timestamp: datetime
    author_handle: str = ""
    geo: tuple[float, float] | None = None
    is_repost: bool = False
    repost_of: str | None = None


def _clamp_timestamp(ts: datetime, now: datetime) -> datetime:
    """Future timestamps beyond clock-skew tolerance collapse to now."""
    if (ts - now).total_seconds() > CLOCK_SKEW_TOLERANCE_S:
        return now
    return ts


def parse_sources_file(text: str) -> list[SourceConfig]:
    """`source_id<TAB>kind<TAB>endpoint<TAB>poll_interval` records."""
    sources = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) not in (3, 4):
            raise IngestError(f"line {lineno}: expected 3 or 4 tab-separated fields")
        poll = int(parts[3]) if len(parts) == 4 and parts[3].strip() else 300
        sources.append(
            SourceConfig(source_id=parts[0], kind=parts[1], endpoint=parts[2], poll_interval=poll)
        )
    return sources


def load_sources_file(path: str | Path) -> list[SourceConfig]:
    with open(path, encoding="utf-8") as fh:
        return parse_sources_file(fh.read())


# ---------------------------------------------------------------------------
# Feed parsing

_ATOM = "{http://www.w3.org/2005/Atom}"
_DC_CREATOR = "{http://purl.org/dc/elements/1.1/}creator"


def _text(el) -> str:
    return (el.text or "").strip() if el is not None else ""


def _parse_date(raw: str, fallback: datetime) -> datetime:
    if not raw:
        return fallback
    try:
        dt = parsedate_to_datetime(raw)
    except (TypeError, ValueError):
        try:
            dt = parse_rfc3339(raw)
        except ValueError:
            return fallback
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def parse_feed(data: bytes, source_id: str, fetched_at: datetime | None = None) -> list[RawMessage]:
    """Parse RSS 2.0 or Atom bytes into RawMessages."""
    fetched_at = fetched_at or utcnow()
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        raise ParseError(f"{source_id}: malformed feed: {exc}") from exc

    messages: list[RawMessage] = []
    if root.tag == "rss" or root.tag == "{http://purl.org/rss/1.0/}RDF":
        items = root.findall("./channel/item") or root.findall("item")
        for item in items:
            title = _text(item.find("title"))
            body = _text(item.find("description"))
            link = _text(item.find("link"))
            guid = _text(item.find("guid")) or link
            author = _text(item.find("author")) or _text(item.find(_DC_CREATOR))
            ts = _parse_date(_text(item.find("pubDate")), fetched_at)
            messages.append(
                _entry_message(source_id, guid, title, body, author, ts, fetched_at)
            )
    elif root.tag == f"{_ATOM}feed":
        for entry in root.findall(f"{_ATOM}entry"):
            title = _text(entry.find(f"{_ATOM}title"))
            body = _text(entry.find(f"{_ATOM}summary")) or _text(entry.find(f"{_ATOM}content"))
            link_el = entry.find(f"{_ATOM}link")
            link = link_el.get("href", "") if link_el is not None else ""
            guid = _text(entry.find(f"{_ATOM}id")) or link
            author = _text(entry.find(f"{_ATOM}author/{_ATOM}name"))
            raw_date = _text(entry.find(f"{_ATOM}published")) or _text(
                entry.find(f"{_ATOM}updated")
            )
            ts = _parse_date(raw_date, fetched_at)
            messages.append(
                _entry_message(source_id, guid, title, body, author, ts, fetched_at)
            )
    else:
        raise ParseError(f"{source_id}: unrecognized feed root element {root.tag!r}")
    return messages


def _entry_message(
    source_id: str, guid: str, title: str, body: str, author: str,
    ts: datetime, fetched_at: datetime,
) -> RawMessage:
    text = f"{title}\n\n{body}".strip() if body else title
    if not guid:
        guid = hashlib.sha1(text.encode("utf-8")).hexdigest()
    return RawMessage(
        source_id=source_id,
        native_id=guid,
        text=text,
        author_id=author or source_id,
        author_handle=author,
        timestamp=_clamp_timestamp(ts, fetched_at),
    )


def fetch_url(endpoint: str, timeout: float = 20.0) -> bytes:
    try:
        with urllib.request.urlopen(endpoint, timeout=timeout) as resp:
            return resp.read()
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise FetchError(f"{endpoint}: {exc}") from exc


def poll_feed(
    config: SourceConfig,
    seen: Callable[[str], bool] | None = None,
    fetch: Callable[[str], bytes] = fetch_url,
) -> list[RawMessage]:
    """Fetch and parse one feed cycle, skipping already-seen entries.

    *seen* is a predicate over native ids (typically the store's dedup set);
    FetchError/ParseError propagate so the poller can log and continue.
    """
    if config.kind != "feed":
        raise ValueError(f"{config.source_id}: poll_feed requires kind=feed")
    data = fetch(config.endpoint)
    messages = parse_feed(data, config.source_id)
    if seen is None:
        return messages
    return [m for m in messages if not seen(m.native_id)]


# ---------------------------------------------------------------------------
# Replay source (deterministic stand-in for a live social stream)

class ReplaySource:
    """Replays a JSON-lines mention export as RawMessages.

    speed: "max" emits as fast as possible; a float N plays time gaps
    between message timestamps back N times faster than wall clock.
    Malformed lines are skipped and counted.
    """

    def __init__(self, config: SourceConfig, speed: float | str = "max"):
        if config.kind != "stream_replay":
            raise ValueError(f"{config.source_id}: ReplaySource requires kind=stream_replay")
        self.config = config
        self.speed = speed
        self.skipped = 0

    def __iter__(self) -> Iterator[RawMessage]:
        previous_ts: datetime | None = None
        with open(self.config.endpoint, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    payload = json.loads(line)
                    message = RawMessage(
                        source_id=self.config.source_id,
                        native_id=str(payload["native_id"]),
                        text=payload["text"],
                        author_id=str(payload.get("author_id", "")),
                        timestamp=parse_rfc3339(payload["timestamp"]),
                        is_repost=bool(payload.get("is_repost")),
                        repost_of=payload.get("repost_of"),
                        geo=tuple(payload["geo"]) if payload.get("geo") else None,
                    )
                except (json.JSONDecodeError, KeyError, ValueError, TypeError):
                    self.skipped += 1
                    continue
                if self.speed != "max" and previous_ts is not None:
                    gap = (message.timestamp - previous_ts).total_seconds()
                    rate = float(self.speed)
                    if gap > 0 and rate > 0:
                        time.sleep(min(gap / rate, 30.0))
                previous_ts = message.timestamp
                yield message


def dedupe(message: RawMessage, seen: set[tuple[str, str]]) -> bool:
    """Accept or drop by exact (source_id, native_id); reposts pass through."""
    key = (message.source_id, message.native_id)
    if key in seen:
        return False
    seen.add(key)
    return True
