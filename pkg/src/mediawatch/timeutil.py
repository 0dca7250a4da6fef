"""RFC 3339 UTC timestamps used across the store, wire formats and API."""

from __future__ import annotations

from datetime import datetime, timezone


def utcnow() -> datetime:
    return datetime.now(timezone.utc)


def to_rfc3339(dt: datetime) -> str:
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_rfc3339(value: str) -> datetime:
    if value.endswith("Z"):
        value = value[:-1] + "+00:00"
    dt = datetime.fromisoformat(value)
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def parse_period(period: str) -> tuple[str, str]:
    """`YYYY-MM-DD..YYYY-MM-DD` (inclusive) -> (first_day, last_day)."""
    start, sep, end = period.partition("..")
    if not sep or not start or not end:
        raise ValueError(f"period must be YYYY-MM-DD..YYYY-MM-DD, got {period!r}")
    return start, end
