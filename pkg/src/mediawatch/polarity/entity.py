"""Entity-level polarity: copy-down assignment and multi-reference algebra."""

from __future__ import annotations

from collections.abc import Iterable

from ..taxonomy import MatchResult

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

_ALIASES = {
    "P": POSITIVE,
    "N": NEGATIVE,
    "NEU": NEUTRAL,
    POSITIVE: POSITIVE,
    NEGATIVE: NEGATIVE,
    NEUTRAL: NEUTRAL,
}


def assign_entity_polarity(label: str, matches: Iterable[MatchResult]) -> list[tuple[str, str]]:
    """Copy the message-level label to every distinct matched entity.

    The entity is the leaf category of the matched keyword; duplicates are
    collapsed, first-occurrence order is kept.
    """
    seen: set[str] = set()
    out: list[tuple[str, str]] = []
    for m in matches:
        entity = m.category_path[-1]
        if entity in seen:
            continue
        seen.add(entity)
        out.append((entity, label))
    return out


def combine_entity_polarity(refs: Iterable[str]) -> str:
    """Reduce multiple references to one entity into a single label.

    Pairwise rules N+P=NEU, N+NEU=N, P+NEU=P commute, so the result only
    depends on the positive/negative balance: more P than N gives positive,
    more N gives negative, a tie (or nothing) is neutral.
    """
    balance = 0
    for ref in refs:
        label = _ALIASES.get(ref)
        if label is None:
            raise ValueError(f"unknown polarity label {ref!r}")
        if label == POSITIVE:
            balance += 1
        elif label == NEGATIVE:
            balance -= 1
    if balance > 0:
        return POSITIVE
    if balance < 0:
        return NEGATIVE
    return NEUTRAL
