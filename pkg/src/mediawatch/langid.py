"""Character n-gram language identification.

Rank-order profiles (top-K character 1..4-grams by frequency) are built per
language from bundled corpora; a text is scored against each candidate by
the out-of-place distance between its own n-gram ranks and the profile's.
Identification runs before keyword matching so language-restricted keywords
and per-language NLP resources can apply.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

DEFAULT_PROFILE_SIZE = 3000
MIN_CORPUS_CHARS = 10_000
MIN_TEXT_CHARS = 10
DEFAULT_MARGIN = 0.05
NGRAM_MAX = 4
UNKNOWN_LANG = "und"


class InsufficientCorpus(Exception):
    pass


@dataclass(frozen=True)
class LanguageProfile:
    lang: str
    ranks: dict[str, int]  # n-gram -> rank, a permutation of 1..len(ranks)

    @property
    def size(self) -> int:
        return len(self.ranks)


_WS = re.compile(r"\s+")


def _collapse(text: str) -> str:
    return _WS.sub(" ", text).strip()


def char_ngrams(text: str, n_max: int = NGRAM_MAX) -> Counter[str]:
    """Count character n-grams for n = 1..n_max over whitespace-collapsed text."""
    counts: Counter[str] = Counter()
    collapsed = _collapse(text)
    length = len(collapsed)
    for n in range(1, n_max + 1):
        for i in range(length - n + 1):
            counts[collapsed[i : i + n]] += 1
    return counts


def _rank(counts: Counter[str], k: int | None) -> dict[str, int]:
    # Ties broken lexicographically so profiles are reproducible.
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if k is not None:
        ordered = ordered[:k]
    return {gram: i for i, (gram, _) in enumerate(ordered, start=1)}


def build_profile(corpus: str, lang: str, k: int = DEFAULT_PROFILE_SIZE) -> LanguageProfile:
    collapsed = _collapse(corpus)
    if len(collapsed) < MIN_CORPUS_CHARS:
        raise InsufficientCorpus(
            f"{lang}: corpus has {len(collapsed)} chars, need >= {MIN_CORPUS_CHARS}"
        )
    return LanguageProfile(lang=lang, ranks=_rank(char_ngrams(collapsed), k))


def save_profile(profile: LanguageProfile, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for gram, rank in sorted(profile.ranks.items(), key=lambda kv: kv[1]):
            fh.write(f"{gram}\t{rank}\n")


def load_profile(path: str | Path, lang: str | None = None) -> LanguageProfile:
    path = Path(path)
    ranks: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            gram, _, rank = line.rpartition("\t")
            ranks[gram] = int(rank)
    return LanguageProfile(lang=lang or path.stem, ranks=ranks)


def load_profiles(directory: str | Path) -> dict[str, LanguageProfile]:
    profiles = {}
    for path in sorted(Path(directory).glob("*.profile")):
        lang = path.name.removesuffix(".profile")
        profiles[lang] = load_profile(path, lang)
    return profiles


_SOCIAL_NOISE = re.compile(r"@\w+|https?://\S+|www\.\S+")


def strip_social_noise(text: str) -> str:
    """Drop user mentions and URLs, keep hashtag words without the # mark."""
    return _collapse(_SOCIAL_NOISE.sub(" ", text).replace("#", " "))


@dataclass(frozen=True)
class Identification:
    lang: str
    confidence: float

    @property
    def is_unknown(self) -> bool:
        return self.lang == UNKNOWN_LANG


UNKNOWN = Identification(UNKNOWN_LANG, 0.0)


def _score(text_ranks: dict[str, int], profile: LanguageProfile) -> float:
    """Normalized similarity in [0, 1]: 1 - out-of-place distance / worst case."""
    if not text_ranks:
        return 0.0
    k = profile.size
    ranks = profile.ranks
    dist = 0
    for gram, trank in text_ranks.items():
        prank = ranks.get(gram)
        dist += abs(trank - prank) if prank is not None else k
    return 1.0 - dist / (k * len(text_ranks))


def identify(
    text: str,
    candidates: set[str],
    source_kind: str,
    profiles: dict[str, LanguageProfile],
    *,
    min_chars: int = MIN_TEXT_CHARS,
    margin: float = DEFAULT_MARGIN,
) -> Identification:
    """Identify the language of *text* among *candidates*.

    Social-media texts are stripped of @mentions, URLs and hashtag marks
    before scoring. Returns UNKNOWN when the effective text is too short or
    the top two candidates score within *margin* of each other.
    """
    missing = candidates - profiles.keys()
    if missing:
        raise KeyError(f"no profiles loaded for candidates: {sorted(missing)}")
    effective = strip_social_noise(text) if source_kind == "social" else _collapse(text)
    if len(effective) < min_chars:
        return UNKNOWN
    text_ranks = _rank(char_ngrams(effective), k=None)
    scored = sorted(
        ((lang, _score(text_ranks, profiles[lang])) for lang in candidates),
        key=lambda pair: (-pair[1], pair[0]),
    )
    if not scored:
        return UNKNOWN
    best_lang, best_score = scored[0]
    if len(scored) > 1 and best_score - scored[1][1] < margin:
        return UNKNOWN
    return Identification(best_lang, best_score)
