"""Microtext normalization for social-media messages.

Produces a cleaned text plus sentiment-relevant annotations: URLs become
`_URL_`, emoticons become `_EMO_<category>_` tokens on a 7-category scale,
character repetitions are collapsed against a wordform lexicon, hashtags
are segmented, OOV slang is mapped to standard forms and interjections are
marked as `_INTJ_`. Feed text only gets URL standardization.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from pathlib import Path

EMOTICON_CATEGORIES = ("smiley", "crying", "shock", "mute", "angry", "kiss", "sadness")

URL_TOKEN = "_URL_"
INTERJECTION_TOKEN = "_INTJ_"


class ResourceError(Exception):
    pass


@dataclass(frozen=True)
class LanguageNormResources:
    wordforms: frozenset[str] = frozenset()
    oov_map: dict[str, str] = field(default_factory=dict)
    interjections: frozenset[str] = frozenset()
    stopword_lemmas: frozenset[str] = frozenset()


_EMPTY = LanguageNormResources()


@dataclass(frozen=True)
class NormalizationResources:
    languages: dict[str, LanguageNormResources]
    emoticon_rules: list[tuple[re.Pattern[str], str]]

    def for_lang(self, lang: str) -> LanguageNormResources:
        return self.languages.get(lang, _EMPTY)


@dataclass
class NormalizedText:
    text: str
    emoticon_counts: dict[str, int]
    interjection_count: int = 0
    url_count: int = 0
    repetition_fixes: int = 0
    oov_fixes: int = 0


def _zero_counts() -> dict[str, int]:
    return {cat: 0 for cat in EMOTICON_CATEGORIES}


def _read_lines(path: Path) -> list[str]:
    return [
        line
        for line in path.read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]


def load_resources(directory: str | Path) -> NormalizationResources:
    """Load per-language wordforms/OOV/interjections/stopwords + emoticon rules.

    Validates that every single-word OOV standard form is a known wordform
    and that every emoticon rule maps into the 7-category scale.
    """
    directory = Path(directory)
    languages: dict[str, LanguageNormResources] = {}
    for lang_dir in sorted(p for p in directory.iterdir() if p.is_dir()):
        lang = lang_dir.name
        wordforms = frozenset(w.lower() for w in _read_lines(lang_dir / "wordforms.txt")) if (lang_dir / "wordforms.txt").exists() else frozenset()
        oov_map: dict[str, str] = {}
        if (lang_dir / "oov.tsv").exists():
            for line in _read_lines(lang_dir / "oov.tsv"):
                oov, standard = line.split("\t")
                if " " not in standard and standard.lower() not in wordforms:
                    raise ResourceError(
                        f"{lang}: OOV value {standard!r} is single-word but not in wordforms"
                    )
                oov_map[oov.lower()] = standard
        interjections = (
            frozenset(w.lower() for w in _read_lines(lang_dir / "interjections.txt"))
            if (lang_dir / "interjections.txt").exists()
            else frozenset()
        )
        stopwords = (
            frozenset(w.lower() for w in _read_lines(lang_dir / "stopwords.txt"))
            if (lang_dir / "stopwords.txt").exists()
            else frozenset()
        )
        languages[lang] = LanguageNormResources(wordforms, oov_map, interjections, stopwords)

    rules: list[tuple[re.Pattern[str], str]] = []
    emo_path = directory / "emoticons.tsv"
    if emo_path.exists():
        for line in _read_lines(emo_path):
            pattern, category = line.split("\t")
            if category not in EMOTICON_CATEGORIES:
                raise ResourceError(f"emoticon rule {pattern!r}: unknown category {category!r}")
            rules.append((re.compile(pattern), category))
    return NormalizationResources(languages=languages, emoticon_rules=rules)


def load_manifest(directory: str | Path) -> dict:
    return json.loads((Path(directory) / "manifest.json").read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Individual rules

_URL_RE = re.compile(r"https?://\S+|www\.\S+")


def standardize_urls(text: str) -> tuple[str, int]:
    """Replace every URL with the `_URL_` token; returns (text, count)."""
    out, count = _URL_RE.subn(f" {URL_TOKEN} ", text)
    if count:
        out = re.sub(r"\s+", " ", out).strip()
    return out, count


_RUN_RE = re.compile(r"([^\W\d_])\1{2,}", re.UNICODE)


def collapse_repetitions(token: str, lang: str, resources: NormalizationResources) -> str:
    """Collapse letter runs of length >= 3.

    Tries every combination of reducing each run to 2 then 1 letters
    (longest candidates first) and accepts the first form found in the
    wordform lexicon; when nothing is known, every run shrinks to 2.
    """
    runs = list(_RUN_RE.finditer(token))
    if not runs:
        return token
    wordforms = resources.for_lang(lang).wordforms
    pieces: list[str] = []
    last = 0
    for m in runs:
        pieces.append(token[last : m.start()])
        pieces.append(m.group(1))  # placeholder slot, repeated below
        last = m.end()
    tail = token[last:]
    for lengths in itertools.product((2, 1), repeat=len(runs)):
        candidate_parts = []
        for i, m in enumerate(runs):
            candidate_parts.append(pieces[2 * i])
            candidate_parts.append(m.group(1) * lengths[i])
        candidate = "".join(candidate_parts) + tail
        if candidate.lower() in wordforms:
            return candidate
    fallback_parts = []
    for i, m in enumerate(runs):
        fallback_parts.append(pieces[2 * i])
        fallback_parts.append(m.group(1) * 2)
    return "".join(fallback_parts) + tail


_CAMEL_RE = re.compile(r"[A-ZÀ-ÖØ-Þ]+(?=[A-ZÀ-ÖØ-Þ][a-zà-öø-þ])|[A-ZÀ-ÖØ-Þ]?[a-zà-öø-þ]+|[A-ZÀ-ÖØ-Þ]+|\d+")


def segment_hashtag(tag: str, lang: str, resources: NormalizationResources) -> str:
    """Split a hashtag into words; unsplittable tags come back unchanged (no #)."""
    body = tag[1:] if tag.startswith("#") else tag
    if not body:
        return body
    if not any(c.isalpha() for c in body):
        return body
    has_upper = any(c.isupper() for c in body)
    has_lower = any(c.islower() for c in body)
    if has_upper and has_lower:
        words = _CAMEL_RE.findall(body)
        if words:
            return " ".join(w.lower() for w in words)
        return body
    words = _dict_segment(body.lower(), resources.for_lang(lang).wordforms)
    if words and len(words) > 1:
        return " ".join(words)
    return body


def _dict_segment(s: str, wordforms: frozenset[str]) -> list[str] | None:
    """Greedy longest-match segmentation with backtracking."""
    if not wordforms:
        return None
    max_len = max(len(w) for w in wordforms)
    n = len(s)
    fail: set[int] = set()

    def rec(i: int) -> list[str] | None:
        if i == n:
            return []
        if i in fail:
            return None
        for j in range(min(n, i + max_len), i, -1):
            piece = s[i:j]
            if piece in wordforms:
                rest = rec(j)
                if rest is not None:
                    return [piece] + rest
        fail.add(i)
        return None

    return rec(0)


def replace_oov(token: str, lang: str, resources: NormalizationResources) -> str:
    """Exact-match OOV lookup; unknown tokens pass through."""
    return resources.for_lang(lang).oov_map.get(token.lower(), token)


def map_emoticons(text: str, resources: NormalizationResources) -> tuple[str, dict[str, int]]:
    """Replace emoticons with `_EMO_<category>_` tokens, leftmost-longest.

    The scan repeats until a fixed point: replacing one emoticon exposes a
    boundary that can license an adjacent one ("<3xD"), and the output must
    already be stable so the whole pipeline is idempotent. Each round
    consumes at least one original character, so this terminates.
    """
    counts = _zero_counts()
    if not resources.emoticon_rules:
        return text, counts
    current = text
    for _ in range(len(text) + 1):
        out: list[str] = []
        i = 0
        n = len(current)
        changed = False
        while i < n:
            best_match = None
            best_cat = None
            for pattern, category in resources.emoticon_rules:
                m = pattern.match(current, i)
                if m and m.end() > m.start():
                    if best_match is None or m.end() > best_match.end():
                        best_match = m
                        best_cat = category
            if best_match is not None:
                counts[best_cat] += 1
                out.append(f" _EMO_{best_cat}_ ")
                i = best_match.end()
                changed = True
            else:
                out.append(current[i])
                i += 1
        if not changed:
            break
        current = re.sub(r"\s+", " ", "".join(out)).strip()
    return current, counts


# ---------------------------------------------------------------------------
# Whole-message pipeline

_PIPELINE_TOKEN = r"_(?:URL|INTJ)_|_EMO_[a-z]+_"
# Tokenization must be stable under re-tokenizing its own space-joined
# output: word and punctuation-run classes are disjoint (apostrophes,
# hyphens and the #/@ markers belong to words, with a single-char fallback
# for orphan markers), and a pipeline token only matches when free-standing
# so a glued lookalike like "_INTJ_3" stays one word token.
_TOKEN_RE = re.compile(
    rf"(?<![\w'’-])(?:{_PIPELINE_TOKEN})(?![\w'’-])"
    r"|[#@]?[\w'’-]+|[^\w\s'’#@-]+|[#@]",
    re.UNICODE,
)
_PIPELINE_RE = re.compile(rf"^(?:{_PIPELINE_TOKEN})$")


def is_pipeline_token(token: str) -> bool:
    return bool(_PIPELINE_RE.match(token))


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text)


def normalize_message(
    text: str, lang: str, source_kind: str, resources: NormalizationResources
) -> NormalizedText:
    """Run the full normalization pipeline on one message unit.

    Feed text passes through URL standardization only; social text gets the
    whole treatment. The output text is a fixed point: normalizing it again
    yields the same string.
    """
    cleaned, url_count = standardize_urls(text)
    if source_kind == "feed":
        return NormalizedText(text=cleaned, emoticon_counts=_zero_counts(), url_count=url_count)

    cleaned, emoticon_counts = map_emoticons(cleaned, resources)
    lang_res = resources.for_lang(lang)
    out_tokens: list[str] = []
    interjection_count = 0
    repetition_fixes = 0
    oov_fixes = 0
    for token in tokenize(cleaned):
        if is_pipeline_token(token):
            if token == INTERJECTION_TOKEN:
                interjection_count += 1
            out_tokens.append(token)
            continue
        if token.startswith("@") and len(token) > 1:
            out_tokens.append(token)
            continue
        if not any(ch.isalnum() for ch in token):
            out_tokens.append(token)
            continue
        # Hashtags split into words first; every resulting word then runs
        # through the same collapse -> OOV -> interjection chain, so the
        # output text is a fixed point of the whole pipeline.
        if token.startswith("#") and len(token) > 1:
            words = segment_hashtag(token, lang, resources).split()
        else:
            words = [token]
        for word in words:
            collapsed = collapse_repetitions(word, lang, resources)
            if collapsed != word:
                repetition_fixes += 1
            replaced = replace_oov(collapsed, lang, resources)
            if replaced != collapsed:
                oov_fixes += 1
            for out_word in replaced.split():
                if out_word.lower() in lang_res.interjections:
                    interjection_count += 1
                    out_tokens.append(INTERJECTION_TOKEN)
                else:
                    out_tokens.append(out_word)
    # Tokenization separates punctuation with spaces, which can expose an
    # emoticon that adjacency guards blocked on the raw text ("0:/"). One
    # more scan over the joined tokens reaches the pipeline's fixed point;
    # token transforms never produce new emoticon material, so nothing
    # after this can change.
    joined = " ".join(out_tokens)
    final_text, late_counts = map_emoticons(joined, resources)
    for category, count in late_counts.items():
        emoticon_counts[category] += count
    return NormalizedText(
        text=final_text,
        emoticon_counts=emoticon_counts,
        interjection_count=interjection_count,
        url_count=url_count,
        repetition_fixes=repetition_fixes,
        oov_fixes=oov_fixes,
    )
