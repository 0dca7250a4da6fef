"""Keyword taxonomy: compilation, matching and article segmentation.

Keywords are regular expressions organized in a category hierarchy. A text
becomes a mention only if at least one non-anchor keyword matches it under
the language, case and anchor rules. Matching always runs on the raw text;
normalization happens downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

# Pure anchors (topic context terms without a category of their own) are
# modeled as regular keywords under this reserved category path. They gate
# needs_anchor keywords but never produce stored matches themselves.
ANCHOR_CATEGORY: tuple[str, ...] = ("_anchor_",)

WILDCARD_LANG = "*"


class TaxonomyError(Exception):
    pass


class InvalidPattern(TaxonomyError):
    def __init__(self, keyword_id: str, pattern: str, reason: str):
        super().__init__(f"keyword {keyword_id!r}: bad pattern {pattern!r}: {reason}")
        self.keyword_id = keyword_id


class DuplicateId(TaxonomyError):
    def __init__(self, keyword_id: str):
        super().__init__(f"duplicate keyword id {keyword_id!r}")
        self.keyword_id = keyword_id


@dataclass(frozen=True, slots=True)
class KeywordSpec:
    """One user-defined keyword: a regex bound to a category path."""

    id: str
    pattern: str
    category_path: tuple[str, ...]
    language: str = WILDCARD_LANG
    case_sensitive: bool = False
    is_anchor: bool = False
    needs_anchor: bool = False

    def __post_init__(self) -> None:
        if not self.category_path:
            raise TaxonomyError(f"keyword {self.id!r}: empty category_path")

    @property
    def is_pure_anchor(self) -> bool:
        return self.is_anchor and tuple(self.category_path) == ANCHOR_CATEGORY


@dataclass(frozen=True, slots=True)
class MatchResult:
    keyword_id: str
    category_path: tuple[str, ...]
    span: tuple[int, int]
    matched_surface: str


@dataclass(frozen=True, slots=True)
class _CompiledKeyword:
    spec: KeywordSpec
    regex: re.Pattern[str]

    def admits_language(self, lang: str) -> bool:
        return self.spec.language == WILDCARD_LANG or self.spec.language == lang


@dataclass(frozen=True)
class CompiledMatcher:
    """Immutable compiled form of a taxonomy; replaced wholesale on update."""

    version: int
    _by_lang: dict[str, list[_CompiledKeyword]] = field(default_factory=dict)
    _wildcard: list[_CompiledKeyword] = field(default_factory=list)
    _anchors: list[_CompiledKeyword] = field(default_factory=list)
    specs: tuple[KeywordSpec, ...] = ()

    def keywords_for(self, lang: str) -> list[_CompiledKeyword]:
        return self._wildcard + self._by_lang.get(lang, [])

    def has_anchor(self, text: str, lang: str) -> bool:
        """True if any anchor term admitted for *lang* occurs in *text*."""
        for ck in self._anchors:
            if ck.admits_language(lang) and ck.regex.search(text):
                return True
        return False

    @property
    def anchor_count(self) -> int:
        return len(self._anchors)

    @property
    def keyword_count(self) -> int:
        return len(self.specs)


def compile_taxonomy(specs: list[KeywordSpec], version: int = 1) -> CompiledMatcher:
    """Compile keyword specs into an immutable matcher.

    Raises InvalidPattern on a regex that does not compile and DuplicateId
    when two specs share an id.
    """
    if not specs:
        raise TaxonomyError("taxonomy is empty")
    seen: set[str] = set()
    by_lang: dict[str, list[_CompiledKeyword]] = {}
    wildcard: list[_CompiledKeyword] = []
    anchors: list[_CompiledKeyword] = []
    for spec in specs:
        if spec.id in seen:
            raise DuplicateId(spec.id)
        seen.add(spec.id)
        flags = 0 if spec.case_sensitive else re.IGNORECASE
        try:
            regex = re.compile(spec.pattern, flags)
        except re.error as exc:
            raise InvalidPattern(spec.id, spec.pattern, str(exc)) from exc
        ck = _CompiledKeyword(spec, regex)
        if spec.is_anchor:
            anchors.append(ck)
        if spec.is_pure_anchor:
            continue  # never yields MatchResults
        if spec.language == WILDCARD_LANG:
            wildcard.append(ck)
        else:
            by_lang.setdefault(spec.language, []).append(ck)
    return CompiledMatcher(
        version=version,
        _by_lang=by_lang,
        _wildcard=wildcard,
        _anchors=anchors,
        specs=tuple(specs),
    )


def match_unit(
    matcher: CompiledMatcher,
    text: str,
    lang: str,
    anchor_context: str | None = None,
) -> list[MatchResult]:
    """Match all admitted keywords against one message unit.

    Anchor presence is evaluated on *anchor_context* (the full original
    message or article) so a keyword inside one sentence can be licensed by
    an anchor elsewhere in the document. Defaults to the unit itself.
    """
    context = text if anchor_context is None else anchor_context
    anchor_present: bool | None = None  # computed lazily, once
    results: list[MatchResult] = []
    seen: set[tuple[str, tuple[int, int]]] = set()
    for ck in matcher.keywords_for(lang):
        hits = [(m.start(), m.end(), m.group(0)) for m in ck.regex.finditer(text)]
        if not hits:
            continue
        if ck.spec.needs_anchor:
            if anchor_present is None:
                anchor_present = matcher.has_anchor(context, lang)
            if not anchor_present:
                continue
        for start, end, surface in hits:
            key = (ck.spec.id, (start, end))
            if key in seen:
                continue
            seen.add(key)
            results.append(
                MatchResult(
                    keyword_id=ck.spec.id,
                    category_path=tuple(ck.spec.category_path),
                    span=(start, end),
                    matched_surface=surface,
                )
            )
    results.sort(key=lambda r: (r.span, r.keyword_id))
    return results


# ---------------------------------------------------------------------------
# Sentence segmentation for feed articles

# Abbreviations that take a trailing period without ending the sentence.
_ABBREVIATIONS: dict[str, frozenset[str]] = {
    "es": frozenset({"sr", "sra", "srta", "dr", "dra", "d", "dña", "núm", "pág", "tel", "etc", "ej", "art", "cap", "vol"}),
    "en": frozenset({"mr", "mrs", "ms", "dr", "prof", "st", "jr", "sr", "etc", "vs", "no", "vol", "inc", "ltd", "co", "e.g", "i.e"}),
    "fr": frozenset({"m", "mme", "mlle", "dr", "etc", "vol", "av", "bd", "st", "ste"}),
    "eu": frozenset({"adib", "zenb", "or", "etab", "jn", "and", "k.a", "k.o"}),
}

_SENT_BOUNDARY = re.compile(r"([.!?…]+)(\s+)(?=[\"'«¿¡(]?[A-ZÀ-ÖØ-Þ0-9])")


def split_sentences(text: str, lang: str) -> list[tuple[int, int]]:
    """Return (start, end) spans of sentences, in document order."""
    abbrevs = _ABBREVIATIONS.get(lang, frozenset())
    spans: list[tuple[int, int]] = []
    start = 0
    for m in _SENT_BOUNDARY.finditer(text):
        end = m.end(1)
        # Boundary is suppressed when the terminal dot belongs to a known
        # abbreviation ("Dr. García" must not split).
        if m.group(1) == ".":
            prev = text[start:m.start(1)]
            last_word = prev.rsplit(None, 1)[-1].lstrip("\"'«(¿¡") if prev.split() else ""
            if last_word.lower().rstrip(".") in abbrevs or (
                "." in last_word and last_word.lower() in abbrevs
            ):
                continue
        spans.append((start, end))
        start = m.end()
    if start < len(text) and text[start:].strip():
        spans.append((start, len(text)))
    # Trim surrounding whitespace so each unit is a clean substring.
    trimmed = []
    for s, e in spans:
        seg = text[s:e]
        ls = len(seg) - len(seg.lstrip())
        rs = len(seg) - len(seg.rstrip())
        if s + ls < e - rs:
            trimmed.append((s + ls, e - rs))
    return trimmed


@dataclass(frozen=True, slots=True)
class ArticleUnit:
    text: str
    span: tuple[int, int]  # offsets into the article
    matches: tuple[MatchResult, ...]


def segment_article(matcher: CompiledMatcher, article_text: str, lang: str) -> list[ArticleUnit]:
    """Split a press article into sentence units that carry matches.

    The whole article is tested first; if nothing matches there, no sentence
    can match either and the article is discarded. Anchor presence is always
    judged against the full article.
    """
    if not match_unit(matcher, article_text, lang):
        return []
    units: list[ArticleUnit] = []
    for start, end in split_sentences(article_text, lang):
        sentence = article_text[start:end]
        matches = match_unit(matcher, sentence, lang, anchor_context=article_text)
        if matches:
            units.append(ArticleUnit(text=sentence, span=(start, end), matches=tuple(matches)))
    return units


# ---------------------------------------------------------------------------
# Taxonomy file format
#
# One record per line, tab-separated:
#   category_path<TAB>pattern<TAB>lang<TAB>flags
# category_path is slash-separated root/…/leaf; lang is a code or `*`; flags
# is a comma-set from {anchor, needs_anchor, case} and may be empty. Lines
# starting with `#` are comments.

_FLAG_NAMES = {"anchor", "needs_anchor", "case"}


def parse_taxonomy(text: str) -> list[KeywordSpec]:
    specs: list[KeywordSpec] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) not in (3, 4):
            raise TaxonomyError(f"line {lineno}: expected 3 or 4 tab-separated fields")
        category_raw, pattern, lang = parts[0], parts[1], parts[2].strip() or WILDCARD_LANG
        flags_raw = parts[3].strip() if len(parts) == 4 else ""
        flags = {f.strip() for f in flags_raw.split(",") if f.strip()}
        unknown = flags - _FLAG_NAMES
        if unknown:
            raise TaxonomyError(f"line {lineno}: unknown flags {sorted(unknown)}")
        category_path = tuple(p for p in category_raw.strip().split("/") if p)
        if not category_path:
            raise TaxonomyError(f"line {lineno}: empty category path")
        specs.append(
            KeywordSpec(
                id=f"k{lineno:04d}",
                pattern=pattern,
                category_path=category_path,
                language=lang,
                case_sensitive="case" in flags,
                is_anchor="anchor" in flags,
                needs_anchor="needs_anchor" in flags,
            )
        )
    return specs


def serialize_taxonomy(specs: list[KeywordSpec]) -> str:
    lines = []
    for spec in specs:
        flags = []
        if spec.is_anchor:
            flags.append("anchor")
        if spec.needs_anchor:
            flags.append("needs_anchor")
        if spec.case_sensitive:
            flags.append("case")
        lines.append(
            "\t".join(["/".join(spec.category_path), spec.pattern, spec.language, ",".join(flags)])
        )
    return "\n".join(lines) + "\n"


def load_taxonomy_file(path: str) -> list[KeywordSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_taxonomy(fh.read())
