"""Tokenization, lemmatization and coarse POS tagging.

A pluggable analyzer contract with a shipped lexicon-lookup baseline: a
per-language full-form lexicon (`surface<TAB>lemma<TAB>pos`) resolves lemma
and tag, ambiguity goes to the first (most frequent) entry, unknown words
fall back to lemma = lowercased surface with tag X. Pipeline tokens such as
`_EMO_smiley_` are kept atomic and tagged SYM.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

COARSE_TAGS = frozenset(
    {"NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "CONJ", "NUM", "PUNCT", "INTJ", "SYM", "X"}
)


class UnsupportedLanguage(Exception):
    pass


@dataclass(frozen=True, slots=True)
class AnalyzedToken:
    surface: str
    lemma: str
    pos: str
    span: tuple[int, int]


class Analyzer(Protocol):
    def analyze(self, text: str, lang: str) -> list[AnalyzedToken]: ...

    def supports(self, lang: str) -> bool: ...


_TOKEN_RE = re.compile(
    r"(?<![\w'’-])(?:_(?:URL|INTJ)_|_EMO_[a-z]+_)(?![\w'’-])"
    r"|[#@]?[\w'’-]+|[^\w\s'’#@-]+|[#@]",
    re.UNICODE,
)
_PIPELINE_RE = re.compile(r"^(?:_(?:URL|INTJ)_|_EMO_[a-z]+_)$")


def _is_punct(token: str) -> bool:
    return all(unicodedata.category(c).startswith("P") or c in "¡¿" for c in token)


def _is_number(token: str) -> bool:
    stripped = token.replace(",", "").replace(".", "").replace("-", "")
    return bool(stripped) and all(c.isdigit() for c in stripped)


class LexiconAnalyzer:
    """Baseline analyzer backed by full-form lexicons."""

    def __init__(self, lexicons: dict[str, dict[str, tuple[str, str]]]):
        self._lexicons = lexicons

    def supports(self, lang: str) -> bool:
        return lang in self._lexicons

    def analyze(self, text: str, lang: str) -> list[AnalyzedToken]:
        if lang not in self._lexicons:
            raise UnsupportedLanguage(lang)
        lexicon = self._lexicons[lang]
        tokens: list[AnalyzedToken] = []
        for m in _TOKEN_RE.finditer(text):
            surface = m.group(0)
            span = (m.start(), m.end())
            if _PIPELINE_RE.match(surface):
                tokens.append(AnalyzedToken(surface, surface, "SYM", span))
            elif _is_punct(surface):
                tokens.append(AnalyzedToken(surface, surface, "PUNCT", span))
            elif _is_number(surface):
                tokens.append(AnalyzedToken(surface, surface, "NUM", span))
            else:
                entry = lexicon.get(surface.lower())
                if entry is not None:
                    lemma, pos = entry
                    tokens.append(AnalyzedToken(surface, lemma, pos, span))
                else:
                    tokens.append(AnalyzedToken(surface, surface.lower(), "X", span))
        return tokens


def load_fullform_lexicon(path: str | Path) -> dict[str, tuple[str, str]]:
    """First entry per surface wins (entries ordered by frequency)."""
    lexicon: dict[str, tuple[str, str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields")
            surface, lemma, pos = parts
            if pos not in COARSE_TAGS:
                raise ValueError(f"{path}:{lineno}: unknown POS {pos!r}")
            lexicon.setdefault(surface.lower(), (lemma.lower(), pos))
    return lexicon


def load_analyzer(resources_dir: str | Path, backend: str = "lexicon") -> Analyzer:
    """Build the analyzer selected by the `nlp.backend` config key."""
    if backend != "lexicon":
        raise ValueError(f"unknown nlp backend {backend!r}")
    resources_dir = Path(resources_dir)
    lexicons = {}
    for lang_dir in sorted(p for p in resources_dir.iterdir() if p.is_dir()):
        fullform = lang_dir / "fullform.tsv"
        if fullform.exists():
            lexicons[lang_dir.name] = load_fullform_lexicon(fullform)
    return LexiconAnalyzer(lexicons)
