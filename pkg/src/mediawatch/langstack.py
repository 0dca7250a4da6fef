"""Per-language resource bundle: normalization, analysis, polarity lexicons.

One LanguageStack is loaded at startup and shared read-only by pipeline
workers, trainers and the API service.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources as importlib_resources
from pathlib import Path

from . import langid
from .nlp import AnalyzedToken, Analyzer, load_analyzer
from .normalize import NormalizationResources, NormalizedText, load_resources, normalize_message
from .polarity.features import PolarityLexicon, load_negation_cues, load_polarity_lexicon


def bundled_resources_root() -> Path:
    return Path(importlib_resources.files("mediawatch")) / "resources"


@dataclass
class LanguageStack:
    norm_resources: NormalizationResources
    analyzer: Analyzer
    lexicons: dict[str, PolarityLexicon]
    negation_cues: dict[str, frozenset[str]]
    profiles: dict[str, langid.LanguageProfile]
    languages: list[str]

    @classmethod
    def load(
        cls,
        resources_root: str | Path | None = None,
        nlp_backend: str = "lexicon",
        languages: list[str] | None = None,
    ) -> "LanguageStack":
        root = Path(resources_root) if resources_root else bundled_resources_root()
        norm = load_resources(root / "normalize")
        analyzer = load_analyzer(root / "nlp", backend=nlp_backend)
        lexicons: dict[str, PolarityLexicon] = {}
        cues: dict[str, frozenset[str]] = {}
        pol_root = root / "polarity"
        if pol_root.exists():
            for lang_dir in sorted(p for p in pol_root.iterdir() if p.is_dir()):
                lang = lang_dir.name
                lexicon_path = lang_dir / "lexicon.tsv"
                if lexicon_path.exists():
                    lexicons[lang] = load_polarity_lexicon(
                        lexicon_path, lang, lang_dir / "locutions.tsv"
                    )
                negation_path = lang_dir / "negation.txt"
                if negation_path.exists():
                    cues[lang] = load_negation_cues(negation_path)
        profiles = {}
        profile_dir = root / "langid" / "profiles"
        if profile_dir.exists():
            profiles = langid.load_profiles(profile_dir)
        langs = languages or sorted(profiles)
        return cls(
            norm_resources=norm,
            analyzer=analyzer,
            lexicons=lexicons,
            negation_cues=cues,
            profiles=profiles,
            languages=langs,
        )

    # -- text preparation -------------------------------------------------
    def prepare(
        self, text: str, lang: str, source_kind: str = "social"
    ) -> tuple[list[AnalyzedToken], NormalizedText]:
        norm = normalize_message(text, lang, source_kind, self.norm_resources)
        if self.analyzer.supports(lang):
            tokens = self.analyzer.analyze(norm.text, lang)
        else:
            tokens = []
        return tokens, norm

    def identify(self, text: str, source_kind: str) -> langid.Identification:
        if not self.profiles:
            return langid.UNKNOWN
        candidates = set(self.languages) & set(self.profiles)
        return langid.identify(text, candidates, source_kind, self.profiles)

    # -- per-language accessors -------------------------------------------
    def lexicon(self, lang: str) -> PolarityLexicon | None:
        return self.lexicons.get(lang)

    def cues(self, lang: str) -> frozenset[str]:
        return self.negation_cues.get(lang, frozenset())

    def stopword_lemmas(self, lang: str) -> frozenset[str]:
        return self.norm_resources.for_lang(lang).stopword_lemmas
