"""Feature extraction for polarity classification.

Raw features are named counts extracted from the analyzed tokens plus the
normalization annotations; a FeatureSpace frozen at training time maps
names to vector slots. Unigrams are admitted with corpus frequency >= 2
and document frequency >= 2; unknown names are ignored at prediction time.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from ..nlp import COARSE_TAGS, AnalyzedToken
from ..normalize import EMOTICON_CATEGORIES, NormalizedText

POS_CLASS = "pos"
NEG_CLASS = "neg"

SCALAR_NAMES = (
    "positive_count",
    "negative_count",
    "sentence_length",
    "uppercase_ratio",
    "interjection_count",
    "exclamation_count",
    "question_count",
) + tuple(f"emo_{cat}" for cat in EMOTICON_CATEGORIES)

_COUNT_SCALARS = frozenset(
    {"positive_count", "negative_count", "interjection_count", "exclamation_count", "question_count"}
    | {f"emo_{cat}" for cat in EMOTICON_CATEGORIES}
)


class LexiconError(Exception):
    pass


@dataclass(frozen=True)
class PolarityLexicon:
    lang: str
    entries: dict[str, str]  # lemma -> pos|neg
    locutions: dict[tuple[str, ...], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.entries:
            raise LexiconError(f"{self.lang}: empty polarity lexicon")

    @property
    def max_locution_len(self) -> int:
        return max((len(k) for k in self.locutions), default=0)


def load_polarity_lexicon(path: str | Path, lang: str, locutions_path: str | Path | None = None) -> PolarityLexicon:
    entries: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        lemma, cls = line.split("\t")
        lemma = lemma.lower()
        if cls not in (POS_CLASS, NEG_CLASS):
            raise LexiconError(f"{path}:{lineno}: class must be pos|neg, got {cls!r}")
        if lemma in entries and entries[lemma] != cls:
            raise LexiconError(f"{path}:{lineno}: {lemma!r} appears in both classes")
        entries[lemma] = cls
    locutions: dict[tuple[str, ...], str] = {}
    if locutions_path is not None and Path(locutions_path).exists():
        for line in Path(locutions_path).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            phrase, cls = line.split("\t")
            words = tuple(phrase.lower().split())
            if len(words) < 2:
                raise LexiconError(f"locution {phrase!r} must be multi-word")
            locutions[words] = cls
    return PolarityLexicon(lang=lang, entries=entries, locutions=locutions)


def load_negation_cues(path: str | Path) -> frozenset[str]:
    return frozenset(
        line.strip().lower()
        for line in Path(path).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    )


@dataclass(frozen=True)
class FeatureConfig:
    negation_window: int = 3
    uppercase_denominator: str = "letters"  # "letters" or "characters"
    lexicon_counts: bool = True  # False: binary lexicon indicator features
    length_cap: int = 100
    count_cap: int = 10


def _negated_positions(tokens: list[AnalyzedToken], cues: frozenset[str], window: int) -> set[int]:
    """Positions within *window* tokens after a negation cue, stopping at punctuation."""
    negated: set[int] = set()
    i = 0
    n = len(tokens)
    while i < n:
        if tokens[i].surface.lower() in cues:
            j = i + 1
            taken = 0
            while j < n and taken < window:
                if tokens[j].pos == "PUNCT":
                    break
                negated.add(j)
                taken += 1
                j += 1
        i += 1
    return negated


def raw_features(
    tokens: list[AnalyzedToken],
    norm: NormalizedText,
    lexicon: PolarityLexicon | None,
    cues: frozenset[str],
    stopword_lemmas: frozenset[str],
    config: FeatureConfig = FeatureConfig(),
) -> dict[str, float]:
    """Named raw feature counts for one analyzed unit (scalars unscaled)."""
    feats: Counter[str] = Counter()
    negated = _negated_positions(tokens, cues, config.negation_window)

    letters = 0
    upper = 0
    chars = 0
    for pos_idx, tok in enumerate(tokens):
        is_pipeline = tok.pos == "SYM" and tok.surface.startswith("_")
        if tok.pos != "PUNCT" and (is_pipeline or tok.lemma not in stopword_lemmas):
            feats[f"w={tok.surface.lower()}"] += 1
        feats[f"pos={tok.pos}"] += 1
        if not is_pipeline:
            for ch in tok.surface:
                chars += 1
                if ch.isalpha():
                    letters += 1
                    if ch.isupper():
                        upper += 1
        if lexicon is not None:
            cls = lexicon.entries.get(tok.lemma)
            if cls is not None:
                if pos_idx in negated:
                    feats[f"lex={tok.lemma}_NEG"] += 1
                    feats["negative_count" if cls == POS_CLASS else "positive_count"] += 1
                else:
                    feats[f"lex={tok.lemma}"] += 1
                    feats["positive_count" if cls == POS_CLASS else "negative_count"] += 1

    if lexicon is not None and lexicon.locutions:
        lemmas = [t.lemma for t in tokens]
        max_len = lexicon.max_locution_len
        for start in range(len(lemmas)):
            for length in range(max_len, 1, -1):
                phrase = tuple(lemmas[start : start + length])
                if len(phrase) < length:
                    continue
                cls = lexicon.locutions.get(phrase)
                if cls is not None:
                    key = " ".join(phrase)
                    if start in negated:
                        feats[f"loc={key}_NEG"] += 1
                        feats["negative_count" if cls == POS_CLASS else "positive_count"] += 1
                    else:
                        feats[f"loc={key}"] += 1
                        feats["positive_count" if cls == POS_CLASS else "negative_count"] += 1
                    break

    feats.setdefault("positive_count", 0)
    feats.setdefault("negative_count", 0)
    feats["sentence_length"] = len(tokens)
    denom = letters if config.uppercase_denominator == "letters" else chars
    feats["uppercase_ratio"] = (upper / denom) if denom else 0.0
    feats["interjection_count"] = norm.interjection_count
    full_text = " ".join(t.surface for t in tokens)
    feats["exclamation_count"] = full_text.count("!")
    feats["question_count"] = full_text.count("?")
    for cat in EMOTICON_CATEGORIES:
        feats[f"emo_{cat}"] = norm.emoticon_counts.get(cat, 0)
    return dict(feats)


@dataclass(frozen=True)
class FeatureSpace:
    """Frozen name -> slot mapping plus the scaling rules."""

    index: dict[str, int]
    config: FeatureConfig

    @property
    def size(self) -> int:
        return len(self.index)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in sorted(self.index.items(), key=lambda kv: kv[1])]

    @classmethod
    def from_training(
        cls,
        raw_dicts: list[dict[str, float]],
        lexicon: PolarityLexicon | None,
        config: FeatureConfig = FeatureConfig(),
    ) -> "FeatureSpace":
        freq: Counter[str] = Counter()
        df: Counter[str] = Counter()
        observed: set[str] = set()
        for raw in raw_dicts:
            for name, value in raw.items():
                if name.startswith("w="):
                    freq[name] += int(value)
                    df[name] += 1
                elif name.startswith(("loc=", "lex=")):
                    observed.add(name)
        names: list[str] = [name for name in sorted(freq) if freq[name] >= 2 and df[name] >= 2]
        names.extend(f"pos={tag}" for tag in sorted(COARSE_TAGS))
        if lexicon is not None:
            for lemma in sorted(lexicon.entries):
                names.append(f"lex={lemma}")
                names.append(f"lex={lemma}_NEG")
            for phrase in sorted(lexicon.locutions):
                key = " ".join(phrase)
                names.append(f"loc={key}")
                names.append(f"loc={key}_NEG")
        names.extend(sorted(observed - set(names)))
        names.extend(SCALAR_NAMES)
        return cls(index={name: i for i, name in enumerate(names)}, config=config)

    def _scale(self, name: str, value: float) -> float:
        if name == "sentence_length":
            return min(value, self.config.length_cap) / self.config.length_cap
        if name in _COUNT_SCALARS:
            return min(value, self.config.count_cap) / self.config.count_cap
        if not self.config.lexicon_counts and name.startswith(("lex=", "loc=")):
            return 1.0 if value else 0.0
        return value

    def vectorize(self, raw: dict[str, float]) -> dict[int, float]:
        vector: dict[int, float] = {}
        for name, value in raw.items():
            slot = self.index.get(name)
            if slot is None:
                continue
            scaled = self._scale(name, value)
            if scaled != 0.0:
                vector[slot] = scaled
        return vector


def extract_features(
    tokens: list[AnalyzedToken],
    norm: NormalizedText,
    lexicon: PolarityLexicon | None,
    space: FeatureSpace,
    cues: frozenset[str] = frozenset(),
    stopword_lemmas: frozenset[str] = frozenset(),
) -> dict[int, float]:
    """Sparse feature vector for one unit against a frozen space."""
    return space.vectorize(
        raw_features(tokens, norm, lexicon, cues, stopword_lemmas, space.config)
    )
