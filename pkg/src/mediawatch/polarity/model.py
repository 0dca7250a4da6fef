"""Polarity model: one-vs-rest linear classification over frozen features.

Three binary L2-hinge classifiers (negative/neutral/positive) share one
FeatureSpace built from the training split only. Evaluation is stratified
k-fold cross-validation with the space rebuilt per fold, reported as
accuracy plus per-class F1 and a confusion matrix.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .features import FeatureConfig, FeatureSpace, PolarityLexicon, raw_features
from .svm import SparseRows, decision_values, train_one_vs_rest

CLASS_ORDER = ("negative", "neutral", "positive")
MODEL_FORMAT = "mediawatch-polarity-model"
MODEL_VERSION = 1


class EmptyData(Exception):
    pass


class SingleClassData(Exception):
    pass


class InvalidFolds(Exception):
    pass


@dataclass(frozen=True)
class LabeledExample:
    text: str
    lang: str
    label: str
    target_entity: str | None = None

    def __post_init__(self) -> None:
        if self.label not in CLASS_ORDER:
            raise ValueError(f"label must be one of {CLASS_ORDER}, got {self.label!r}")


@dataclass(frozen=True)
class TrainConfig:
    C: float = 0.1
    max_epochs: int = 1000
    tol: float = 1e-3
    seed: int = 0
    features: FeatureConfig = field(default_factory=FeatureConfig)


@dataclass
class PolarityModel:
    lang: str
    space: FeatureSpace
    weights: np.ndarray  # 3 x space.size
    biases: np.ndarray  # 3
    config: TrainConfig
    version: int = MODEL_VERSION

    def decision(self, vector: dict[int, float]) -> dict[str, float]:
        values = decision_values(self.weights, self.biases, vector)
        return {cls: float(v) for cls, v in zip(CLASS_ORDER, values)}

    def classify(self, vector: dict[int, float]) -> tuple[str, dict[str, float]]:
        scores = self.decision(vector)
        # Ties resolve to the earliest class in negative < neutral < positive.
        label = max(CLASS_ORDER, key=lambda c: (scores[c], -CLASS_ORDER.index(c)))
        return label, scores


def load_dataset(path: str | Path) -> list[LabeledExample]:
    """JSON-lines dataset: {"text", "lang", "label", "entity"?} per line."""
    examples = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        payload = json.loads(line)
        try:
            examples.append(
                LabeledExample(
                    text=payload["text"],
                    lang=payload["lang"],
                    label=payload["label"],
                    target_entity=payload.get("entity"),
                )
            )
        except (KeyError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return examples


def _prepare(stack, example: LabeledExample, config: FeatureConfig) -> dict[str, float]:
    tokens, norm = stack.prepare(example.text, example.lang)
    return raw_features(
        tokens,
        norm,
        stack.lexicon(example.lang),
        stack.cues(example.lang),
        stack.stopword_lemmas(example.lang),
        config,
    )


def _validate(examples: list[LabeledExample]) -> str:
    if not examples:
        raise EmptyData("no training examples")
    langs = {e.lang for e in examples}
    if len(langs) != 1:
        raise ValueError(f"examples span multiple languages: {sorted(langs)}")
    if len({e.label for e in examples}) < 2:
        raise SingleClassData("all examples carry the same label")
    return examples[0].lang


def train(examples: list[LabeledExample], stack, config: TrainConfig = TrainConfig()) -> PolarityModel:
    """Train a 3-class one-vs-rest model; deterministic under a fixed seed."""
    lang = _validate(examples)
    raws = [_prepare(stack, e, config.features) for e in examples]
    space = FeatureSpace.from_training(raws, stack.lexicon(lang), config.features)
    rows = [space.vectorize(raw) for raw in raws]
    X = SparseRows.from_dicts(rows, space.size)
    W, b = train_one_vs_rest(
        X,
        [e.label for e in examples],
        CLASS_ORDER,
        C=config.C,
        max_epochs=config.max_epochs,
        tol=config.tol,
        seed=config.seed,
    )
    return PolarityModel(lang=lang, space=space, weights=W, biases=b, config=config)


def predict(
    model: PolarityModel, text: str, stack, source_kind: str = "social"
) -> tuple[str, dict[str, float]]:
    """Label one text with the model's language resources; returns raw margins."""
    tokens, norm = stack.prepare(text, model.lang, source_kind)
    raw = raw_features(
        tokens,
        norm,
        stack.lexicon(model.lang),
        stack.cues(model.lang),
        stack.stopword_lemmas(model.lang),
        model.config.features,
    )
    return model.classify(model.space.vectorize(raw))


@dataclass
class EvalReport:
    accuracy: float
    f1: dict[str, float]  # per class
    folds: int
    confusion: dict[str, dict[str, int]]  # confusion[gold][predicted]

    @property
    def supports(self) -> dict[str, int]:
        return {cls: sum(row.values()) for cls, row in self.confusion.items()}

    def table_row(self) -> str:
        return (
            f"{self.accuracy * 100:.2f}\t{self.f1['positive']:.3f}"
            f"\t{self.f1['negative']:.3f}\t{self.f1['neutral']:.3f}"
        )


def stratified_folds(labels: list[str], k: int, seed: int) -> list[list[int]]:
    """Deal each class round-robin into k folds after a seeded shuffle."""
    rng = random.Random(seed)
    by_class: dict[str, list[int]] = {}
    for i, label in enumerate(labels):
        by_class.setdefault(label, []).append(i)
    folds: list[list[int]] = [[] for _ in range(k)]
    offset = 0
    for label in sorted(by_class):
        idxs = by_class[label]
        rng.shuffle(idxs)
        for j, idx in enumerate(idxs):
            folds[(offset + j) % k].append(idx)
        offset += len(idxs)
    return [sorted(f) for f in folds]


def _f1(confusion: dict[str, dict[str, int]], cls: str) -> float:
    tp = confusion[cls][cls]
    fp = sum(confusion[gold][cls] for gold in CLASS_ORDER if gold != cls)
    fn = sum(confusion[cls][pred] for pred in CLASS_ORDER if pred != cls)
    denom = 2 * tp + fp + fn
    return (2 * tp / denom) if denom else 0.0


def cross_validate(
    examples: list[LabeledExample],
    stack,
    k: int = 10,
    config: TrainConfig = TrainConfig(),
) -> EvalReport:
    """Stratified k-fold CV; the feature space is rebuilt per training split."""
    if k < 2 or k > len(examples):
        raise InvalidFolds(f"k={k} with {len(examples)} examples")
    lang = _validate(examples)
    raws = [_prepare(stack, e, config.features) for e in examples]
    labels = [e.label for e in examples]
    folds = stratified_folds(labels, k, config.seed)
    confusion = {g: {p: 0 for p in CLASS_ORDER} for g in CLASS_ORDER}
    lexicon = stack.lexicon(lang)
    for held_out in folds:
        held = set(held_out)
        train_idx = [i for i in range(len(examples)) if i not in held]
        train_labels = [labels[i] for i in train_idx]
        if len(set(train_labels)) < 2:
            raise SingleClassData("training split degenerate; use fewer folds")
        space = FeatureSpace.from_training([raws[i] for i in train_idx], lexicon, config.features)
        X = SparseRows.from_dicts([space.vectorize(raws[i]) for i in train_idx], space.size)
        W, b = train_one_vs_rest(
            X, train_labels, CLASS_ORDER, C=config.C, max_epochs=config.max_epochs,
            tol=config.tol, seed=config.seed,
        )
        model = PolarityModel(lang=lang, space=space, weights=W, biases=b, config=config)
        for i in held_out:
            predicted, _ = model.classify(space.vectorize(raws[i]))
            confusion[labels[i]][predicted] += 1
    total = sum(sum(row.values()) for row in confusion.values())
    correct = sum(confusion[c][c] for c in CLASS_ORDER)
    return EvalReport(
        accuracy=correct / total if total else 0.0,
        f1={cls: _f1(confusion, cls) for cls in CLASS_ORDER},
        folds=k,
        confusion=confusion,
    )


def evaluate_model(model: PolarityModel, examples: list[LabeledExample], stack) -> EvalReport:
    """Score a trained model on labeled data (no retraining)."""
    if not examples:
        raise EmptyData("no evaluation examples")
    confusion = {g: {p: 0 for p in CLASS_ORDER} for g in CLASS_ORDER}
    for example in examples:
        predicted, _ = predict(model, example.text, stack)
        confusion[example.label][predicted] += 1
    total = len(examples)
    correct = sum(confusion[c][c] for c in CLASS_ORDER)
    return EvalReport(
        accuracy=correct / total,
        f1={cls: _f1(confusion, cls) for cls in CLASS_ORDER},
        folds=1,
        confusion=confusion,
    )


# ---------------------------------------------------------------------------
# Model file format: versioned JSON (stable field set, documented in README)

def save_model(model: PolarityModel, path: str | Path) -> None:
    payload = {
        "format": MODEL_FORMAT,
        "version": model.version,
        "lang": model.lang,
        "class_order": list(CLASS_ORDER),
        "feature_names": model.space.names,
        "feature_config": asdict(model.space.config),
        "train_config": {
            "C": model.config.C,
            "max_epochs": model.config.max_epochs,
            "tol": model.config.tol,
            "seed": model.config.seed,
        },
        "weights": [row.tolist() for row in model.weights],
        "biases": model.biases.tolist(),
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_model(path: str | Path) -> PolarityModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError(f"{path}: not a polarity model file")
    if payload.get("version") != MODEL_VERSION:
        raise ValueError(f"{path}: unsupported model version {payload.get('version')}")
    if tuple(payload["class_order"]) != CLASS_ORDER:
        raise ValueError(f"{path}: unexpected class order")
    feature_config = FeatureConfig(**payload["feature_config"])
    space = FeatureSpace(
        index={name: i for i, name in enumerate(payload["feature_names"])},
        config=feature_config,
    )
    config = TrainConfig(features=feature_config, **payload["train_config"])
    return PolarityModel(
        lang=payload["lang"],
        space=space,
        weights=np.array(payload["weights"], dtype=np.float64),
        biases=np.array(payload["biases"], dtype=np.float64),
        config=config,
        version=payload["version"],
    )
