"""Polarity classification: features, linear SVM, evaluation, entity rules."""

from .entity import assign_entity_polarity, combine_entity_polarity
from .features import (
    FeatureConfig,
    FeatureSpace,
    PolarityLexicon,
    extract_features,
    load_negation_cues,
    load_polarity_lexicon,
    raw_features,
)
from .model import (
    CLASS_ORDER,
    EmptyData,
    EvalReport,
    InvalidFolds,
    LabeledExample,
    PolarityModel,
    SingleClassData,
    TrainConfig,
    cross_validate,
    load_dataset,
    load_model,
    predict,
    save_model,
    train,
)

__all__ = [
    "CLASS_ORDER",
    "EmptyData",
    "EvalReport",
    "FeatureConfig",
    "FeatureSpace",
    "InvalidFolds",
    "LabeledExample",
    "PolarityLexicon",
    "PolarityModel",
    "SingleClassData",
    "TrainConfig",
    "assign_entity_polarity",
    "combine_entity_polarity",
    "cross_validate",
    "extract_features",
    "load_dataset",
    "load_model",
    "load_negation_cues",
    "load_polarity_lexicon",
    "predict",
    "raw_features",
    "save_model",
    "train",
]
