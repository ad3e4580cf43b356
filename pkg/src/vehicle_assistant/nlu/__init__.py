"""Utterance understanding: tokenization, featurization, intent classification,
entity extraction."""

from .classifier import (
    ClassifierModel,
    TrainError,
    dumps_model,
    load_model,
    loads_model,
    loss_and_gradient,
    rank_intents,
    save_model,
    train,
    training_accuracy,
)
from .entities import EntityMatch, extract_entities
from .features import FeatureVector, Vocabulary, build_vocabulary, featurize
from .pipeline import NluResult, classify, nlu
from .tokenizer import Token, TokenSeq, tokenize

__all__ = [
    "ClassifierModel",
    "EntityMatch",
    "FeatureVector",
    "NluResult",
    "Token",
    "TokenSeq",
    "TrainError",
    "Vocabulary",
    "build_vocabulary",
    "classify",
    "dumps_model",
    "extract_entities",
    "featurize",
    "load_model",
    "loads_model",
    "loss_and_gradient",
    "nlu",
    "rank_intents",
    "save_model",
    "train",
    "training_accuracy",
]
