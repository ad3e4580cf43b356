"""Linear softmax intent classifier trained by full-batch gradient descent.

The model is deliberately small: bag-of-words plus character n-gram counts
feeding a multinomial logistic regression. Weights start at zero and every
step is deterministic, so identical inputs produce bit-identical models.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..dsl.types import DomainSpec, PipelineConfig
from .features import FeatureVector, Vocabulary, build_vocabulary, featurize
from .tokenizer import TokenSeq, tokenize

MODEL_FORMAT = "vehicle-assistant/intent-classifier"
MODEL_VERSION = 1


class TrainError(Exception):
    """Raised when the training corpus cannot produce a model."""


@dataclass(frozen=True)
class ClassifierModel:
    """Trained classifier: weights, biases, and the vocabulary they index."""

    intents: tuple[str, ...]
    vocab: Vocabulary
    weights: np.ndarray  # (num_intents, dimension)
    biases: np.ndarray  # (num_intents,)
    config: PipelineConfig
    loss_trace: tuple[float, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassifierModel):
            return NotImplemented
        return (
            self.intents == other.intents
            and self.vocab == other.vocab
            and np.array_equal(self.weights, other.weights)
            and np.array_equal(self.biases, other.biases)
            and self.config == other.config
            and self.loss_trace == other.loss_trace
        )

    def fingerprint(self) -> str:
        return hashlib.sha256(dumps_model(self).encode("utf-8")).hexdigest()


def _dense_matrix(vectors: list[FeatureVector], dimension: int) -> np.ndarray:
    x = np.zeros((len(vectors), dimension))
    for row, vec in enumerate(vectors):
        for idx, count in vec.values.items():
            x[row, idx] = count
    return x


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def loss_and_gradient(
    weights: np.ndarray, biases: np.ndarray, x: np.ndarray, labels: np.ndarray
) -> tuple[float, np.ndarray, np.ndarray]:
    """Mean cross-entropy of softmax(weights @ x + biases) and its gradients."""
    n = x.shape[0]
    probs = _softmax(x @ weights.T + biases)
    log_likelihood = -np.log(np.clip(probs[np.arange(n), labels], 1e-300, None))
    loss = float(log_likelihood.mean())
    delta = probs
    delta[np.arange(n), labels] -= 1.0
    delta /= n
    grad_w = delta.T @ x
    grad_b = delta.sum(axis=0)
    return loss, grad_w, grad_b


def training_matrix(spec: DomainSpec, vocab: Vocabulary) -> tuple[np.ndarray, np.ndarray]:
    """Dense feature matrix and label vector for every (example, intent) pair."""
    vectors: list[FeatureVector] = []
    labels: list[int] = []
    for row, intent in enumerate(spec.intents):
        for example in intent.examples:
            vectors.append(featurize(tokenize(example), vocab))
            labels.append(row)
    return _dense_matrix(vectors, len(vocab)), np.asarray(labels, dtype=np.int64)


def train(spec: DomainSpec, seed: int = 0) -> ClassifierModel:
    """Fit the classifier on the spec's examples.

    Full-batch gradient descent for ``config.epochs`` steps at
    ``config.learning_rate``, weights initialized to zero. ``seed`` is
    reserved for optional shuffling; the default path does not consume it,
    so results depend only on the spec.
    """
    for intent in spec.intents:
        if not intent.examples:
            raise TrainError(f"intent {intent.name!r} has no examples")
    config = spec.pipeline
    corpus: list[TokenSeq] = [tokenize(ex) for intent in spec.intents for ex in intent.examples]
    vocab = build_vocabulary(corpus, config.char_ngram_range)
    x, labels = training_matrix(spec, vocab)

    num_intents = len(spec.intents)
    weights = np.zeros((num_intents, len(vocab)))
    biases = np.zeros(num_intents)
    trace: list[float] = []
    for _ in range(config.epochs):
        loss, grad_w, grad_b = loss_and_gradient(weights, biases, x, labels)
        trace.append(loss)
        weights = weights - config.learning_rate * grad_w
        biases = biases - config.learning_rate * grad_b

    if not (np.isfinite(weights).all() and np.isfinite(biases).all()):
        raise TrainError("training diverged: non-finite parameters")
    return ClassifierModel(
        intents=tuple(i.name for i in spec.intents),
        vocab=vocab,
        weights=weights,
        biases=biases,
        config=config,
        loss_trace=tuple(trace),
    )


def scores(model: ClassifierModel, utterance: str) -> np.ndarray:
    """Softmax confidence per intent (model row order) for one utterance."""
    vec = featurize(tokenize(utterance), model.vocab)
    x = _dense_matrix([vec], len(model.vocab))
    return _softmax(x @ model.weights.T + model.biases)[0]


def rank_intents(model: ClassifierModel, utterance: str) -> list[tuple[str, float]]:
    """Intents with confidences, sorted descending; ties break by name."""
    confidences = scores(model, utterance)
    ranking = sorted(zip(model.intents, confidences), key=lambda pair: (-pair[1], pair[0]))
    return [(name, float(conf)) for name, conf in ranking]


def training_accuracy(model: ClassifierModel, spec: DomainSpec) -> float:
    """Share of training examples whose argmax matches their intent."""
    total = 0
    correct = 0
    for intent in spec.intents:
        for example in intent.examples:
            total += 1
            if rank_intents(model, example)[0][0] == intent.name:
                correct += 1
    return correct / total if total else 0.0


# -- persistence ---------------------------------------------------------

def dumps_model(model: ClassifierModel) -> str:
    """Serialize to JSON. Floats round-trip exactly via repr, so a
    save/load cycle reproduces the model bit for bit."""
    payload = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "intents": list(model.intents),
        "vocab": list(model.vocab.index),
        "ngram_range": list(model.vocab.ngram_range),
        "weights": model.weights.tolist(),
        "biases": model.biases.tolist(),
        "config": {
            "epochs": model.config.epochs,
            "learning_rate": model.config.learning_rate,
            "char_ngram_range": list(model.config.char_ngram_range),
            "fallback_threshold": model.config.fallback_threshold,
        },
        "loss_trace": list(model.loss_trace),
    }
    return json.dumps(payload, separators=(",", ":"))


def loads_model(text: str) -> ClassifierModel:
    payload = json.loads(text)
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError("not a recognized model file")
    if payload.get("version") != MODEL_VERSION:
        raise ValueError(f"unsupported model version {payload.get('version')!r}")
    config = payload["config"]
    return ClassifierModel(
        intents=tuple(payload["intents"]),
        vocab=Vocabulary({name: i for i, name in enumerate(payload["vocab"])}, tuple(payload["ngram_range"])),
        weights=np.asarray(payload["weights"], dtype=np.float64),
        biases=np.asarray(payload["biases"], dtype=np.float64),
        config=PipelineConfig(
            epochs=config["epochs"],
            learning_rate=config["learning_rate"],
            char_ngram_range=tuple(config["char_ngram_range"]),
            fallback_threshold=config["fallback_threshold"],
        ),
        loss_trace=tuple(payload["loss_trace"]),
    )


def save_model(model: ClassifierModel, path: str | Path) -> None:
    Path(path).write_text(dumps_model(model), encoding="utf-8")


def load_model(path: str | Path) -> ClassifierModel:
    return loads_model(Path(path).read_text(encoding="utf-8"))
