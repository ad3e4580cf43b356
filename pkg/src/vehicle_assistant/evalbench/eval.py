"""Intent-accuracy evaluation over a labeled utterance set."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import yaml

from ..nlu.classifier import ClassifierModel
from ..nlu.pipeline import classify
from .report import EvalReport

SAMPLE_ROWS = 10


class DatasetError(Exception):
    """The labeled dataset references an unknown intent or is malformed."""


@dataclass(frozen=True)
class LabeledUtterance:
    text: str
    expected_intent: str


def load_eval_dataset(path: str | Path) -> list[LabeledUtterance]:
    data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or "dataset" not in data:
        raise DatasetError("dataset file needs a top-level 'dataset' list")
    rows = data["dataset"]
    if not isinstance(rows, list) or not rows:
        raise DatasetError("'dataset' must be a non-empty list")
    dataset: list[LabeledUtterance] = []
    for row in rows:
        if not isinstance(row, dict) or "text" not in row or "intent" not in row:
            raise DatasetError(f"each row needs 'text' and 'intent': {row!r}")
        dataset.append(LabeledUtterance(str(row["text"]), str(row["intent"])))
    return dataset


def eval_intents(model: ClassifierModel, dataset: list[LabeledUtterance]) -> EvalReport:
    """Classify every utterance; exact counts feed the confusion matrix.

    The matrix is indexed [expected][predicted] over the model's intents, so
    its total equals the dataset size and its diagonal the correct count.
    """
    if not dataset:
        raise DatasetError("dataset is empty")
    index = {name: i for i, name in enumerate(model.intents)}
    for item in dataset:
        if item.expected_intent not in index:
            raise DatasetError(f"unknown expected intent {item.expected_intent!r}")
    size = len(model.intents)
    confusion = [[0] * size for _ in range(size)]
    samples: list[tuple[str, str, str]] = []
    correct = 0
    for item in dataset:
        predicted = classify(model, item.text).intent
        confusion[index[item.expected_intent]][index[predicted]] += 1
        if predicted == item.expected_intent:
            correct += 1
        if len(samples) < SAMPLE_ROWS:
            samples.append((item.text, predicted, item.expected_intent))
    return EvalReport(
        intents=model.intents,
        confusion=tuple(tuple(row) for row in confusion),
        correct_count=correct,
        total_count=len(dataset),
        samples=tuple(samples),
    )
