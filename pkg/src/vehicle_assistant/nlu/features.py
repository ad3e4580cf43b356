"""Bag-of-features vectorization: word counts plus in-token character n-grams."""

from __future__ import annotations

from dataclasses import dataclass, field

from .tokenizer import TokenSeq

BOUNDARY = "#"

WORD_PREFIX = "word:"
CHAR_PREFIX = "char:"


@dataclass(frozen=True)
class Vocabulary:
    """Closed feature vocabulary built from a training corpus."""

    index: dict[str, int]
    ngram_range: tuple[int, int]

    def __len__(self) -> int:
        return len(self.index)


@dataclass(frozen=True)
class FeatureVector:
    """Sparse count vector over a fixed vocabulary."""

    values: dict[int, int] = field(default_factory=dict)
    dimension: int = 0


def _char_ngrams(text: str, n: int) -> list[str]:
    padded = BOUNDARY + text + BOUNDARY
    if len(padded) < n:
        return []
    return [padded[i : i + n] for i in range(len(padded) - n + 1)]


def extract_feature_strings(tokens: TokenSeq, ngram_range: tuple[int, int]) -> list[str]:
    """All feature strings for the tokens: ``word:<token>`` entries, then
    ``char:<gram>`` n-grams computed within each token padded with a single
    boundary mark on each side."""
    features: list[str] = []
    lo, hi = ngram_range
    for token in tokens:
        features.append(WORD_PREFIX + token.text)
    for token in tokens:
        for n in range(lo, hi + 1):
            features.extend(CHAR_PREFIX + gram for gram in _char_ngrams(token.text, n))
    return features


def build_vocabulary(corpus: list[TokenSeq], ngram_range: tuple[int, int]) -> Vocabulary:
    """Assign indices to every feature seen in the corpus, in first-seen order."""
    index: dict[str, int] = {}
    for tokens in corpus:
        for feature in extract_feature_strings(tokens, ngram_range):
            if feature not in index:
                index[feature] = len(index)
    return Vocabulary(index, ngram_range)


def featurize(tokens: TokenSeq, vocab: Vocabulary) -> FeatureVector:
    """Count in-vocabulary features; unseen features are dropped."""
    values: dict[int, int] = {}
    for feature in extract_feature_strings(tokens, vocab.ngram_range):
        idx = vocab.index.get(feature)
        if idx is not None:
            values[idx] = values.get(idx, 0) + 1
    return FeatureVector(values, len(vocab))
