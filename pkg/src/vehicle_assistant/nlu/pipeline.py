"""End-to-end understanding of one utterance: intent ranking plus entities."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..dsl.types import DomainSpec
from .classifier import ClassifierModel, rank_intents
from .entities import EntityMatch, extract_entities
from .tokenizer import tokenize


@dataclass(frozen=True)
class NluResult:
    """Intent confidences (descending, summing to 1) and extracted entities."""

    ranking: tuple[tuple[str, float], ...]
    entities: tuple[EntityMatch, ...] = ()
    is_fallback: bool = False

    @property
    def intent(self) -> str:
        return self.ranking[0][0]

    @property
    def confidence(self) -> float:
        return self.ranking[0][1]

    def entity_values(self) -> dict[str, str]:
        """First extracted value per entity name."""
        values: dict[str, str] = {}
        for match in self.entities:
            values.setdefault(match.entity, match.value)
        return values

    def to_dict(self) -> dict:
        return {
            "ranking": [[name, conf] for name, conf in self.ranking],
            "entities": [
                {"entity": m.entity, "value": m.value, "start": m.start, "end": m.end, "source": m.source}
                for m in self.entities
            ],
            "is_fallback": self.is_fallback,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NluResult":
        return cls(
            ranking=tuple((name, float(conf)) for name, conf in data["ranking"]),
            entities=tuple(
                EntityMatch(e["entity"], e["value"], e["start"], e["end"], e["source"])
                for e in data["entities"]
            ),
            is_fallback=bool(data["is_fallback"]),
        )


def classify(model: ClassifierModel, utterance: str) -> NluResult:
    """Rank intents for the utterance; below-threshold confidence flags fallback.

    An empty or whitespace-only utterance never reaches the classifier: it
    yields a uniform ranking marked as fallback.
    """
    if not utterance.strip():
        uniform = 1.0 / len(model.intents)
        ranking = tuple((name, uniform) for name in sorted(model.intents))
        return NluResult(ranking=ranking, is_fallback=True)
    ranking = tuple(rank_intents(model, utterance))
    return NluResult(ranking=ranking, is_fallback=ranking[0][1] < model.config.fallback_threshold)


def nlu(model: ClassifierModel, spec: DomainSpec, utterance: str) -> NluResult:
    """Tokenize, classify, and extract entities for one utterance."""
    result = classify(model, utterance)
    matches = extract_entities(spec, utterance, tokenize(utterance))
    return NluResult(ranking=result.ranking, entities=tuple(matches), is_fallback=result.is_fallback)
