"""Entity extraction: gazetteer lookups over token windows plus regex patterns."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..dsl.types import DomainSpec
from .tokenizer import TokenSeq

SOURCE_LOOKUP = "lookup"
SOURCE_PATTERN = "pattern"

_SOURCE_RANK = {SOURCE_LOOKUP: 0, SOURCE_PATTERN: 1}


@dataclass(frozen=True)
class EntityMatch:
    entity: str
    value: str
    start: int
    end: int
    source: str  # "lookup" | "pattern"


def _lookup_matches(spec: DomainSpec, tokens: TokenSeq) -> list[EntityMatch]:
    matches: list[EntityMatch] = []
    for entity in spec.entities:
        for value in entity.lookup:
            value_tokens = [t.lower() for t in value.split()]
            width = len(value_tokens)
            if width == 0:
                continue
            for i in range(len(tokens) - width + 1):
                window = tokens[i : i + width]
                if [t.text for t in window] == value_tokens:
                    matches.append(
                        EntityMatch(entity.name, value, window[0].start, window[-1].end, SOURCE_LOOKUP)
                    )
    return matches


def _pattern_matches(spec: DomainSpec, utterance: str) -> list[EntityMatch]:
    matches: list[EntityMatch] = []
    for entity in spec.entities:
        for pattern in entity.patterns:
            for m in re.finditer(pattern, utterance, re.IGNORECASE):
                if m.start() == m.end():
                    continue
                matches.append(EntityMatch(entity.name, m.group(), m.start(), m.end(), SOURCE_PATTERN))
    return matches


def extract_entities(spec: DomainSpec, utterance: str, tokens: TokenSeq) -> list[EntityMatch]:
    """Scan for entity mentions and resolve overlaps deterministically.

    Gazetteer values match case-insensitively against token windows (the
    reported value is the canonical gazetteer casing); patterns match the raw
    string. Overlaps resolve longest span first, then leftmost, then lookup
    over pattern, then entity name.
    """
    candidates = _lookup_matches(spec, tokens) + _pattern_matches(spec, utterance)
    candidates.sort(key=lambda m: (-(m.end - m.start), m.start, _SOURCE_RANK[m.source], m.entity))
    chosen: list[EntityMatch] = []
    for candidate in candidates:
        if all(candidate.end <= kept.start or candidate.start >= kept.end for kept in chosen):
            chosen.append(candidate)
    chosen.sort(key=lambda m: m.start)
    return chosen
