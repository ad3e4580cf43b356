"""Typed model of a parsed domain: intents, entities, slots, responses, stories, rules.

All types are immutable after construction and safe to share across threads.
Declaration order is preserved everywhere; equality is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

IDENTIFIER_RE = re.compile(r"^[a-z][a-z0-9_]*$")

RESPONSE_PREFIX = "utter_"

# Actions that exist without being declared in the domain files.
ACTION_LISTEN = "action_listen"
ACTION_DEFAULT_FALLBACK = "action_default_fallback"
BUILTIN_ACTIONS = frozenset({ACTION_LISTEN, ACTION_DEFAULT_FALLBACK})

# Responses the engine renders on its own; the linter treats them as reachable.
RESERVED_RESPONSES = frozenset({"utter_default", "utter_wake_ack"})


@dataclass(frozen=True)
class EntityAnnotation:
    """A labelled span inside a training example (offsets into the clean text)."""

    start: int
    end: int
    entity: str


@dataclass(frozen=True)
class IntentDef:
    name: str
    examples: tuple[str, ...]
    annotations: tuple[tuple[EntityAnnotation, ...], ...] = ()

    def example_annotations(self, index: int) -> tuple[EntityAnnotation, ...]:
        if index < len(self.annotations):
            return self.annotations[index]
        return ()


@dataclass(frozen=True)
class EntityDef:
    name: str
    lookup: tuple[str, ...] = ()
    patterns: tuple[str, ...] = ()


@dataclass(frozen=True)
class SlotDef:
    name: str
    kind: str = "text"  # "text" | "bool"
    fill_from: str | None = None
    initial: str | bool | None = None


@dataclass(frozen=True)
class UserStep:
    intent: str
    entities: tuple[tuple[str, str], ...] = ()  # (entity name, example value)


@dataclass(frozen=True)
class BotStep:
    action: str


Step = UserStep | BotStep


@dataclass(frozen=True)
class StoryDef:
    name: str
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class RuleDef:
    name: str
    trigger: UserStep
    then: tuple[BotStep, ...]


@dataclass(frozen=True)
class ResponseDef:
    name: str
    variants: tuple[str, ...]


@dataclass(frozen=True)
class PipelineConfig:
    epochs: int = 100
    learning_rate: float = 0.5
    char_ngram_range: tuple[int, int] = (3, 3)
    fallback_threshold: float = 0.3


@dataclass(frozen=True)
class DomainSpec:
    """The validated, cross-referenced domain bundle."""

    intents: tuple[IntentDef, ...]
    entities: tuple[EntityDef, ...] = ()
    slots: tuple[SlotDef, ...] = ()
    responses: tuple[ResponseDef, ...] = ()
    custom_action_names: tuple[str, ...] = ()
    stories: tuple[StoryDef, ...] = ()
    rules: tuple[RuleDef, ...] = ()
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)

    def intent_names(self) -> tuple[str, ...]:
        return tuple(i.name for i in self.intents)

    def entity_by_name(self) -> dict[str, EntityDef]:
        return {e.name: e for e in self.entities}

    def slot_by_name(self) -> dict[str, SlotDef]:
        return {s.name: s for s in self.slots}

    def response_by_name(self) -> dict[str, ResponseDef]:
        return {r.name: r for r in self.responses}

    def action_names(self) -> frozenset[str]:
        """Every name a story/rule bot step may legally reference."""
        return frozenset(self.custom_action_names) | {r.name for r in self.responses} | BUILTIN_ACTIONS

    def initial_slots(self) -> dict[str, str | bool | None]:
        return {s.name: s.initial for s in self.slots}

    def fill_targets(self, entity: str) -> tuple[str, ...]:
        """Slots auto-filled when the given entity is extracted."""
        return tuple(s.name for s in self.slots if s.fill_from == entity)

    def rule_for_intent(self, intent: str) -> RuleDef | None:
        for rule in self.rules:
            if rule.trigger.intent == intent:
                return rule
        return None
