"""Serialize a DomainSpec back to its five-file document set.

Output is canonical: declaration order preserved, entity spans re-rendered
as ``[text](entity)`` markers. ``parse_domain(serialize_domain(spec))``
is structurally equal to ``spec``.
"""

from __future__ import annotations

import yaml

from .parser import CONFIG_FILE, DOMAIN_FILE, NLU_FILE, RULES_FILE, STORIES_FILE, render_example_markup
from .types import BotStep, DomainSpec, UserStep


def _dump(data: dict) -> str:
    return yaml.safe_dump(data, sort_keys=False, allow_unicode=True, default_flow_style=False)


def serialize_domain(spec: DomainSpec) -> dict[str, str]:
    """Render the spec as a filename -> document text mapping."""
    domain: dict[str, object] = {"intents": list(spec.intent_names())}
    if spec.entities:
        entities: dict[str, dict] = {}
        for entity in spec.entities:
            block: dict[str, object] = {}
            if entity.lookup:
                block["lookup"] = list(entity.lookup)
            if entity.patterns:
                block["patterns"] = list(entity.patterns)
            entities[entity.name] = block
        domain["entities"] = entities
    if spec.slots:
        slots: dict[str, dict] = {}
        for slot in spec.slots:
            block = {"kind": slot.kind}
            if slot.fill_from is not None:
                block["fill_from"] = slot.fill_from
            if slot.initial is not None:
                block["initial"] = slot.initial
            slots[slot.name] = block
        domain["slots"] = slots
    if spec.responses:
        domain["responses"] = {r.name: list(r.variants) for r in spec.responses}
    if spec.custom_action_names:
        domain["actions"] = list(spec.custom_action_names)

    nlu = {
        "intents": {
            intent.name: [
                render_example_markup(example, intent.example_annotations(i))
                for i, example in enumerate(intent.examples)
            ]
            for intent in spec.intents
        }
    }

    stories = []
    for story in spec.stories:
        steps: list[dict] = []
        for step in story.steps:
            if isinstance(step, UserStep):
                block = {"intent": step.intent}
                if step.entities:
                    block["entities"] = dict(step.entities)
                steps.append(block)
            else:
                steps.append({"action": step.action})
        stories.append({"story": story.name, "steps": steps})

    rules = [
        {"rule": rule.name, "trigger": rule.trigger.intent, "then": [step.action for step in rule.then]}
        for rule in spec.rules
    ]

    config = {
        "pipeline": {
            "epochs": spec.pipeline.epochs,
            "learning_rate": spec.pipeline.learning_rate,
            "char_ngram_range": list(spec.pipeline.char_ngram_range),
            "fallback_threshold": spec.pipeline.fallback_threshold,
        }
    }

    docs = {DOMAIN_FILE: _dump(domain), NLU_FILE: _dump(nlu), CONFIG_FILE: _dump(config)}
    docs[STORIES_FILE] = _dump({"stories": stories}) if stories else ""
    docs[RULES_FILE] = _dump({"rules": rules}) if rules else ""
    return docs
