"""Parse the five-file domain document set into a validated DomainSpec.

Files and their allowed top-level keys:

    domain.yml   intents (list), entities, slots, responses (mappings), actions (list)
    nlu.yml      intents (mapping intent -> list of example strings)
    stories.yml  stories (list of {story, steps})
    rules.yml    rules (list of {rule, trigger, then})
    config.yml   pipeline (training hyper-parameters)

Examples may annotate entity spans inline as ``[text](entity)``.
Validation is fail-fast: the first violation raises a single ValidationError
whose ``name`` is the offending identifier.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from pathlib import Path

import yaml

from .errors import DomainSyntaxError, SourceLocation, ValidationError
from .types import (
    BUILTIN_ACTIONS,
    IDENTIFIER_RE,
    RESPONSE_PREFIX,
    BotStep,
    DomainSpec,
    EntityAnnotation,
    EntityDef,
    IntentDef,
    PipelineConfig,
    ResponseDef,
    RuleDef,
    SlotDef,
    StoryDef,
    UserStep,
)

DOMAIN_FILE = "domain.yml"
NLU_FILE = "nlu.yml"
STORIES_FILE = "stories.yml"
RULES_FILE = "rules.yml"
CONFIG_FILE = "config.yml"

DOCUMENT_FILES = (DOMAIN_FILE, NLU_FILE, STORIES_FILE, RULES_FILE, CONFIG_FILE)

_ALLOWED_KEYS = {
    DOMAIN_FILE: {"intents", "entities", "slots", "responses", "actions"},
    NLU_FILE: {"intents"},
    STORIES_FILE: {"stories"},
    RULES_FILE: {"rules"},
    CONFIG_FILE: {"pipeline"},
}

_PIPELINE_KEYS = {"epochs", "learning_rate", "char_ngram_range", "fallback_threshold"}

_MARKUP_RE = re.compile(r"\[([^\[\]]+)\]\(([a-z][a-z0-9_]*)\)")

WarningSink = Callable[[str, str, str], None]  # (code, subject, message)


def _loc(file: str, node: yaml.Node) -> SourceLocation:
    mark = node.start_mark
    return SourceLocation(file, mark.line + 1, mark.column + 1)


def _compose(file: str, text: str) -> yaml.Node | None:
    try:
        return yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = (mark.line + 1) if mark else 1
        column = (mark.column + 1) if mark else 1
        raise DomainSyntaxError(exc.problem or "invalid document", SourceLocation(file, line, column)) from exc
    except yaml.YAMLError as exc:
        raise DomainSyntaxError(str(exc), SourceLocation(file, 1, 1)) from exc


def _expect_mapping(file: str, node: yaml.Node, what: str) -> list[tuple[yaml.Node, yaml.Node]]:
    if not isinstance(node, yaml.MappingNode):
        raise ValidationError("invalid_shape", what, f"{what} must be a mapping", _loc(file, node))
    return node.value


def _expect_sequence(file: str, node: yaml.Node, what: str) -> list[yaml.Node]:
    if not isinstance(node, yaml.SequenceNode):
        raise ValidationError("invalid_shape", what, f"{what} must be a list", _loc(file, node))
    return node.value


def _scalar(file: str, node: yaml.Node, what: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise ValidationError("invalid_shape", what, f"{what} must be a scalar", _loc(file, node))
    return str(node.value)


def _identifier(file: str, node: yaml.Node, what: str) -> str:
    name = _scalar(file, node, what)
    if not IDENTIFIER_RE.match(name):
        raise ValidationError(
            "invalid_identifier", name, f"{what} {name!r} must match [a-z][a-z0-9_]*", _loc(file, node)
        )
    return name


def _top_level(file: str, text: str) -> dict[str, yaml.Node]:
    """Return the document's top-level sections, rejecting unknown keys."""
    root = _compose(file, text)
    if root is None:
        return {}
    sections: dict[str, yaml.Node] = {}
    for key_node, value_node in _expect_mapping(file, root, "document"):
        key = _scalar(file, key_node, "top-level key")
        if key not in _ALLOWED_KEYS[file]:
            raise ValidationError("unknown_key", key, f"unknown top-level key {key!r} in {file}", _loc(file, key_node))
        if key in sections:
            raise ValidationError("duplicate_key", key, f"duplicate top-level key {key!r}", _loc(file, key_node))
        sections[key] = value_node
    return sections


def parse_example_markup(text: str) -> tuple[str, tuple[EntityAnnotation, ...]]:
    """Strip ``[text](entity)`` markers, returning clean text plus span annotations."""
    clean: list[str] = []
    annotations: list[EntityAnnotation] = []
    pos = 0
    length = 0
    for match in _MARKUP_RE.finditer(text):
        clean.append(text[pos : match.start()])
        length += match.start() - pos
        value = match.group(1)
        clean.append(value)
        annotations.append(EntityAnnotation(length, length + len(value), match.group(2)))
        length += len(value)
        pos = match.end()
    clean.append(text[pos:])
    return "".join(clean), tuple(annotations)


def render_example_markup(text: str, annotations: tuple[EntityAnnotation, ...]) -> str:
    """Inverse of :func:`parse_example_markup` (spans must be non-overlapping)."""
    out = text
    for ann in sorted(annotations, key=lambda a: a.start, reverse=True):
        out = f"{out[: ann.start]}[{out[ann.start : ann.end]}]({ann.entity}){out[ann.end :]}"
    return out


def _parse_bool(file: str, node: yaml.Node, what: str) -> bool:
    raw = _scalar(file, node, what).lower()
    if raw in ("true", "yes", "on"):
        return True
    if raw in ("false", "no", "off"):
        return False
    raise ValidationError("invalid_value", what, f"{what} must be a boolean, got {raw!r}", _loc(file, node))


def _parse_int(file: str, node: yaml.Node, what: str) -> int:
    raw = _scalar(file, node, what)
    try:
        return int(raw)
    except ValueError:
        raise ValidationError("invalid_value", what, f"{what} must be an integer, got {raw!r}", _loc(file, node))


def _parse_float(file: str, node: yaml.Node, what: str) -> float:
    raw = _scalar(file, node, what)
    try:
        return float(raw)
    except ValueError:
        raise ValidationError("invalid_value", what, f"{what} must be a number, got {raw!r}", _loc(file, node))


class _Parser:
    def __init__(self, docs: Mapping[str, str], on_warning: WarningSink | None):
        self.docs = docs
        self.on_warning = on_warning
        self.intent_order: list[str] = []
        self.intent_locs: dict[str, SourceLocation] = {}
        self.examples: dict[str, list[str]] = {}
        self.annotations: dict[str, list[tuple[EntityAnnotation, ...]]] = {}
        self.entities: list[EntityDef] = []
        self.slots: list[SlotDef] = []
        self.responses: list[ResponseDef] = []
        self.actions: list[str] = []
        self.stories: list[StoryDef] = []
        self.rules: list[RuleDef] = []
        self.pipeline = PipelineConfig()

    def run(self) -> DomainSpec:
        for file in self.docs:
            if file not in _ALLOWED_KEYS:
                raise ValidationError("unknown_file", file, f"unexpected document {file!r}")
        self._parse_domain_file(self.docs.get(DOMAIN_FILE, ""))
        self._parse_nlu_file(self.docs.get(NLU_FILE, ""))
        self._parse_stories_file(self.docs.get(STORIES_FILE, ""))
        self._parse_rules_file(self.docs.get(RULES_FILE, ""))
        self._parse_config_file(self.docs.get(CONFIG_FILE, ""))
        return self._validate()

    # -- per-file structural parsing ------------------------------------

    def _parse_domain_file(self, text: str) -> None:
        sections = _top_level(DOMAIN_FILE, text)
        if "intents" in sections:
            for node in _expect_sequence(DOMAIN_FILE, sections["intents"], "intents"):
                name = _identifier(DOMAIN_FILE, node, "intent")
                if name in self.intent_locs:
                    raise ValidationError(
                        "duplicate_intent", name, f"intent {name!r} declared twice", _loc(DOMAIN_FILE, node)
                    )
                self.intent_order.append(name)
                self.intent_locs[name] = _loc(DOMAIN_FILE, node)
        if "entities" in sections:
            seen: set[str] = set()
            for key_node, value_node in _expect_mapping(DOMAIN_FILE, sections["entities"], "entities"):
                name = _identifier(DOMAIN_FILE, key_node, "entity")
                if name in seen:
                    raise ValidationError(
                        "duplicate_entity", name, f"entity {name!r} declared twice", _loc(DOMAIN_FILE, key_node)
                    )
                seen.add(name)
                self.entities.append(self._parse_entity(name, value_node))
        if "slots" in sections:
            seen = set()
            for key_node, value_node in _expect_mapping(DOMAIN_FILE, sections["slots"], "slots"):
                name = _identifier(DOMAIN_FILE, key_node, "slot")
                if name in seen:
                    raise ValidationError(
                        "duplicate_slot", name, f"slot {name!r} declared twice", _loc(DOMAIN_FILE, key_node)
                    )
                seen.add(name)
                self.slots.append(self._parse_slot(name, value_node))
        if "responses" in sections:
            seen = set()
            for key_node, value_node in _expect_mapping(DOMAIN_FILE, sections["responses"], "responses"):
                name = _identifier(DOMAIN_FILE, key_node, "response")
                if name in seen:
                    raise ValidationError(
                        "duplicate_response", name, f"response {name!r} declared twice", _loc(DOMAIN_FILE, key_node)
                    )
                seen.add(name)
                if not name.startswith(RESPONSE_PREFIX):
                    raise ValidationError(
                        "invalid_response_name",
                        name,
                        f"response {name!r} must start with {RESPONSE_PREFIX!r}",
                        _loc(DOMAIN_FILE, key_node),
                    )
                variants = [
                    _scalar(DOMAIN_FILE, v, f"variant of {name}")
                    for v in _expect_sequence(DOMAIN_FILE, value_node, f"response {name}")
                ]
                if not variants:
                    raise ValidationError(
                        "no_variants", name, f"response {name!r} has no variants", _loc(DOMAIN_FILE, key_node)
                    )
                self.responses.append(ResponseDef(name, tuple(variants)))
        if "actions" in sections:
            for node in _expect_sequence(DOMAIN_FILE, sections["actions"], "actions"):
                name = _identifier(DOMAIN_FILE, node, "action")
                if name in self.actions:
                    raise ValidationError(
                        "duplicate_action", name, f"action {name!r} declared twice", _loc(DOMAIN_FILE, node)
                    )
                self.actions.append(name)

    def _parse_entity(self, name: str, node: yaml.Node) -> EntityDef:
        lookup: list[str] = []
        patterns: list[str] = []
        for key_node, value_node in _expect_mapping(DOMAIN_FILE, node, f"entity {name}"):
            key = _scalar(DOMAIN_FILE, key_node, "entity key")
            if key == "lookup":
                lookup = [
                    _scalar(DOMAIN_FILE, v, "lookup value")
                    for v in _expect_sequence(DOMAIN_FILE, value_node, f"lookup of {name}")
                ]
            elif key == "patterns":
                for v in _expect_sequence(DOMAIN_FILE, value_node, f"patterns of {name}"):
                    pattern = _scalar(DOMAIN_FILE, v, "pattern")
                    try:
                        re.compile(pattern)
                    except re.error as exc:
                        raise ValidationError(
                            "invalid_pattern", name, f"entity {name!r}: bad regex ({exc})", _loc(DOMAIN_FILE, v)
                        )
                    patterns.append(pattern)
            else:
                raise ValidationError(
                    "unknown_key", key, f"unknown entity key {key!r}", _loc(DOMAIN_FILE, key_node)
                )
        if not lookup and not patterns:
            raise ValidationError(
                "empty_entity", name, f"entity {name!r} needs a lookup list or patterns", self.intent_locs.get(name)
            )
        return EntityDef(name, tuple(lookup), tuple(patterns))

    def _parse_slot(self, name: str, node: yaml.Node) -> SlotDef:
        kind = "text"
        fill_from: str | None = None
        initial: str | bool | None = None
        initial_node: yaml.Node | None = None
        for key_node, value_node in _expect_mapping(DOMAIN_FILE, node, f"slot {name}"):
            key = _scalar(DOMAIN_FILE, key_node, "slot key")
            if key == "kind":
                kind = _scalar(DOMAIN_FILE, value_node, "slot kind")
                if kind not in ("text", "bool"):
                    raise ValidationError(
                        "invalid_value", name, f"slot {name!r} kind must be text or bool", _loc(DOMAIN_FILE, value_node)
                    )
            elif key == "fill_from":
                fill_from = _identifier(DOMAIN_FILE, value_node, "fill_from")
            elif key == "initial":
                initial_node = value_node
            else:
                raise ValidationError("unknown_key", key, f"unknown slot key {key!r}", _loc(DOMAIN_FILE, key_node))
        if initial_node is not None:
            if kind == "bool":
                initial = _parse_bool(DOMAIN_FILE, initial_node, f"initial of {name}")
            else:
                initial = _scalar(DOMAIN_FILE, initial_node, f"initial of {name}")
        return SlotDef(name, kind, fill_from, initial)

    def _parse_nlu_file(self, text: str) -> None:
        sections = _top_level(NLU_FILE, text)
        if "intents" not in sections:
            return
        seen: set[str] = set()
        for key_node, value_node in _expect_mapping(NLU_FILE, sections["intents"], "intents"):
            name = _identifier(NLU_FILE, key_node, "intent")
            if name in seen:
                raise ValidationError(
                    "duplicate_intent", name, f"examples for intent {name!r} given twice", _loc(NLU_FILE, key_node)
                )
            seen.add(name)
            examples: list[str] = []
            annotations: list[tuple[EntityAnnotation, ...]] = []
            for node in _expect_sequence(NLU_FILE, value_node, f"examples of {name}"):
                raw = _scalar(NLU_FILE, node, "example")
                clean, anns = parse_example_markup(raw)
                if clean in examples:
                    if self.on_warning:
                        self.on_warning(
                            "duplicate_example", name, f"intent {name!r}: duplicate example {clean!r} collapsed"
                        )
                    continue
                examples.append(clean)
                annotations.append(anns)
            self.examples[name] = examples
            self.annotations[name] = annotations
            self.intent_locs.setdefault(name, _loc(NLU_FILE, key_node))

    def _parse_story_steps(self, file: str, name: str, node: yaml.Node) -> list[UserStep | BotStep]:
        steps: list[UserStep | BotStep] = []
        for step_node in _expect_sequence(file, node, f"steps of {name}"):
            pairs = _expect_mapping(file, step_node, "step")
            keys = {_scalar(file, k, "step key"): v for k, v in pairs}
            if "intent" in keys:
                intent = _identifier(file, keys["intent"], "intent reference")
                bindings: list[tuple[str, str]] = []
                if "entities" in keys:
                    for ek, ev in _expect_mapping(file, keys["entities"], "entities"):
                        bindings.append((_identifier(file, ek, "entity reference"), _scalar(file, ev, "entity value")))
                extra = set(keys) - {"intent", "entities"}
                if extra:
                    key = sorted(extra)[0]
                    raise ValidationError("unknown_key", key, f"unknown step key {key!r}", _loc(file, step_node))
                steps.append(UserStep(intent, tuple(bindings)))
            elif "action" in keys:
                if set(keys) != {"action"}:
                    key = sorted(set(keys) - {"action"})[0]
                    raise ValidationError("unknown_key", key, f"unknown step key {key!r}", _loc(file, step_node))
                steps.append(BotStep(_identifier(file, keys["action"], "action reference")))
            else:
                raise ValidationError(
                    "invalid_shape", name, "step must have an intent or action key", _loc(file, step_node)
                )
        return steps

    def _parse_stories_file(self, text: str) -> None:
        sections = _top_level(STORIES_FILE, text)
        if "stories" not in sections:
            return
        seen: set[str] = set()
        for item in _expect_sequence(STORIES_FILE, sections["stories"], "stories"):
            pairs = {_scalar(STORIES_FILE, k, "story key"): v for k, v in _expect_mapping(STORIES_FILE, item, "story")}
            unknown = set(pairs) - {"story", "steps"}
            if unknown:
                key = sorted(unknown)[0]
                raise ValidationError("unknown_key", key, f"unknown story key {key!r}", _loc(STORIES_FILE, item))
            if "story" not in pairs:
                raise ValidationError("invalid_shape", "story", "story block needs a story name", _loc(STORIES_FILE, item))
            name = _identifier(STORIES_FILE, pairs["story"], "story name")
            if name in seen:
                raise ValidationError(
                    "duplicate_story", name, f"story {name!r} declared twice", _loc(STORIES_FILE, item)
                )
            seen.add(name)
            if "steps" not in pairs:
                raise ValidationError("invalid_shape", name, f"story {name!r} has no steps", _loc(STORIES_FILE, item))
            steps = self._parse_story_steps(STORIES_FILE, name, pairs["steps"])
            if not steps:
                raise ValidationError("empty_story", name, f"story {name!r} has no steps", _loc(STORIES_FILE, item))
            if not isinstance(steps[0], UserStep):
                raise ValidationError(
                    "invalid_first_step", name, f"story {name!r} must start with a user step", _loc(STORIES_FILE, item)
                )
            self.stories.append(StoryDef(name, tuple(steps)))

    def _parse_rules_file(self, text: str) -> None:
        sections = _top_level(RULES_FILE, text)
        if "rules" not in sections:
            return
        seen: set[str] = set()
        for item in _expect_sequence(RULES_FILE, sections["rules"], "rules"):
            pairs = {_scalar(RULES_FILE, k, "rule key"): v for k, v in _expect_mapping(RULES_FILE, item, "rule")}
            unknown = set(pairs) - {"rule", "trigger", "then"}
            if unknown:
                key = sorted(unknown)[0]
                raise ValidationError("unknown_key", key, f"unknown rule key {key!r}", _loc(RULES_FILE, item))
            for required in ("rule", "trigger", "then"):
                if required not in pairs:
                    raise ValidationError(
                        "invalid_shape", "rule", f"rule block needs a {required!r} key", _loc(RULES_FILE, item)
                    )
            name = _identifier(RULES_FILE, pairs["rule"], "rule name")
            if name in seen:
                raise ValidationError("duplicate_rule", name, f"rule {name!r} declared twice", _loc(RULES_FILE, item))
            seen.add(name)
            trigger = UserStep(_identifier(RULES_FILE, pairs["trigger"], "trigger intent"))
            then = [
                BotStep(_identifier(RULES_FILE, node, "action reference"))
                for node in _expect_sequence(RULES_FILE, pairs["then"], f"then of {name}")
            ]
            if not then:
                raise ValidationError("empty_rule", name, f"rule {name!r} has no actions", _loc(RULES_FILE, item))
            self.rules.append(RuleDef(name, trigger, tuple(then)))

    def _parse_config_file(self, text: str) -> None:
        sections = _top_level(CONFIG_FILE, text)
        if "pipeline" not in sections:
            return
        values: dict[str, object] = {}
        for key_node, value_node in _expect_mapping(CONFIG_FILE, sections["pipeline"], "pipeline"):
            key = _scalar(CONFIG_FILE, key_node, "pipeline key")
            if key not in _PIPELINE_KEYS:
                raise ValidationError("unknown_key", key, f"unknown pipeline key {key!r}", _loc(CONFIG_FILE, key_node))
            if key == "epochs":
                values[key] = _parse_int(CONFIG_FILE, value_node, "epochs")
            elif key == "learning_rate":
                values[key] = _parse_float(CONFIG_FILE, value_node, "learning_rate")
            elif key == "fallback_threshold":
                values[key] = _parse_float(CONFIG_FILE, value_node, "fallback_threshold")
            else:
                bounds = _expect_sequence(CONFIG_FILE, value_node, "char_ngram_range")
                if len(bounds) != 2:
                    raise ValidationError(
                        "invalid_value",
                        "char_ngram_range",
                        "char_ngram_range must be [min, max]",
                        _loc(CONFIG_FILE, value_node),
                    )
                values[key] = (
                    _parse_int(CONFIG_FILE, bounds[0], "ngram min"),
                    _parse_int(CONFIG_FILE, bounds[1], "ngram max"),
                )
        config = PipelineConfig(**values)  # type: ignore[arg-type]
        if config.epochs < 1:
            raise ValidationError("invalid_value", "epochs", "epochs must be >= 1")
        if config.learning_rate <= 0:
            raise ValidationError("invalid_value", "learning_rate", "learning_rate must be positive")
        lo, hi = config.char_ngram_range
        if lo < 1 or lo > hi:
            raise ValidationError("invalid_value", "char_ngram_range", "need 1 <= min <= max")
        if not 0.0 <= config.fallback_threshold <= 1.0:
            raise ValidationError("invalid_value", "fallback_threshold", "fallback_threshold must be in [0, 1]")
        self.pipeline = config

    # -- cross-reference validation --------------------------------------

    def _validate(self) -> DomainSpec:
        if not self.intent_order:
            raise ValidationError("no_intents", "intents", "no intents declared")
        for name in self.examples:
            if name not in self.intent_locs or name not in self.intent_order:
                raise ValidationError(
                    "undeclared_intent", name, f"examples given for undeclared intent {name!r}", self.intent_locs.get(name)
                )
        intents: list[IntentDef] = []
        for name in self.intent_order:
            examples = self.examples.get(name, [])
            if not examples:
                raise ValidationError(
                    "no_examples", name, f"intent {name!r} has no examples", self.intent_locs.get(name)
                )
            intents.append(IntentDef(name, tuple(examples), tuple(self.annotations.get(name, []))))

        entity_names = {e.name for e in self.entities}
        for intent in intents:
            for example, anns in zip(intent.examples, intent.annotations):
                for ann in anns:
                    if ann.entity not in entity_names:
                        raise ValidationError(
                            "dangling_entity",
                            ann.entity,
                            f"intent {intent.name!r} annotates undeclared entity {ann.entity!r}",
                            self.intent_locs.get(intent.name),
                        )
                    if not (0 <= ann.start < ann.end <= len(example)):
                        raise ValidationError(
                            "invalid_span", intent.name, f"annotation span out of range in {example!r}"
                        )

        slot_names = set()
        for slot in self.slots:
            if slot.fill_from is not None and slot.fill_from not in entity_names:
                raise ValidationError(
                    "dangling_entity", slot.fill_from, f"slot {slot.name!r} fills from undeclared entity {slot.fill_from!r}"
                )
            slot_names.add(slot.name)

        for response in self.responses:
            for variant in response.variants:
                for placeholder in re.findall(r"\{([a-z][a-z0-9_]*)\}", variant):
                    if placeholder not in slot_names:
                        raise ValidationError(
                            "dangling_slot",
                            placeholder,
                            f"response {response.name!r} references undeclared slot {placeholder!r}",
                        )

        intent_names = set(self.intent_order)
        action_names = set(self.actions) | {r.name for r in self.responses} | BUILTIN_ACTIONS

        def check_user_step(owner: str, step: UserStep) -> None:
            if step.intent not in intent_names:
                raise ValidationError(
                    "dangling_intent", step.intent, f"{owner} references undeclared intent {step.intent!r}"
                )
            for entity, _value in step.entities:
                if entity not in entity_names:
                    raise ValidationError(
                        "dangling_entity", entity, f"{owner} binds undeclared entity {entity!r}"
                    )

        for story in self.stories:
            owner = f"story {story.name!r}"
            for step in story.steps:
                if isinstance(step, UserStep):
                    check_user_step(owner, step)
                elif step.action not in action_names:
                    raise ValidationError(
                        "dangling_action", step.action, f"{owner} references undeclared action {step.action!r}"
                    )

        triggers: dict[str, str] = {}
        for rule in self.rules:
            owner = f"rule {rule.name!r}"
            check_user_step(owner, rule.trigger)
            if rule.trigger.intent in triggers:
                raise ValidationError(
                    "duplicate_rule_trigger",
                    rule.trigger.intent,
                    f"rules {triggers[rule.trigger.intent]!r} and {rule.name!r} share trigger {rule.trigger.intent!r}",
                )
            triggers[rule.trigger.intent] = rule.name
            for step in rule.then:
                if step.action not in action_names:
                    raise ValidationError(
                        "dangling_action", step.action, f"{owner} references undeclared action {step.action!r}"
                    )

        return DomainSpec(
            intents=tuple(intents),
            entities=tuple(self.entities),
            slots=tuple(self.slots),
            responses=tuple(self.responses),
            custom_action_names=tuple(self.actions),
            stories=tuple(self.stories),
            rules=tuple(self.rules),
            pipeline=self.pipeline,
        )


def parse_domain(docs: Mapping[str, str], on_warning: WarningSink | None = None) -> DomainSpec:
    """Parse a document set (filename -> text) into a validated DomainSpec.

    Raises DomainSyntaxError for malformed text and ValidationError (fail-fast,
    exactly one) for rule violations. Duplicate examples inside one intent are
    collapsed and reported through ``on_warning``.
    """
    return _Parser(docs, on_warning).run()


def load_domain(path: str | Path, on_warning: WarningSink | None = None) -> DomainSpec:
    """Read the five domain files from a directory and parse them."""
    base = Path(path)
    docs = {
        name: (base / name).read_text(encoding="utf-8")
        for name in DOCUMENT_FILES
        if (base / name).is_file()
    }
    return parse_domain(docs, on_warning)
