"""Non-fatal checks over a valid DomainSpec."""

from __future__ import annotations

from dataclasses import dataclass

from .types import RESERVED_RESPONSES, BotStep, DomainSpec

MIN_EXAMPLES = 3


@dataclass(frozen=True)
class LintWarning:
    code: str
    subject: str
    message: str


def lint_domain(spec: DomainSpec) -> list[LintWarning]:
    """Return authoring issues that do not block loading the domain."""
    warnings: list[LintWarning] = []

    for intent in spec.intents:
        if len(intent.examples) < MIN_EXAMPLES:
            warnings.append(
                LintWarning(
                    "too_few_examples",
                    intent.name,
                    f"intent {intent.name!r} has only {len(intent.examples)} example(s); aim for >= {MIN_EXAMPLES}",
                )
            )

    referenced: set[str] = set()
    for story in spec.stories:
        referenced.update(step.action for step in story.steps if isinstance(step, BotStep))
    for rule in spec.rules:
        referenced.update(step.action for step in rule.then)

    for response in spec.responses:
        if response.name in RESERVED_RESPONSES or response.name in referenced:
            continue
        warnings.append(
            LintWarning(
                "unreachable_response",
                response.name,
                f"response {response.name!r} is never used by a story or rule",
            )
        )

    triggers = {rule.trigger.intent for rule in spec.rules}
    for story in spec.stories:
        first = story.steps[0]
        if not isinstance(first, BotStep) and first.intent in triggers:
            warnings.append(
                LintWarning(
                    "shadowed_story",
                    story.name,
                    f"story {story.name!r} starts with intent {first.intent!r}, which a rule always handles first",
                )
            )

    return warnings
