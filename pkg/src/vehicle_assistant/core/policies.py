"""The policy ensemble: rules, then story memoization, then fallback.

Rules fire on the most recent user intent and keep firing until their action
sequence is fully emitted. The memo policy matches the tracker tail against
story prefixes (the tail must end with the prefix, with equal slot flags over
that span); an ambiguous match that disagrees on the next action yields
nothing. When no policy fires, the turn falls back or closes with a listen.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..dsl.types import ACTION_DEFAULT_FALLBACK, ACTION_LISTEN, DomainSpec
from ..nlu.pipeline import NluResult
from .events import Tracker
from .state import DEFAULT_WINDOW, KIND_ACTION, KIND_INTENT, StoryPoint, TrackerTail, story_index, tracker_tail

ORIGIN_RULE = "rule"
ORIGIN_MEMO = "memo"
ORIGIN_FALLBACK = "fallback"

FALLBACK_CONFIDENCE = 0.3

# A slot may be re-asked this many times after a denied confirmation before
# the conversation aborts to fallback.
MAX_DENY_REASKS = 3

INTENT_DENY = "deny"
CONFIRM_PREFIX = "utter_confirm_"


@dataclass(frozen=True)
class PolicyPrediction:
    action: str
    confidence: float
    origin: str  # "rule" | "memo" | "fallback"


def _trailing_actions(items: tuple[tuple[str, str], ...]) -> list[str]:
    """Bot actions emitted since the most recent user intent."""
    actions: list[str] = []
    for kind, name in reversed(items):
        if kind == KIND_INTENT:
            break
        actions.append(name)
    actions.reverse()
    return actions


def _last_intent(items: tuple[tuple[str, str], ...]) -> str | None:
    for kind, name in reversed(items):
        if kind == KIND_INTENT:
            return name
    return None


def rule_policy(spec: DomainSpec, tail: TrackerTail) -> PolicyPrediction | None:
    """Next step of the rule triggered by the latest intent, if unfinished."""
    intent = _last_intent(tail.segment_items)
    if intent is None:
        return None
    rule = spec.rule_for_intent(intent)
    if rule is None:
        return None
    emitted = _trailing_actions(tail.segment_items)
    expected = [step.action for step in rule.then]
    if len(emitted) >= len(expected) or emitted != expected[: len(emitted)]:
        return None
    return PolicyPrediction(expected[len(emitted)], 1.0, ORIGIN_RULE)


def memo_policy(
    spec: DomainSpec, tail: TrackerTail, index: tuple[StoryPoint, ...] | None = None, window: int = DEFAULT_WINDOW
) -> PolicyPrediction | None:
    """Unique next action across all story prefixes the tail ends with."""
    if index is None:
        index = story_index(spec, window)
    candidates: set[str] = set()
    for point in index:
        length = len(point.items)
        if length == 0 or length > len(tail.items):
            continue
        if tail.items[-length:] != point.items:
            continue
        if tail.flags_over_suffix(length) != point.flags:
            continue
        candidates.add(point.next_action)
    if len(candidates) != 1:
        return None
    return PolicyPrediction(candidates.pop(), 1.0, ORIGIN_MEMO)


def deny_streak(items: tuple[tuple[str, str], ...]) -> int:
    """Consecutive confirm->deny rounds ending the item list."""
    count = 0
    i = len(items) - 1
    while i >= 1 and items[i] == (KIND_INTENT, INTENT_DENY):
        kind, name = items[i - 1]
        if kind != KIND_ACTION or not name.startswith(CONFIRM_PREFIX):
            break
        count += 1
        i -= 4  # skip the re-ask and re-inform items of the previous round
    return count


def predict(
    spec: DomainSpec,
    tracker: Tracker,
    nlu: NluResult,
    index: tuple[StoryPoint, ...] | None = None,
    window: int = DEFAULT_WINDOW,
) -> PolicyPrediction:
    """Choose the next action for the tracker given the turn's NLU result.

    The first prediction of a turn answers the user (fallback on low
    confidence, else rule > memo > fallback); once actions have been emitted
    the ensemble continues the sequence and closes with a listen when done.
    """
    tail = tracker_tail(spec, tracker, window)
    mid_sequence = bool(_trailing_actions(tail.segment_items))
    if not mid_sequence:
        if nlu.is_fallback:
            return PolicyPrediction(ACTION_DEFAULT_FALLBACK, FALLBACK_CONFIDENCE, ORIGIN_FALLBACK)
        if deny_streak(tail.segment_items) > MAX_DENY_REASKS:
            return PolicyPrediction(ACTION_DEFAULT_FALLBACK, FALLBACK_CONFIDENCE, ORIGIN_FALLBACK)
    prediction = rule_policy(spec, tail) or memo_policy(spec, tail, index, window)
    if prediction is not None:
        return prediction
    if mid_sequence:
        return PolicyPrediction(ACTION_LISTEN, 1.0, ORIGIN_FALLBACK)
    return PolicyPrediction(ACTION_DEFAULT_FALLBACK, FALLBACK_CONFIDENCE, ORIGIN_FALLBACK)
