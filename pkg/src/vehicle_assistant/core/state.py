"""Featurized dialogue state: the recent (intent, action) tail plus slot flags.

The tail covers events since the last session start, truncated to the last
``2 * window`` items (window pairs of user intent / bot action). Slot flags
consider only slots that auto-fill from entities (slots a story can predict
statically from its entity bindings) and only changes inside the tail span,
so unrelated earlier tasks in the same session do not poison matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..dsl.types import ACTION_LISTEN, BotStep, DomainSpec, StoryDef, UserStep
from .events import ACTION_EXECUTED, SESSION_STARTED, SLOT_SET, USER_UTTERED, Tracker

KIND_INTENT = "intent"
KIND_ACTION = "action"

DEFAULT_WINDOW = 5

Item = tuple[str, str]  # (kind, name)
SlotChange = tuple[str, bool]  # (slot name, set or cleared)


@dataclass(frozen=True)
class DialogueState:
    """Equality-comparable summary of a tracker's recent dialogue."""

    tail: tuple[Item, ...]
    slots_set: frozenset[str]


@dataclass(frozen=True)
class TrackerTail:
    """Tail items with per-item slot changes; richer than DialogueState so
    the memo policy can evaluate flags over any suffix span."""

    items: tuple[Item, ...]  # truncated to 2 * window
    changes: tuple[tuple[SlotChange, ...], ...]  # aligned with items
    segment_items: tuple[Item, ...]  # full current-session item list

    def flags_over_suffix(self, length: int) -> frozenset[str]:
        state: dict[str, bool] = {}
        for change_group in self.changes[len(self.items) - length :]:
            for slot, is_set in change_group:
                state[slot] = is_set
        return frozenset(slot for slot, is_set in state.items() if is_set)


def _segment_events(tracker: Tracker):
    start = 0
    for i, event in enumerate(tracker.events):
        if event.type == SESSION_STARTED:
            start = i + 1
    return tracker.events[start:]


def tracker_tail(spec: DomainSpec, tracker: Tracker, window: int = DEFAULT_WINDOW) -> TrackerTail:
    """Items and slot changes for the tracker's current session segment."""
    flagged_slots = {s.name for s in spec.slots if s.fill_from is not None}
    items: list[Item] = []
    changes: list[list[SlotChange]] = []
    for event in _segment_events(tracker):
        if event.type == USER_UTTERED:
            nlu = event.data["nlu"]
            items.append((KIND_INTENT, nlu["ranking"][0][0]))
            changes.append([])
        elif event.type == ACTION_EXECUTED and event.data["action"] != ACTION_LISTEN:
            items.append((KIND_ACTION, event.data["action"]))
            changes.append([])
        elif event.type == SLOT_SET and event.data["slot"] in flagged_slots and changes:
            changes[-1].append((event.data["slot"], event.data["value"] is not None))
    limit = 2 * window
    return TrackerTail(
        items=tuple(items[-limit:]),
        changes=tuple(tuple(group) for group in changes[-limit:]),
        segment_items=tuple(items),
    )


def dialogue_state(spec: DomainSpec, tracker: Tracker, window: int = DEFAULT_WINDOW) -> DialogueState:
    tail = tracker_tail(spec, tracker, window)
    return DialogueState(tail.items, tail.flags_over_suffix(len(tail.items)))


@dataclass(frozen=True)
class StoryPoint:
    """One bot step of a story: the featurized prefix before it and the action."""

    story: str
    items: tuple[Item, ...]  # truncated to 2 * window
    flags: frozenset[str]
    next_action: str


def _story_points(spec: DomainSpec, story: StoryDef, window: int) -> list[StoryPoint]:
    limit = 2 * window
    items: list[Item] = []
    changes: list[list[SlotChange]] = []
    points: list[StoryPoint] = []

    def flags_for(window_items: int) -> frozenset[str]:
        state: dict[str, bool] = {}
        for group in changes[len(changes) - window_items :]:
            for slot, is_set in group:
                state[slot] = is_set
        return frozenset(slot for slot, is_set in state.items() if is_set)

    for step in story.steps:
        if isinstance(step, UserStep):
            items.append((KIND_INTENT, step.intent))
            group: list[SlotChange] = []
            for entity, _value in step.entities:
                group.extend((slot, True) for slot in spec.fill_targets(entity))
            changes.append(group)
        else:
            assert isinstance(step, BotStep)
            prefix = tuple(items[-limit:])
            points.append(StoryPoint(story.name, prefix, flags_for(len(prefix)), step.action))
            items.append((KIND_ACTION, step.action))
            changes.append([])
    return points


def story_index(spec: DomainSpec, window: int = DEFAULT_WINDOW) -> tuple[StoryPoint, ...]:
    """Every (prefix -> next bot action) point across the spec's stories."""
    points: list[StoryPoint] = []
    for story in spec.stories:
        points.extend(_story_points(spec, story, window))
    return tuple(points)
