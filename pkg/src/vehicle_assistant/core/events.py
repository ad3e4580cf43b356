"""Conversation events and the tracker that folds them into dialogue state.

The tracker is the single source of truth for one conversation: an
append-only event list plus the slot map derived from it. Trackers are
values; applying an event returns a new tracker.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any, Mapping

from ..nlu.pipeline import NluResult

USER_UTTERED = "user_uttered"
BOT_UTTERED = "bot_uttered"
ACTION_EXECUTED = "action_executed"
SLOT_SET = "slot_set"
SESSION_STARTED = "session_started"
SESSION_ENDED = "session_ended"
CONVERSATION_PAUSED = "conversation_paused"


class OrderingError(Exception):
    """Raised when an event's timestamp precedes the tracker's last event."""


@dataclass(frozen=True)
class Event:
    type: str
    timestamp_ms: int
    data: dict[str, Any] = field(default_factory=dict)

    def to_json_line(self) -> str:
        return json.dumps({"type": self.type, "ts": self.timestamp_ms, **self.data}, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "Event":
        payload = json.loads(line)
        kind = payload.pop("type")
        ts = payload.pop("ts")
        return cls(kind, ts, payload)


def user_uttered(text: str, nlu: NluResult, ts: int) -> Event:
    return Event(USER_UTTERED, ts, {"text": text, "nlu": nlu.to_dict()})


def bot_uttered(text: str, response: str | None, ts: int) -> Event:
    return Event(BOT_UTTERED, ts, {"text": text, "response": response})


def action_executed(action: str, ts: int) -> Event:
    return Event(ACTION_EXECUTED, ts, {"action": action})


def slot_set(slot: str, value: str | bool | None, ts: int) -> Event:
    return Event(SLOT_SET, ts, {"slot": slot, "value": value})


def session_started(ts: int) -> Event:
    return Event(SESSION_STARTED, ts)


def session_ended(ts: int) -> Event:
    return Event(SESSION_ENDED, ts)


def conversation_paused(ts: int) -> Event:
    return Event(CONVERSATION_PAUSED, ts)


@dataclass(frozen=True)
class Tracker:
    """Event log plus derived state for one sender."""

    sender_id: str
    initial_slots: dict[str, str | bool | None]
    events: tuple[Event, ...] = ()
    slots: dict[str, str | bool | None] = field(default_factory=dict)
    active: bool = True
    paused: bool = False

    @classmethod
    def fresh(cls, sender_id: str, initial_slots: Mapping[str, str | bool | None] | None = None) -> "Tracker":
        initials = dict(initial_slots or {})
        return cls(sender_id=sender_id, initial_slots=initials, slots=dict(initials))

    @property
    def last_timestamp(self) -> int:
        return self.events[-1].timestamp_ms if self.events else 0

    @property
    def listening(self) -> bool:
        """True once a session has started and not been paused or ended since."""
        for event in reversed(self.events):
            if event.type == SESSION_STARTED:
                return True
            if event.type in (SESSION_ENDED, CONVERSATION_PAUSED):
                return False
        return False

    def latest_nlu(self) -> NluResult | None:
        for event in reversed(self.events):
            if event.type == USER_UTTERED:
                return NluResult.from_dict(event.data["nlu"])
        return None


def apply_event(tracker: Tracker, event: Event) -> Tracker:
    """Append one event, updating derived state. The input tracker is unchanged."""
    if event.timestamp_ms < tracker.last_timestamp:
        raise OrderingError(
            f"event timestamp {event.timestamp_ms} precedes last event {tracker.last_timestamp}"
        )
    slots = tracker.slots
    active = tracker.active
    paused = tracker.paused
    if event.type == SLOT_SET:
        slots = dict(slots)
        slots[event.data["slot"]] = event.data["value"]
    elif event.type == SESSION_STARTED:
        active = True
        paused = False
    elif event.type == SESSION_ENDED:
        active = False
    elif event.type == CONVERSATION_PAUSED:
        paused = True
    return replace(tracker, events=tracker.events + (event,), slots=slots, active=active, paused=paused)


def apply_events(tracker: Tracker, events: list[Event] | tuple[Event, ...]) -> Tracker:
    for event in events:
        tracker = apply_event(tracker, event)
    return tracker


def replay(sender_id: str, initial_slots: Mapping[str, str | bool | None], events: list[Event]) -> Tracker:
    return apply_events(Tracker.fresh(sender_id, initial_slots), events)
