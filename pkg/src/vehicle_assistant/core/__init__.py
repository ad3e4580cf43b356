"""Dialogue core: tracker, policy ensemble, and the turn engine."""

from .engine import DialogueEngine, monotonic_ms
from .events import (
    ACTION_EXECUTED,
    BOT_UTTERED,
    CONVERSATION_PAUSED,
    SESSION_ENDED,
    SESSION_STARTED,
    SLOT_SET,
    USER_UTTERED,
    Event,
    OrderingError,
    Tracker,
    action_executed,
    apply_event,
    apply_events,
    bot_uttered,
    conversation_paused,
    replay,
    session_ended,
    session_started,
    slot_set,
    user_uttered,
)
from .policies import PolicyPrediction, memo_policy, predict, rule_policy
from .state import DialogueState, dialogue_state, story_index, tracker_tail
from .store import TrackerStore

__all__ = [
    "ACTION_EXECUTED",
    "BOT_UTTERED",
    "CONVERSATION_PAUSED",
    "DialogueEngine",
    "DialogueState",
    "Event",
    "OrderingError",
    "PolicyPrediction",
    "SESSION_ENDED",
    "SESSION_STARTED",
    "SLOT_SET",
    "Tracker",
    "TrackerStore",
    "USER_UTTERED",
    "action_executed",
    "apply_event",
    "apply_events",
    "bot_uttered",
    "conversation_paused",
    "dialogue_state",
    "memo_policy",
    "monotonic_ms",
    "predict",
    "replay",
    "rule_policy",
    "session_ended",
    "session_started",
    "slot_set",
    "story_index",
    "tracker_tail",
    "user_uttered",
]
