"""The turn loop: understand the message, update the tracker, run predicted
actions until the turn closes with a listen, and return the rendered replies.

The engine owns nothing mutable except the tracker store; the spec, model,
and story index are immutable and shared across threads. Turns for one
sender are serialized by the store's per-sender lock.
"""

from __future__ import annotations

import string
import time
from dataclasses import replace
from typing import Callable

from ..actions.base import ActionContext, ActionError, ActionRegistry, ActionResult
from ..actions.providers import ProviderRegistry
from ..dsl.types import ACTION_DEFAULT_FALLBACK, ACTION_LISTEN, DomainSpec
from ..nlu.classifier import ClassifierModel
from ..nlu.pipeline import NluResult, nlu
from ..wire import BotResponse
from .events import (
    BOT_UTTERED,
    Tracker,
    action_executed,
    apply_event,
    bot_uttered,
    session_started,
    slot_set,
    user_uttered,
)
from .policies import predict
from .state import DEFAULT_WINDOW, story_index
from .store import TrackerStore

MAX_ACTIONS_PER_TURN = 20

FALLBACK_RESPONSE = "utter_default"
WAKE_ACK_RESPONSE = "utter_wake_ack"

DEFAULT_FALLBACK_TEXT = "Sorry, I didn't catch that. Could you rephrase?"
DEFAULT_WAKE_ACK_TEXT = "I'm listening."


def monotonic_ms() -> int:
    return time.monotonic_ns() // 1_000_000


class _SlotFormatter(string.Formatter):
    def get_value(self, key, args, kwargs):  # missing/None slots render empty
        value = kwargs.get(key)
        return "" if value is None else value


_formatter = _SlotFormatter()


class DialogueEngine:
    def __init__(
        self,
        spec: DomainSpec,
        model: ClassifierModel,
        providers: ProviderRegistry,
        actions: ActionRegistry,
        store: TrackerStore | None = None,
        clock: Callable[[], int] | None = None,
        window: int = DEFAULT_WINDOW,
        max_actions_per_turn: int = MAX_ACTIONS_PER_TURN,
    ):
        self.spec = spec
        self.model = model
        self.providers = providers
        self.actions = actions
        self.store = store if store is not None else TrackerStore(spec.initial_slots())
        self.clock = clock if clock is not None else monotonic_ms
        self.window = window
        self.max_actions_per_turn = max_actions_per_turn
        self._story_index = story_index(spec, window)
        missing = actions.missing_for(spec)
        if missing:
            raise ActionError(f"domain declares actions with no implementation: {', '.join(missing)}")

    # -- tracker access ---------------------------------------------------

    def tracker(self, sender_id: str) -> Tracker:
        return self.store.get(sender_id)

    def listening(self, sender_id: str) -> bool:
        return self.store.get(sender_id).listening

    def reset(self, sender_id: str) -> None:
        with self.store.lock(sender_id):
            self.store.reset(sender_id)

    # -- response rendering -------------------------------------------------

    def _response_text(self, name: str, tracker: Tracker, default: str) -> str:
        response = self.spec.response_by_name().get(name)
        if response is None:
            return default
        uses = sum(1 for e in tracker.events if e.type == BOT_UTTERED and e.data.get("response") == name)
        template = response.variants[uses % len(response.variants)]
        return _formatter.vformat(template, (), dict(tracker.slots))

    # -- session lifecycle --------------------------------------------------

    def wake(self, sender_id: str) -> list[BotResponse]:
        """Start (or resume) a session and acknowledge the wake word."""
        with self.store.lock(sender_id):
            tracker = self.store.get(sender_id)
            tracker = apply_event(tracker, session_started(self.clock()))
            ack = self._response_text(WAKE_ACK_RESPONSE, tracker, DEFAULT_WAKE_ACK_TEXT)
            tracker = apply_event(tracker, bot_uttered(ack, WAKE_ACK_RESPONSE, self.clock()))
            self.store.put(tracker)
        return [BotResponse(sender_id, ack)]

    # -- the turn loop --------------------------------------------------------

    def handle_turn(self, sender_id: str, text: str) -> list[BotResponse]:
        """Run one full user turn and return the bot messages in order."""
        with self.store.lock(sender_id):
            tracker = self.store.get(sender_id)
            result = nlu(self.model, self.spec, text)
            tracker = apply_event(tracker, user_uttered(text, result, self.clock()))
            tracker = self._autofill_slots(tracker, result)

            responses: list[BotResponse] = []
            executed = 0
            while True:
                prediction = predict(self.spec, tracker, result, self._story_index, self.window)
                if prediction.action == ACTION_LISTEN:
                    tracker = apply_event(tracker, action_executed(ACTION_LISTEN, self.clock()))
                    break
                executed += 1
                if executed > self.max_actions_per_turn:
                    tracker, fallback = self._fallback(tracker)
                    responses.extend(fallback)
                    tracker = apply_event(tracker, action_executed(ACTION_LISTEN, self.clock()))
                    break
                tracker, emitted = self._execute(sender_id, tracker, result, prediction.action)
                responses.extend(emitted)
            self.store.put(tracker)
            return responses

    def _autofill_slots(self, tracker: Tracker, result: NluResult) -> Tracker:
        # Always emit the SlotSet, even for an unchanged value: state matching
        # keys off the event appearing in the turn, not the value delta.
        for entity, value in result.entity_values().items():
            for slot_name in self.spec.fill_targets(entity):
                tracker = apply_event(tracker, slot_set(slot_name, value, self.clock()))
        return tracker

    def _fallback(self, tracker: Tracker) -> tuple[Tracker, list[BotResponse]]:
        text = self._response_text(FALLBACK_RESPONSE, tracker, DEFAULT_FALLBACK_TEXT)
        tracker = apply_event(tracker, action_executed(ACTION_DEFAULT_FALLBACK, self.clock()))
        tracker = apply_event(tracker, bot_uttered(text, FALLBACK_RESPONSE, self.clock()))
        return tracker, [BotResponse(tracker.sender_id, text)]

    def _execute(
        self, sender_id: str, tracker: Tracker, result: NluResult, action: str
    ) -> tuple[Tracker, list[BotResponse]]:
        if action == ACTION_DEFAULT_FALLBACK:
            return self._fallback(tracker)
        if action in self.spec.response_by_name():
            text = self._response_text(action, tracker, "")
            tracker = apply_event(tracker, action_executed(action, self.clock()))
            tracker = apply_event(tracker, bot_uttered(text, action, self.clock()))
            return tracker, [BotResponse(sender_id, text)]
        # custom action
        ctx = ActionContext(tracker=tracker, nlu=result, providers=self.providers, clock=self.clock)
        try:
            outcome = self.actions.run(action, ctx)
        except Exception:  # ActionError, timeouts, bugs: the conversation never wedges
            return self._fallback(tracker)
        tracker = apply_event(tracker, action_executed(action, self.clock()))
        tracker = self._apply_action_result(tracker, outcome)
        return tracker, [BotResponse(sender_id, text, media) for text, media in outcome.responses]

    def _apply_action_result(self, tracker: Tracker, outcome: ActionResult) -> Tracker:
        for event in outcome.events:
            # Re-stamp: the action minted its timestamps before the engine
            # logged action_executed, so folding them verbatim could regress.
            tracker = apply_event(tracker, replace(event, timestamp_ms=self.clock()))
        for text, _media in outcome.responses:
            tracker = apply_event(tracker, bot_uttered(text, None, self.clock()))
        return tracker
