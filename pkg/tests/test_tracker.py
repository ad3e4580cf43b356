"""Tracker events: folding, value semantics, persistence replay."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from vehicle_assistant.core.events import (
    Event,
    OrderingError,
    Tracker,
    apply_event,
    apply_events,
    conversation_paused,
    replay,
    session_ended,
    session_started,
    slot_set,
    user_uttered,
)
from vehicle_assistant.core.store import TrackerStore
from vehicle_assistant.nlu.pipeline import NluResult


def _nlu(intent: str = "greet") -> NluResult:
    return NluResult(ranking=((intent, 1.0),))


class TestApplyEvent:
    def test_slot_set_folds_into_map(self):
        tracker = Tracker.fresh("u1")
        tracker = apply_event(tracker, slot_set("location", "Mumbai", 10))
        assert tracker.slots == {"location": "Mumbai"}

    def test_session_ended_deactivates(self):
        tracker = apply_event(Tracker.fresh("u1"), session_ended(5))
        assert tracker.active is False

    def test_value_semantics(self):
        original = Tracker.fresh("u1")
        updated = apply_event(original, slot_set("x", "1", 1))
        assert original.slots == {} and original.events == ()
        assert updated.slots == {"x": "1"}

    def test_timestamp_regression_rejected(self):
        tracker = apply_event(Tracker.fresh("u1"), slot_set("x", "1", 10))
        with pytest.raises(OrderingError):
            apply_event(tracker, slot_set("x", "2", 9))
        apply_event(tracker, slot_set("x", "2", 10))  # equal is allowed

    def test_initials_seed_the_slot_map(self):
        tracker = Tracker.fresh("u1", {"news_page": "1"})
        assert tracker.slots == {"news_page": "1"}
        tracker = apply_event(tracker, slot_set("news_page", "2", 1))
        assert tracker.slots == {"news_page": "2"}

    def test_pause_and_resume_listening(self):
        tracker = Tracker.fresh("u1")
        assert tracker.listening is False
        tracker = apply_event(tracker, session_started(1))
        assert tracker.listening is True
        tracker = apply_event(tracker, conversation_paused(2))
        assert tracker.listening is False and tracker.paused is True
        tracker = apply_event(tracker, session_started(3))
        assert tracker.listening is True and tracker.paused is False

    def test_replayed_conversation_matches_fold_oracle(self):
        events = [
            session_started(1),
            user_uttered("hello", _nlu(), 2),
            slot_set("location", "Mumbai", 3),
            slot_set("song", "Stan", 4),
            slot_set("location", None, 5),
            user_uttered("bye", _nlu("goodbye"), 6),
            slot_set("location", "Delhi", 7),
            conversation_paused(8),
            session_started(9),
            slot_set("song", None, 10),
            slot_set("contact", "John", 11),
            session_ended(12),
        ]
        tracker = replay("u1", {"news_page": "1"}, events)
        # independent left-fold oracle over SlotSet events
        expected = {"news_page": "1"}
        for event in events:
            if event.type == "slot_set":
                expected[event.data["slot"]] = event.data["value"]
        assert tracker.slots == expected
        assert tracker.active is False


@given(
    st.lists(
        st.tuples(st.sampled_from(["a", "b", "c"]), st.one_of(st.none(), st.text(max_size=4))),
        max_size=30,
    )
)
def test_fold_property_on_random_slot_sequences(pairs):
    events = [slot_set(slot, value, i + 1) for i, (slot, value) in enumerate(pairs)]
    tracker = apply_events(Tracker.fresh("u1"), events)
    expected: dict = {}
    for slot, value in pairs:
        expected[slot] = value
    assert tracker.slots == expected


class TestStore:
    def test_fresh_tracker_on_first_get(self):
        store = TrackerStore({"news_page": "1"})
        tracker = store.get("alice")
        assert tracker.sender_id == "alice"
        assert tracker.slots == {"news_page": "1"}

    def test_jsonl_persistence_and_replay(self, tmp_path):
        store = TrackerStore({}, tmp_path)
        tracker = store.get("u1")
        tracker = apply_events(
            tracker,
            [session_started(1), user_uttered("hello", _nlu(), 2), slot_set("song", "Stan", 3)],
        )
        store.put(tracker)
        lines = (tmp_path / "u1.jsonl").read_text().splitlines()
        assert len(lines) == 3

        reloaded = TrackerStore({}, tmp_path).get("u1")
        assert reloaded.slots == {"song": "Stan"}
        assert reloaded.events == tracker.events

    def test_appends_only_new_events(self, tmp_path):
        store = TrackerStore({}, tmp_path)
        tracker = apply_event(store.get("u1"), session_started(1))
        store.put(tracker)
        tracker = apply_event(tracker, slot_set("x", "1", 2))
        store.put(tracker)
        assert len((tmp_path / "u1.jsonl").read_text().splitlines()) == 2

    def test_sender_id_quoting(self, tmp_path):
        store = TrackerStore({}, tmp_path)
        store.put(apply_event(store.get("web/user 1"), session_started(1)))
        reloaded = TrackerStore({}, tmp_path)
        assert "web/user 1" in reloaded.sender_ids()

    def test_reset_truncates(self, tmp_path):
        store = TrackerStore({}, tmp_path)
        store.put(apply_event(store.get("u1"), session_started(1)))
        store.reset("u1")
        assert (tmp_path / "u1.jsonl").read_text() == ""
        assert store.get("u1").events == ()

    def test_event_json_round_trip(self):
        event = user_uttered("play Stan", _nlu("music_request"), 42)
        assert Event.from_json_line(event.to_json_line()) == event


def test_random_event_logs_fold_identically_under_replay():
    rng = random.Random(11)
    events = []
    ts = 0
    for _ in range(200):
        ts += rng.randint(0, 3)
        kind = rng.randrange(4)
        if kind == 0:
            events.append(slot_set(rng.choice("abcd"), rng.choice([None, "x", "y"]), ts))
        elif kind == 1:
            events.append(user_uttered("hi", _nlu(), ts))
        elif kind == 2:
            events.append(session_started(ts))
        else:
            events.append(conversation_paused(ts))
    direct = apply_events(Tracker.fresh("u1", {"a": "0"}), events)
    via_json = [Event.from_json_line(e.to_json_line()) for e in events]
    assert replay("u1", {"a": "0"}, via_json) == direct
