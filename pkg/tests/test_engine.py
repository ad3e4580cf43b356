"""Turn engine: story fidelity, determinism, containment, turn closure."""

from __future__ import annotations

import pytest

from conftest import FakeClock
from vehicle_assistant.actions.base import ActionRegistry, ActionResult
from vehicle_assistant.actions.builtin import register_builtin_actions
from vehicle_assistant.core.events import ACTION_EXECUTED, CONVERSATION_PAUSED
from vehicle_assistant.dsl.parser import parse_domain
from vehicle_assistant.dsl.types import ACTION_DEFAULT_FALLBACK, ACTION_LISTEN, BotStep, UserStep
from vehicle_assistant.nlu.classifier import train

# A canonical utterance per pack intent, used to replay stories end-to-end.
UTTERANCES = {
    "greet": "hello",
    "goodbye": "goodbye",
    "affirm": "yes",
    "deny": "no",
    "news_request": "latest news",
    "weather_request": "what is the weather",
    "navigation_request": "directions",
    "music_request": "play some music",
    "call_request": "make a call",
}


def executed_actions(tracker, include_listen: bool = False) -> list[str]:
    actions = [e.data["action"] for e in tracker.events if e.type == ACTION_EXECUTED]
    return actions if include_listen else [a for a in actions if a != ACTION_LISTEN]


def drive_story(engine, story, sender: str) -> list[str]:
    """Feed the story's user steps as utterances; return executed actions."""
    engine.wake(sender)
    for step in story.steps:
        if isinstance(step, UserStep):
            if step.entities:
                utterance = step.entities[0][1]  # bare value hits both intent and entity
            else:
                utterance = UTTERANCES[step.intent]
            engine.handle_turn(sender, utterance)
    return executed_actions(engine.tracker(sender))


class TestStoryFidelity:
    def test_every_shipped_story_replays_exactly(self, pack_spec, make_engine):
        for story in pack_spec.stories:
            engine = make_engine(clock=FakeClock())
            expected = [step.action for step in story.steps if isinstance(step, BotStep)]
            actual = drive_story(engine, story, f"story-{story.name}")
            assert actual == expected, f"story {story.name}: {actual} != {expected}"

    def test_transcripts_are_byte_identical_across_runs(self, make_engine):
        def transcript():
            engine = make_engine(clock=FakeClock())
            sender = "repro"
            lines: list[str] = []
            engine.wake(sender)
            for turn in ["what is the weather", "Mumbai", "yes", "play some music", "Stan", "yes"]:
                for response in engine.handle_turn(sender, turn):
                    lines.append(response.text)
            return "\n".join(lines).encode("utf-8")

        assert transcript() == transcript()

    def test_event_logs_replay_identically(self, make_engine):
        def log():
            engine = make_engine(clock=FakeClock(start=500))
            engine.wake("u")
            for turn in ["hello", "latest news", "yes", "no", "goodbye"]:
                engine.handle_turn("u", turn)
            return [e.to_json_line() for e in engine.tracker("u").events]

        assert log() == log()


class TestTurnLoop:
    def test_greet_turn(self, engine):
        engine.wake("u1")
        responses = engine.handle_turn("u1", "hello")
        assert len(responses) == 1
        assert responses[0].text.startswith("Hello!")
        assert responses[0].recipient_id == "u1"

    def test_weather_asks_for_location(self, engine):
        engine.wake("u1")
        responses = engine.handle_turn("u1", "what is the weather")
        assert responses[0].text == "Which location should I check the weather for?"

    def test_gibberish_falls_back(self, engine):
        engine.wake("u1")
        responses = engine.handle_turn("u1", "zzqx")
        assert responses[0].text == "Sorry, I didn't catch that. Could you rephrase?"

    def test_empty_message_falls_back(self, engine):
        engine.wake("u1")
        responses = engine.handle_turn("u1", "")
        assert "Sorry" in responses[0].text

    def test_goodbye_pauses_session(self, engine):
        engine.wake("u1")
        assert engine.listening("u1")
        responses = engine.handle_turn("u1", "goodbye")
        assert responses[0].text.startswith("Goodbye")
        tracker = engine.tracker("u1")
        assert tracker.paused and not engine.listening("u1")
        assert any(e.type == CONVERSATION_PAUSED for e in tracker.events)

    def test_response_variants_cycle(self, engine):
        engine.wake("u1")
        first = engine.handle_turn("u1", "hello")[0].text
        second = engine.handle_turn("u1", "hello")[0].text
        third = engine.handle_turn("u1", "hello")[0].text
        assert first != second  # two variants shipped
        assert third == first

    def test_slot_autofill_from_entities(self, engine):
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        engine.handle_turn("u1", "Mumbai")
        slots = engine.tracker("u1").slots
        assert slots["location"] == "Mumbai"
        assert slots["destination"] == "Mumbai"  # both fill from the location entity

    def test_confirmation_renders_slot_value(self, engine):
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        responses = engine.handle_turn("u1", "Mumbai")
        assert responses[0].text == "I heard Mumbai. Is that right?"

    def test_every_turn_closes_with_listen(self, engine):
        engine.wake("u1")
        for turn in ["hello", "what is the weather", "Mumbai", "yes", "zzqx", "goodbye"]:
            engine.handle_turn("u1", turn)
            actions = executed_actions(engine.tracker("u1"), include_listen=True)
            assert actions[-1] == ACTION_LISTEN

    def test_unknown_location_clears_and_apologizes(self, engine):
        # Nagpur is in the gazetteer but not the weather fixture.
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        engine.handle_turn("u1", "Nagpur")
        responses = engine.handle_turn("u1", "yes")
        assert "couldn't find weather" in responses[0].text
        assert engine.tracker("u1").slots["location"] is None


class TestErrorContainment:
    def test_provider_outage_mid_story(self, make_engine, mock_providers):
        engine = make_engine(clock=FakeClock(), providers=mock_providers)
        engine.wake("u1")
        engine.handle_turn("u1", "play some music")
        engine.handle_turn("u1", "Stan")
        mock_providers.music.broken = True
        responses = engine.handle_turn("u1", "yes")
        assert len(responses) == 1
        assert "music service isn't responding" in responses[0].text

    def test_crashing_action_becomes_fallback(self, pack_spec, pack_model, mock_providers):
        registry = register_builtin_actions(ActionRegistry())

        def explode(_ctx):
            raise RuntimeError("boom")

        registry.register("action_fetch_weather", explode)
        from vehicle_assistant.core.engine import DialogueEngine

        engine = DialogueEngine(pack_spec, pack_model, mock_providers, registry, clock=FakeClock())
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        engine.handle_turn("u1", "Mumbai")
        responses = engine.handle_turn("u1", "yes")
        assert "Sorry" in responses[0].text
        assert ACTION_DEFAULT_FALLBACK in executed_actions(engine.tracker("u1"))

    def test_loop_guard_bounds_runaway_rules(self, mock_providers):
        docs = {
            "domain.yml": "intents:\n  - ping\nresponses:\n  utter_echo:\n    - echo\n",
            "nlu.yml": "intents:\n  ping:\n    - ping\n    - pong\n    - beep\n",
            "rules.yml": "rules:\n  - rule: spin\n    trigger: ping\n    then:\n"
            + "".join("      - utter_echo\n" for _ in range(30)),
        }
        spec = parse_domain(docs)
        model = train(spec)
        from vehicle_assistant.core.engine import DialogueEngine

        engine = DialogueEngine(
            spec, model, mock_providers, register_builtin_actions(ActionRegistry()), clock=FakeClock()
        )
        engine.wake("u1")
        responses = engine.handle_turn("u1", "ping")
        actions = executed_actions(engine.tracker("u1"), include_listen=True)
        assert actions[-1] == ACTION_LISTEN
        assert len([a for a in actions if a != ACTION_LISTEN]) <= 21  # 20 + the fallback
        assert "Sorry" in responses[-1].text

    def test_missing_action_implementation_rejected_at_startup(self, pack_spec, pack_model, mock_providers):
        from vehicle_assistant.actions.base import ActionError
        from vehicle_assistant.core.engine import DialogueEngine

        with pytest.raises(ActionError, match="no implementation"):
            DialogueEngine(pack_spec, pack_model, mock_providers, ActionRegistry())


class TestDenyRetries:
    def test_three_reasks_then_abort(self, engine):
        engine.wake("u1")
        engine.handle_turn("u1", "play some music")
        ask = "Which song should I play?"
        for value in ["Sunlight", "Believer", "Numb"]:
            engine.handle_turn("u1", value)
            responses = engine.handle_turn("u1", "no")
            assert responses[0].text == ask
        engine.handle_turn("u1", "Stan")
        responses = engine.handle_turn("u1", "no")  # fourth deny aborts
        assert "Sorry" in responses[0].text

    def test_deny_then_affirm_completes(self, engine):
        engine.wake("u1")
        engine.handle_turn("u1", "directions")
        engine.handle_turn("u1", "Delhi")
        engine.handle_turn("u1", "no")
        engine.handle_turn("u1", "New York")
        responses = engine.handle_turn("u1", "yes")
        assert "Route from Pune to New York" in responses[0].text


class TestMultiTaskSessions:
    def test_tasks_chain_without_rewaking(self, engine):
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        engine.handle_turn("u1", "Mumbai")
        engine.handle_turn("u1", "yes")
        engine.handle_turn("u1", "play some music")
        engine.handle_turn("u1", "Stan")
        responses = engine.handle_turn("u1", "yes")
        assert responses[0].text == "Now playing Stan by Eminem."

    def test_direct_song_request_skips_the_ask(self, engine):
        engine.wake("u1")
        confirm = engine.handle_turn("u1", "play Stan")
        assert confirm[0].text == "You want to hear Stan. Is that right?"
        responses = engine.handle_turn("u1", "yes")
        assert responses[0].text == "Now playing Stan by Eminem."

    def test_bare_location_stays_ambiguous(self, engine):
        # weather or navigation? a cold city name cannot pick a flow
        engine.wake("u1")
        responses = engine.handle_turn("u1", "Mumbai")
        assert "Sorry" in responses[0].text

    def test_same_value_reused_across_tasks(self, engine):
        # The second task mentions the same city; the repeated SlotSet must
        # still register so the navigation story matches.
        engine.wake("u1")
        engine.handle_turn("u1", "what is the weather")
        engine.handle_turn("u1", "Mumbai")
        engine.handle_turn("u1", "yes")
        engine.handle_turn("u1", "directions")
        confirm = engine.handle_turn("u1", "Mumbai")
        assert confirm[0].text == "You want directions to Mumbai. Is that right?"
        responses = engine.handle_turn("u1", "yes")
        assert "Route from Pune to Mumbai" in responses[0].text


class TestPersistence:
    def test_tracker_dir_survives_restart(self, pack_spec, pack_model, tmp_path, make_engine):
        engine = make_engine(clock=FakeClock(), tracker_dir=tmp_path)
        engine.wake("driver")
        engine.handle_turn("driver", "play some music")
        engine.handle_turn("driver", "Stan")

        rebuilt = make_engine(clock=FakeClock(start=10_000), tracker_dir=tmp_path)
        assert rebuilt.tracker("driver").slots["song"] == "Stan"
        responses = rebuilt.handle_turn("driver", "yes")
        assert responses[0].text == "Now playing Stan by Eminem."
