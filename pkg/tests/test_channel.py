"""Channel layer: wake detection, webhook wire contract, REPL, speech seam."""

from __future__ import annotations

import io
import json
import threading
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from conftest import FakeClock
from vehicle_assistant.channel.repl import repl_channel
from vehicle_assistant.channel.server import WEBHOOK_PATH, create_app
from vehicle_assistant.channel.speech import SpeechAdapter, TextPassthroughAdapter, TranscriptionError
from vehicle_assistant.channel.wake import WakeState, detect_wake

GOLDEN_DIR = Path(__file__).parent / "golden"
FRONTEND_GOLDEN = Path(__file__).parent.parent / "frontend" / "tests" / "fixtures" / "golden_music.json"


class TestDetectWake:
    def test_bare_wake_word(self):
        assert detect_wake("coffee")

    def test_case_insensitive_within_sentence(self):
        assert detect_wake("COFFEE please")

    def test_substring_is_not_a_token(self):
        assert not detect_wake("coffeepot")

    def test_custom_wake_word(self):
        assert detect_wake("hey jarvis", wake_word="jarvis")
        assert not detect_wake("coffee", wake_word="jarvis")


class TestWakeGating:
    def test_dormant_sender_gets_silence(self, engine):
        gate = WakeState(engine)
        assert gate.accept("u1", "hello") == []
        assert gate.state("u1") == "dormant"

    def test_wake_then_listen(self, engine):
        gate = WakeState(engine)
        ack = gate.accept("u1", "coffee")
        assert [r.text for r in ack] == ["I'm listening. How can I help?"]
        assert gate.state("u1") == "listening"
        assert gate.accept("u1", "hello")[0].text.startswith("Hello!")

    def test_goodbye_pauses_until_wake_recurs(self, engine):
        gate = WakeState(engine)
        gate.accept("u1", "coffee")
        gate.accept("u1", "goodbye")
        assert gate.state("u1") == "dormant"
        assert gate.accept("u1", "hello") == []
        assert gate.accept("u1", "are you there") == []
        ack = gate.accept("u1", "coffee")
        assert len(ack) == 1
        assert gate.accept("u1", "hello") != []

    def test_no_response_precedes_first_wake(self, engine):
        gate = WakeState(engine)
        script = ["hello", "what is the weather", "yes", "coffee", "hello"]
        responses = [gate.accept("u1", msg) for msg in script]
        assert responses[:3] == [[], [], []]
        assert responses[3] != []


@pytest.fixture()
def client(make_engine):
    return TestClient(create_app(make_engine(clock=FakeClock())))


def _golden(name: str) -> dict:
    return json.loads((GOLDEN_DIR / f"{name}.json").read_text(encoding="utf-8"))


def _replay_golden(client: TestClient, doc: dict) -> None:
    for turn in doc["turns"]:
        resp = client.post(WEBHOOK_PATH, json=turn["request"])
        assert resp.status_code == turn["status"]
        assert resp.json() == turn["response"]


class TestWebhook:
    @pytest.mark.parametrize("name", ["wake_ack", "greet", "weather_flow"])
    def test_golden_transcripts(self, client, name):
        _replay_golden(client, _golden(name))

    def test_music_golden_shared_with_console(self, client):
        _replay_golden(client, json.loads(FRONTEND_GOLDEN.read_text(encoding="utf-8")))

    def test_empty_object_is_400(self, client):
        resp = client.post(WEBHOOK_PATH, json={})
        assert resp.status_code == 400
        assert "error" in resp.json()

    def test_malformed_json_is_400(self, client):
        resp = client.post(WEBHOOK_PATH, content=b"{not json", headers={"content-type": "application/json"})
        assert resp.status_code == 400

    def test_empty_sender_is_400(self, client):
        resp = client.post(WEBHOOK_PATH, json={"sender": "", "message": "hi"})
        assert resp.status_code == 400

    def test_missing_message_is_400(self, client):
        resp = client.post(WEBHOOK_PATH, json={"sender": "u1"})
        assert resp.status_code == 400

    def test_response_shape_and_recipient(self, client):
        client.post(WEBHOOK_PATH, json={"sender": "shape", "message": "coffee"})
        for message in ("hello", "what is the weather", "Mumbai"):
            resp = client.post(WEBHOOK_PATH, json={"sender": "shape", "message": message})
            assert resp.status_code == 200
            payload = resp.json()
            assert isinstance(payload, list)
            for item in payload:
                assert item["recipient_id"] == "shape"
                assert isinstance(item["text"], str)

    def test_health_reports_model_fingerprint(self, client, pack_model):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["model_fingerprint"] == pack_model.fingerprint()

    def test_empty_message_yields_fallback(self, client):
        client.post(WEBHOOK_PATH, json={"sender": "e", "message": "coffee"})
        resp = client.post(WEBHOOK_PATH, json={"sender": "e", "message": ""})
        assert resp.status_code == 200
        assert "Sorry" in resp.json()[0]["text"]

    def test_internal_failure_returns_500_body(self, make_engine, monkeypatch):
        engine = make_engine(clock=FakeClock())
        monkeypatch.setattr(
            engine, "handle_turn", lambda *a, **k: (_ for _ in ()).throw(RuntimeError("kaput"))
        )
        client = TestClient(create_app(engine), raise_server_exceptions=False)
        client.post(WEBHOOK_PATH, json={"sender": "u", "message": "coffee"})
        resp = client.post(WEBHOOK_PATH, json={"sender": "u", "message": "hello"})
        assert resp.status_code == 500
        assert "error" in resp.json()


SCRIPTS = [
    ["coffee", "hello", "what is the weather", "Mumbai", "yes", "goodbye"],
    ["coffee", "play some music", "Stan", "yes", "latest news", "no"],
    ["coffee", "directions", "New York", "yes", "goodbye", "coffee"],
    ["coffee", "make a call", "John", "yes", "hello", "goodbye"],
    ["coffee", "latest news", "yes", "no", "play some music", "Sunlight"],
]


def _script_for(sender_index: int) -> list[str]:
    return SCRIPTS[sender_index % len(SCRIPTS)]


class TestConcurrency:
    def test_fifty_interleaved_senders_match_serial(self, make_engine):
        serial_engine = make_engine()
        serial: dict[str, list] = {}
        for i in range(50):
            sender = f"s{i}"
            transcript = []
            gate = WakeState(serial_engine)
            for message in _script_for(i):
                transcript.append([r.to_dict() for r in gate.accept(sender, message)])
            serial[sender] = transcript

        app = create_app(make_engine())
        client = TestClient(app)
        results: dict[str, list] = {}
        lock = threading.Lock()

        def drive(i: int) -> None:
            sender = f"s{i}"
            transcript = []
            for message in _script_for(i):
                resp = client.post(WEBHOOK_PATH, json={"sender": sender, "message": message})
                assert resp.status_code == 200
                transcript.append(resp.json())
            with lock:
                results[sender] = transcript

        with ThreadPoolExecutor(max_workers=50) as pool:
            list(pool.map(drive, range(50)))

        assert results == serial


class TestRepl:
    def test_golden_script(self, engine):
        stdin = io.StringIO("coffee\nhello\n/quit\n")
        stdout = io.StringIO()
        code = repl_channel(engine, input_stream=stdin, output_stream=stdout)
        assert code == 0
        assert stdout.getvalue() == (
            "bot> I'm listening. How can I help?\n"
            "bot> Hello! How can I help you on the road?\n"
        )

    def test_reset_clears_conversation(self, engine):
        stdin = io.StringIO("coffee\nwhat is the weather\nMumbai\n/reset\n/quit\n")
        stdout = io.StringIO()
        repl_channel(engine, input_stream=stdin, output_stream=stdout)
        assert "(conversation reset)" in stdout.getvalue()
        tracker = engine.tracker("repl")
        assert tracker.events == ()

    def test_eof_exits_cleanly(self, engine):
        code = repl_channel(engine, input_stream=io.StringIO("coffee\n"), output_stream=io.StringIO())
        assert code == 0

    def test_media_rendered_as_line(self, engine):
        stdin = io.StringIO("coffee\nplay some music\nStan\nyes\n/quit\n")
        stdout = io.StringIO()
        repl_channel(engine, input_stream=stdin, output_stream=stdout)
        assert "bot> [track] trk_001" in stdout.getvalue()


class BrokenAdapter(SpeechAdapter):
    def transcribe(self, audio: bytes) -> str:
        raise TranscriptionError("static")

    def synthesize(self, text: str) -> bytes:
        return b""


class TestSpeechAdapter:
    def test_passthrough_identity(self):
        adapter = TextPassthroughAdapter()
        assert adapter.transcribe(b"hello") == "hello"
        assert adapter.synthesize("hi") == b"hi"
        assert adapter.voice == "default" and adapter.rate == 1.0 and adapter.volume == 1.0

    def test_transcription_error_becomes_fallback_turn(self, engine):
        stdin = io.StringIO("coffee\nhello\n/quit\n")
        stdout = io.StringIO()
        repl_channel(engine, input_stream=stdin, output_stream=stdout, speech=BrokenAdapter())
        # "coffee" never transcribes, so the session stays dormant: silence.
        assert stdout.getvalue() == ""

    def test_transcription_error_while_listening(self, engine):
        engine.wake("repl")
        stdin = io.StringIO("hello\n/quit\n")
        stdout = io.StringIO()
        repl_channel(engine, input_stream=stdin, output_stream=stdout, speech=BrokenAdapter())
        assert "Sorry" in stdout.getvalue()

    def test_passthrough_in_repl_is_transparent(self, engine):
        stdin = io.StringIO("coffee\nhello\n/quit\n")
        stdout = io.StringIO()
        repl_channel(engine, input_stream=stdin, output_stream=stdout, speech=TextPassthroughAdapter())
        assert "Hello!" in stdout.getvalue()
