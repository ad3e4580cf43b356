"""Wake-word gating: dormant senders get nothing but a wake acknowledgment."""

from __future__ import annotations

from ..core.engine import DialogueEngine
from ..wire import BotResponse

DEFAULT_WAKE_WORD = "coffee"

DORMANT = "dormant"
LISTENING = "listening"


def detect_wake(message: str, wake_word: str = DEFAULT_WAKE_WORD) -> bool:
    """True iff some whitespace-delimited token equals the wake word,
    case-insensitively. Substrings ("coffeepot") do not count."""
    target = wake_word.lower()
    return any(token.lower() == target for token in message.split())


class WakeState:
    """Per-sender dormant/listening gate in front of the engine.

    The flag is derived from the tracker (the goodbye rule pauses the
    session), so every channel sharing the engine agrees on it.
    """

    def __init__(self, engine: DialogueEngine, wake_word: str = DEFAULT_WAKE_WORD):
        self.engine = engine
        self.wake_word = wake_word

    def state(self, sender_id: str) -> str:
        return LISTENING if self.engine.listening(sender_id) else DORMANT

    def accept(self, sender_id: str, message: str) -> list[BotResponse]:
        """Route one message through the gate: wake ack, full turn, or silence."""
        if self.state(sender_id) == LISTENING:
            return self.engine.handle_turn(sender_id, message)
        if detect_wake(message, self.wake_word):
            return self.engine.wake(sender_id)
        return []
