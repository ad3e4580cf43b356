"""Channels: REST webhook, terminal REPL, wake gating, speech seam."""

from .repl import repl_channel
from .server import WEBHOOK_PATH, create_app
from .speech import SpeechAdapter, TextPassthroughAdapter, TranscriptionError
from .wake import DEFAULT_WAKE_WORD, DORMANT, LISTENING, WakeState, detect_wake

__all__ = [
    "DEFAULT_WAKE_WORD",
    "DORMANT",
    "LISTENING",
    "SpeechAdapter",
    "TextPassthroughAdapter",
    "TranscriptionError",
    "WEBHOOK_PATH",
    "WakeState",
    "create_app",
    "detect_wake",
    "repl_channel",
]
