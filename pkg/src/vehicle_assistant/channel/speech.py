"""Adapter seam where speech engines would plug in.

The engine core only ever sees text; a real deployment would wire a
speech-to-text/text-to-speech pair here. The shipped adapter is an
identity-on-text passthrough so the rest of the system (and its tests) can
exercise the seam without audio hardware.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass


class TranscriptionError(Exception):
    """Audio could not be transcribed; channels treat the turn as empty."""


@dataclass
class SpeechAdapter(ABC):
    """Contract for pluggable speech engines, with the usual voice knobs."""

    voice: str = "default"
    rate: float = 1.0
    volume: float = 1.0

    @abstractmethod
    def transcribe(self, audio: bytes) -> str:
        """Speech to text. Raises TranscriptionError when unintelligible."""

    @abstractmethod
    def synthesize(self, text: str) -> bytes:
        """Text to speech audio bytes."""


@dataclass
class TextPassthroughAdapter(SpeechAdapter):
    """Identity adapter: "audio" is UTF-8 text. Used by tests and the REPL."""

    def transcribe(self, audio: bytes) -> str:
        try:
            return audio.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TranscriptionError(str(exc)) from exc

    def synthesize(self, text: str) -> bytes:
        return text.encode("utf-8")
