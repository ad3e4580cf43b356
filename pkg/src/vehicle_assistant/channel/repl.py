"""Interactive terminal channel with the same wake gating as the webhook."""

from __future__ import annotations

import sys
from typing import TextIO

from ..core.engine import DialogueEngine
from ..wire import BotResponse
from .speech import SpeechAdapter, TranscriptionError
from .wake import DEFAULT_WAKE_WORD, WakeState

QUIT_COMMAND = "/quit"
RESET_COMMAND = "/reset"

REPL_SENDER = "repl"


def _print_responses(responses: list[BotResponse], out: TextIO) -> None:
    for response in responses:
        out.write(f"bot> {response.text}\n")
        if response.media is not None:
            out.write(f"bot> [{response.media.kind}] {response.media.ref}\n")
    out.flush()


def repl_channel(
    engine: DialogueEngine,
    wake_word: str = DEFAULT_WAKE_WORD,
    input_stream: TextIO | None = None,
    output_stream: TextIO | None = None,
    speech: SpeechAdapter | None = None,
    sender_id: str = REPL_SENDER,
) -> int:
    """Read lines, print bot responses, honor wake gating. Returns exit code.

    ``/quit`` (or EOF) exits cleanly; ``/reset`` clears the conversation.
    Lines pass through the speech adapter when one is given, so a
    TranscriptionError degrades to an empty (fallback) turn.
    """
    stdin = input_stream if input_stream is not None else sys.stdin
    out = output_stream if output_stream is not None else sys.stdout
    gate = WakeState(engine, wake_word)
    prompt = stdin.isatty() if hasattr(stdin, "isatty") else False

    while True:
        if prompt:
            out.write("you> ")
            out.flush()
        line = stdin.readline()
        if not line:  # EOF
            break
        text = line.rstrip("\n")
        if text.strip() == QUIT_COMMAND:
            break
        if text.strip() == RESET_COMMAND:
            engine.reset(sender_id)
            out.write("(conversation reset)\n")
            out.flush()
            continue
        if speech is not None:
            try:
                text = speech.transcribe(text.encode("utf-8"))
            except TranscriptionError:
                text = ""
        _print_responses(gate.accept(sender_id, text), out)
    return 0
