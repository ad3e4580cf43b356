"""Records that cross module boundaries: user messages in, bot responses out."""

from __future__ import annotations

from dataclasses import dataclass

MEDIA_TRACK = "track"
MEDIA_ROUTE = "route"


@dataclass(frozen=True)
class MediaRef:
    """Pointer to something the UI can render (a playing track, a route map)."""

    kind: str  # "track" | "route"
    ref: str


@dataclass(frozen=True)
class ChannelMessage:
    sender: str
    message: str


@dataclass(frozen=True)
class BotResponse:
    recipient_id: str
    text: str
    media: MediaRef | None = None

    def to_dict(self) -> dict:
        payload: dict = {"recipient_id": self.recipient_id, "text": self.text}
        if self.media is not None:
            payload["media"] = {"kind": self.media.kind, "ref": self.media.ref}
        return payload
